#pragma once

#include <stdexcept>
#include <string>

namespace zsr {

// Base for all library errors. Subtypes exist so callers (and tests) can
// distinguish failure classes without parsing messages.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Tensor shape or dimension disagreement.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Invalid or inconsistent configuration (segment size, fused lengths, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Keypoint geometry that cannot produce a usable box.
class PoseError : public Error {
public:
    using Error::Error;
};

// A clip with no frames.
class EmptyClipError : public Error {
public:
    using Error::Error;
};

// Zero-norm vectors where a direction is required.
class EmbeddingError : public Error {
public:
    using Error::Error;
};

// Split/evaluation protocol misuse (empty candidate sets, unseen labels
// in training data, K too small, ...).
class ProtocolError : public Error {
public:
    using Error::Error;
};

// Manifest or table contents that fail validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Filesystem and serialization failures.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace zsr
