#pragma once

#include <cstdint>
#include <string_view>

namespace zsr {

// SplitMix64. The state advance is fixed so that splits and synthetic data
// reproduce across implementations and languages; seed 0 must yield
// 0xE220A8397B1DCDAF as the first output.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 significant bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in {0, ..., n-1}. Modulo bias is negligible for the class and
    // index counts this project draws.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

    // Standard normal via Box-Muller; pairs are cached.
    double next_gaussian();

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

// FNV-1a, used to derive seeds from strings (class names, stream tags).
std::uint64_t fnv1a64(std::string_view s);

// Mixes a seed with a tag so sub-streams are independent but reproducible.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL + tag));
    return g.next();
}

}  // namespace zsr
