#pragma once

// SplitMix64 (Steele, Lea & Flood 2014). The whole generator is these
// constants, so a sequence can be reproduced in any language:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Derived quantities avoid <random> distributions, whose output is
// implementation-defined:
//   below(n)   rejection sampling: draw x until x >= (2^64 - n) mod n, return x mod n
//   unit_open  ((x >> 11) + 1) * 2^-53, in (0, 1]

#include <cstdint>
#include <span>
#include <utility>

namespace agrodevs {

class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t operator()() noexcept { return next(); }
    static constexpr std::uint64_t min() noexcept { return 0; }
    static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

    /// Uniform integer in [0, n). n must be positive.
    constexpr std::uint64_t below(std::uint64_t n) noexcept {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

    /// Uniform double in (0, 1].
    constexpr double unit_open() noexcept {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    constexpr std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// Independent stream for a purpose tag, so that e.g. climate draws do not
/// shift when the landscape size changes.
constexpr SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t tag) noexcept {
    SplitMix64 mix(seed ^ (tag * 0xD1B54A32D192ED03ULL));
    return SplitMix64(mix.next());
}

inline constexpr std::uint64_t kInitStream = 1;
inline constexpr std::uint64_t kClimateStream = 2;

/// Fisher-Yates, highest index first.
template <class T>
void shuffle(std::span<T> items, SplitMix64& rng) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

}  // namespace agrodevs
