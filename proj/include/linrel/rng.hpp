#pragma once

#include <cstdint>

namespace linrel {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0) {
    return splitmix64(splitmix64(seed ^ splitmix64(salt)) + index);
}

/*
 * Counter-based stream keyed by (seed, index, salt). Draws depend only on the
 * key and the draw count, never on thread scheduling or the standard
 * library's distribution implementations.
 */
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0) : key_(mix_seed(seed, index, salt)) {}

    std::uint64_t next() { return splitmix64(key_ + 0x632BE59BD9B4E019ULL * ++counter_); }

    // Uniform integer in [lo, hi], unbiased by rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace linrel
