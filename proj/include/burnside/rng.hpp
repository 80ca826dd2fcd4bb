#pragma once

#include <cstdint>
#include <random>

namespace burnside {

// Reproducible stream derivation: the engine is an mt19937_64 seeded from
// splitmix64 applied to (master_seed, stream_index). Distinct stream indices
// give independent-for-practical-purposes streams; identical
// (master_seed, stream_index) pairs give bit-identical sequences everywhere.
class RngStream {
public:
    explicit RngStream(std::uint64_t master_seed, std::uint64_t stream_index = 0)
        : master_seed_(master_seed), stream_index_(stream_index) {
        std::uint64_t s = splitmix64(master_seed ^ splitmix64(stream_index + 0x9e3779b97f4a7c15ull));
        engine_.seed(s);
    }

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    // Uniform on {0, ..., bound-1} via rejection; exact, platform-independent.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % bound;
    }

    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(uniform_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double uniform01() { return (engine_() >> 11) * 0x1.0p-53; }

    RngStream substream(std::uint64_t index) const {
        return RngStream(splitmix64(master_seed_ ^ (stream_index_ * 0xbf58476d1ce4e5b9ull)), index);
    }

private:
    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::uint64_t master_seed_, stream_index_;
    std::mt19937_64 engine_;
};

}  // namespace burnside
