#ifndef OTD_RNG_HPP
#define OTD_RNG_HPP

#include <cstdint>

namespace otd {

// SplitMix64. Fixed algorithm so that seeded runs are reproducible across
// platforms and standard library versions; all randomized operations take one
// of these by reference and document every draw in their logs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi]. Modulo bias is irrelevant here: draws only need to
    // hit generic points of a large set, and determinism is what matters.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    // Independent child stream; deterministic function of the parent state.
    Rng split() { return Rng(next() ^ 0x5851f42d4c957f2dULL); }

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
        Rng g(seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
        return g.next();
    }

private:
    std::uint64_t state_;
};

} // namespace otd

#endif
