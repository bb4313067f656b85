#ifndef FEWPROD_RNG_HPP
#define FEWPROD_RNG_HPP

#include <cstdint>

namespace fewprod {

// SplitMix64 (Steele/Lea/Flood constants). Same seed gives the same stream on
// every platform; this is the only randomness source in the library. Reference
// vectors from seed 0 are pinned in the tests and in the README.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Deterministic cross-platform reduction; modulo bias is irrelevant here,
    // stability of the stream is what matters.
    std::uint64_t next_below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Signed draw in [lo, hi], inclusive.
    long next_in(long lo, long hi) {
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

}  // namespace fewprod

#endif
