#ifndef NORMDIST_RNG_HPP
#define NORMDIST_RNG_HPP

#include <cstdint>
#include <stdexcept>

#include "normdist/rational.hpp"

namespace normdist {

// splitmix64 stream. Hand-rolled so that outputs are identical across
// platforms and standard-library versions; all randomness in the project
// flows through this, keyed by a single user seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed) {}

  uint64_t next_u64() {
    s_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = s_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi], inclusive.
  int64_t next_int(int64_t lo, int64_t hi) {
    if (lo > hi) throw std::invalid_argument("Rng::next_int: empty range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(next_u64() % span);
  }

  // Uniform rational p/q with p in [-max_num, max_num], q in [1, max_den].
  Rational next_rational(long max_num, long max_den) {
    long num = static_cast<long>(next_int(-max_num, max_num));
    long den = static_cast<long>(next_int(1, max_den));
    return Rational(num, den);
  }

  // Nonzero variant of next_rational.
  Rational next_nonzero_rational(long max_num, long max_den) {
    for (;;) {
      Rational r = next_rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  // Independent child stream; order of draws on the child does not disturb
  // the parent sequence.
  Rng fork(uint64_t tag) {
    uint64_t z = next_u64();
    return Rng(z ^ (0x9E3779B97F4A7C15ULL * (tag + 1)));
  }

 private:
  uint64_t s_;
};

}  // namespace normdist

#endif  // NORMDIST_RNG_HPP
