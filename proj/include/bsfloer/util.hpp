#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsf {

// splitmix64: deterministic stream from a seed, used everywhere randomness
// is needed so results are reproducible from (inputs, seed).
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    return next() % n;
  }
};

struct CheckFailure : std::runtime_error {
  explicit CheckFailure(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw CheckFailure(msg);
}

}  // namespace bsf
