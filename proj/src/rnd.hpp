#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "rat.hpp"

namespace fuchsia {

// Deterministic splitmix64 stream; identical across platforms so seeded
// certificates reproduce byte for byte.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi]
  long uniform(long lo, long hi) {
    return lo + long(next() % uint64_t(hi - lo + 1));
  }

  // small random rational with denominator from a fixed odd set
  Rat rat_small() {
    static const long dens[] = {5, 7, 9, 11, 13};
    long num = uniform(-23, 23);
    if (num == 0) num = 1;
    return rat(num, dens[next() % 5]);
  }

  // redraw until the predicate accepts (predicate true = usable)
  template <class T, class Gen, class Ok>
  T draw_until(Gen gen, Ok ok, int budget = 1000) {
    for (int i = 0; i < budget; ++i) {
      T v = gen();
      if (ok(v)) return v;
    }
    fail(ErrorKind::Internal, "exhausted the redraw budget");
  }

 private:
  uint64_t state_;
};

// stable FNV-1a, used to derive per-check subseeds from check ids
inline uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace fuchsia
