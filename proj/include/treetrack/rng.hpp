#pragma once

#include <cstdint>

namespace treetrack {

// splitmix64. Self-contained so identical seeds give identical streams on
// every platform and standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). Fixed-point multiply; bias is O(bound/2^64).
  uint64_t below(uint64_t bound) {
    return static_cast<uint64_t>(
        (static_cast<__uint128_t>(next()) * bound) >> 64);
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Independent stream for (master seed, stream index) pairs.
  static uint64_t derive(uint64_t master, uint64_t stream) {
    Rng r(master ^ (0x632be59bd9b4e019ull * (stream + 1)));
    r.next();
    return r.next();
  }

 private:
  uint64_t state_;
};

}  // namespace treetrack
