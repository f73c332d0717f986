#pragma once

#include <cstdint>
#include <vector>

namespace gridmind {

// Seeded generator used everywhere randomness is needed. Algorithm is
// xoshiro256** (state expanded from the 64-bit seed via splitmix64), so the
// same seed produces the same stream on every platform. Pinned as
// "xoshiro256**-1.0" in the README; changing it invalidates all golden
// fixtures and recorded runs.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  // Unbiased integer in [0, bound). bound must be > 0.
  uint64_t uniform(uint64_t bound);

  double uniform_double();  // [0, 1)

  // Derive an independent stream; deterministic in (current seed, stream).
  // Does not consume state from this generator.
  Rng fork(uint64_t stream) const;

  // k distinct indices drawn from [0, n), in draw order.
  std::vector<int> sample_indices(int n, int k);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  uint64_t state_[4];
  uint64_t seed_;
};

}  // namespace gridmind
