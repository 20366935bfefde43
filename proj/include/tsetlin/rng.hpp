#pragma once

#include <cmath>
#include <cstdint>

namespace tsetlin {

// Splitmix64 stream. Deterministic across platforms (no libstdc++
// distribution objects), seedable, and splittable: each clause gets its
// own derived substream so parallel and serial training draw identical
// numbers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log() argument.
  double uniform_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Derives an independent substream keyed by `tag` without advancing
  // this stream. Same (state, tag) always yields the same child.
  Rng split(std::uint64_t tag) const {
    std::uint64_t z = state_ + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

  template <typename T>
  void shuffle(T* data, std::size_t n) {
    for (std::size_t i = n; i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      T tmp = data[i - 1];
      data[i - 1] = data[j];
      data[j] = tmp;
    }
  }

 private:
  std::uint64_t state_;
};

// Calls f(i) for every i in [0, n) where an independent Bernoulli(p)
// event fires, visiting events in ascending order. Uses geometric gap
// sampling, so the cost is O(n * p) draws instead of n.
template <typename F>
void bernoulli_scan(std::uint64_t n, double p, Rng& rng, F&& f) {
  if (p <= 0.0 || n == 0) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < n; ++i) f(i);
    return;
  }
  const double log1mp = std::log1p(-p);
  std::uint64_t i = 0;
  while (true) {
    double gap = std::floor(std::log(rng.uniform_pos()) / log1mp);
    if (gap >= static_cast<double>(n)) return;  // overflow guard
    i += static_cast<std::uint64_t>(gap);
    if (i >= n) return;
    f(i);
    ++i;
  }
}

}  // namespace tsetlin
