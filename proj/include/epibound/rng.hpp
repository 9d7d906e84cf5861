#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace epibound {

/// SplitMix64 finalizer (Vigna). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Output at position `stream` of the SplitMix64 sequence keyed by `seed`.
/// This is the addressing scheme for every random stream in the library:
/// a trial, a graph sample, or a seed placement each gets its own
/// (seed, stream) pair, and nested contexts chain derivations.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed + (stream + 1) * 0x9e3779b97f4a7c15ULL);
}

/// Chained derivation for nested contexts, e.g. (master, {cell, rep, purpose}).
inline std::uint64_t derive_seed_path(std::uint64_t seed,
                                      std::initializer_list<std::uint64_t> path) {
  for (std::uint64_t p : path) seed = derive_seed(seed, p);
  return seed;
}

/// One reproducible random stream. The engine is std::mt19937_64, whose
/// update and single-seed construction are pinned by the standard, so a
/// given (seed, stream) pair yields the same draws on every platform.
/// Uniform values are produced by hand; std::uniform_*_distribution is
/// implementation-defined and would break byte reproducibility.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream)
      : engine_(derive_seed(seed, stream)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0,1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, n). Masked rejection, unbiased.
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(n - 1);
    for (;;) {
      std::uint64_t v = engine_() & mask;
      if (v < n) return v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace epibound
