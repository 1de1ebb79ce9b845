#ifndef NMETRICS_RNG_HPP
#define NMETRICS_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace nmetrics {

/// One splitmix64 mixing step.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/**
 * @brief Derives a stream seed from a base seed and a tuple of tags.
 *
 * Distinct tag tuples give independent streams, and any stream can be
 * recreated in isolation from the base seed alone. All randomness in the
 * library flows through seeds produced here; there is no global RNG state.
 */
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t base,
                                                  std::initializer_list<std::uint64_t> tags) noexcept {
  std::uint64_t s = mix64(base);
  for (std::uint64_t t : tags) {
    s = mix64(s ^ mix64(t));
  }
  return s;
}

/// Uniform double in [0, 1) built from the top 53 bits of the engine output,
/// identical on every platform.
[[nodiscard]] inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
[[nodiscard]] inline double uniform_in(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform01(gen);
}

}  // namespace nmetrics

#endif  // NMETRICS_RNG_HPP
