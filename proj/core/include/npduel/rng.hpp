#pragma once

#include <cstdint>
#include <random>

namespace npduel {

using Rng = std::mt19937_64;

namespace detail {

// splitmix64 step, used only to turn seed material into engine state.
inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

inline Rng make_rng(std::uint64_t seed) {
  std::uint64_t x = seed;
  return Rng(detail::splitmix64(x));
}

/// Independent stream for (master seed, stream index). Multi-shot experiments
/// draw one stream per shot so results do not depend on evaluation order.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed;
  std::uint64_t a = detail::splitmix64(x);
  x = a ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
  return Rng(detail::splitmix64(x));
}

}  // namespace npduel
