#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include "pcg_paradox/error.hpp"

namespace pcg_paradox {

using complex_t = std::complex<double>;

/// Largest register handled by the dense simulator (amplitude count).
inline constexpr std::size_t max_amplitudes = std::size_t{1} << 24;

/// Pairwise (tree) summation. Fixed association order, so results are
/// bit-stable for a given input regardless of how callers iterate.
template <typename F>
double pairwise_sum(std::size_t begin, std::size_t end, const F& term) {
  if (end - begin <= 8) {
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return pairwise_sum(begin, mid, term) + pairwise_sum(mid, end, term);
}

inline double pairwise_sum(std::span<const double> values) {
  return pairwise_sum(0, values.size(), [&](std::size_t i) { return values[i]; });
}

inline double squared_norm(std::span<const complex_t> amps) {
  return pairwise_sum(0, amps.size(), [&](std::size_t i) { return std::norm(amps[i]); });
}

/// d^n, throwing TooLarge once the result exceeds `cap`.
inline std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap = max_amplitudes) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (result > cap / base) {
      throw Error(ErrorCode::TooLarge, "register of " + std::to_string(exp) + " sites of dimension " +
                                           std::to_string(base) + " exceeds the dense simulator cap");
    }
    result *= base;
  }
  return result;
}

/// e^{2 pi i k / d}
inline complex_t root_of_unity(int k, int d) {
  const double pi = 3.14159265358979323846;
  const int r = ((k % d) + d) % d;
  if (2 * r == d) return {-1.0, 0.0};
  if (r == 0) return {1.0, 0.0};
  if (4 * r == d) return {0.0, 1.0};
  if (4 * r == 3 * d) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * pi * r / d);
}

}  // namespace pcg_paradox
