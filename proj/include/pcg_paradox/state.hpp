#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcg_paradox/numeric.hpp"
#include "pcg_paradox/pcg.hpp"

namespace pcg_paradox {

/// Dense amplitudes of a register of `num_sites` qudits of dimension `site_dim`.
/// Site 1 is the most significant digit: index = sum_i digit_i * d^(n-i).
class StateVector {
 public:
  static constexpr double norm_tolerance = 1e-10;

  StateVector(int num_sites, int site_dim, std::vector<complex_t> amps)
      : num_sites_(num_sites), site_dim_(site_dim), amps_(std::move(amps)) {
    if (site_dim < 2) throw Error(ErrorCode::BadDim, "site dimension must be at least 2");
    if (num_sites < 0) throw Error(ErrorCode::WrongShape, "negative site count");
    const std::size_t expected = checked_pow(static_cast<std::size_t>(site_dim), static_cast<std::size_t>(num_sites));
    if (amps_.size() != expected) {
      throw Error(ErrorCode::WrongShape, "expected " + std::to_string(expected) + " amplitudes, got " +
                                             std::to_string(amps_.size()));
    }
    const double norm = std::sqrt(squared_norm(amps_));
    if (std::abs(norm - 1.0) > norm_tolerance) {
      throw Error(ErrorCode::NotNormalized, "state norm is " + std::to_string(norm));
    }
  }

  /// Rescales `amps` to unit norm before constructing.
  static StateVector normalized(int num_sites, int site_dim, std::vector<complex_t> amps) {
    const double norm = std::sqrt(squared_norm(amps));
    if (!(norm > 0.0)) throw Error(ErrorCode::ZeroProbability, "cannot normalize the zero vector");
    for (auto& a : amps) a /= norm;
    return StateVector(num_sites, site_dim, std::move(amps));
  }

  static StateVector basis(int num_sites, int site_dim, std::size_t index) {
    std::vector<complex_t> amps(
        checked_pow(static_cast<std::size_t>(site_dim), static_cast<std::size_t>(num_sites)), 0.0);
    amps.at(index) = 1.0;
    return StateVector(num_sites, site_dim, std::move(amps));
  }

  int num_sites() const noexcept { return num_sites_; }
  int site_dim() const noexcept { return site_dim_; }
  std::size_t size() const noexcept { return amps_.size(); }
  std::span<const complex_t> amps() const noexcept { return amps_; }
  complex_t operator[](std::size_t i) const { return amps_[i]; }

  /// Stride of site s (1-based) in the flat index.
  std::size_t stride(int site) const {
    std::size_t s = 1;
    for (int k = site; k < num_sites_; ++k) s *= static_cast<std::size_t>(site_dim_);
    return s;
  }

  std::size_t index_of(std::span<const int> digits) const {
    if (digits.size() != static_cast<std::size_t>(num_sites_)) {
      throw Error(ErrorCode::BadDigits, "expected " + std::to_string(num_sites_) + " digits");
    }
    std::size_t idx = 0;
    for (int digit : digits) {
      if (digit < 0 || digit >= site_dim_) {
        throw Error(ErrorCode::BadDigits, "digit " + std::to_string(digit) + " outside 0.." +
                                              std::to_string(site_dim_ - 1));
      }
      idx = idx * static_cast<std::size_t>(site_dim_) + static_cast<std::size_t>(digit);
    }
    return idx;
  }

  std::vector<int> digits_of(std::size_t index) const {
    std::vector<int> digits(static_cast<std::size_t>(num_sites_));
    for (int k = num_sites_ - 1; k >= 0; --k) {
      digits[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(site_dim_));
      index /= static_cast<std::size_t>(site_dim_);
    }
    return digits;
  }

 private:
  int num_sites_;
  int site_dim_;
  std::vector<complex_t> amps_;
};

inline complex_t amplitude_at(const StateVector& state, std::span<const int> digits) {
  return state[state.index_of(digits)];
}

/// Signed ket terms of the nonzero amplitudes, e.g. "+0.5|000> -0.5|011>".
inline std::string format_kets(const StateVector& state, double cutoff = 1e-12) {
  std::string out;
  char buf[96];
  for (std::size_t i = 0; i < state.size(); ++i) {
    const complex_t a = state[i];
    if (std::abs(a) <= cutoff) continue;
    if (std::abs(a.imag()) <= cutoff) {
      std::snprintf(buf, sizeof buf, "%+.12g", a.real());
    } else {
      std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", a.real(), a.imag());
    }
    if (!out.empty()) out += ' ';
    out += buf;
    out += '|';
    for (int d : state.digits_of(i)) out += std::to_string(d);
    out += '>';
  }
  return out;
}

enum class StateFamily { PcgState, S1, S2, S3, NamedS, NamedSPrime, MagicSquare };

/// |0...0> - sum_i theta_i |1 on S_i>, normalized by 1/sqrt(p+1).
/// Accepts relaxed graphs; an empty edge list yields |0...0>.
inline StateVector build_pcg_state(const Pcg& pcg) {
  const int n = pcg.n();
  const std::size_t dim = checked_pow(2, static_cast<std::size_t>(n));
  std::vector<complex_t> amps(dim, 0.0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(pcg.p() + 1));
  amps[0] = scale;
  for (const auto& e : pcg.edges()) {
    std::size_t idx = 0;
    for (int v : e.vertices) idx |= std::size_t{1} << (n - v);
    amps[idx] = -theta(e.weight) * scale;
  }
  return StateVector(n, 2, std::move(amps));
}

/// A state together with the graph that generates it (when there is one).
struct GeneratedState {
  StateFamily family;
  StateVector state;
  std::optional<Pcg> pcg;
};

namespace detail {

inline Pcg triangle(Weight w23, Weight w13, Weight w12) {
  return validate_pcg(3, {{{2, 3}, w23}, {{1, 3}, w13}, {{1, 2}, w12}});
}

}  // namespace detail

enum class NamedState { S, SPrime };

/// |S> = (|000> - |011> - |101> - |110>)/2 and
/// |S'> = (|000> + |011> + |101> - |110>)/2, each with its generating triangle.
inline GeneratedState build_named(NamedState which) {
  if (which == NamedState::S) {
    auto pcg = detail::triangle(Weight::R, Weight::R, Weight::R);
    return {StateFamily::NamedS, build_pcg_state(pcg), std::move(pcg)};
  }
  // +|011> and +|101> need theta = -1 on {2,3} and {1,3}; -|110> needs theta = +1 on {1,2}.
  auto pcg = detail::triangle(Weight::G, Weight::G, Weight::R);
  return {StateFamily::NamedSPrime, build_pcg_state(pcg), std::move(pcg)};
}

/// Complement-of-one-vertex edges, all red: (|0...0> - |W;n,1>)/sqrt(n+1). n odd, n >= 3.
inline GeneratedState build_s1(int n) {
  if (n < 3) throw Error(ErrorCode::BadDim, "S1 needs n >= 3");
  if (n % 2 == 0) throw Error(ErrorCode::EvenN, "S1 is colorable for even n (all red)");
  std::vector<Edge> edges;
  for (int k = 1; k <= n; ++k) {
    Edge e{{}, Weight::R};
    for (int v = 1; v <= n; ++v) {
      if (v != k) e.vertices.push_back(v);
    }
    edges.push_back(std::move(e));
  }
  auto pcg = validate_pcg(n, std::move(edges));
  return {StateFamily::S1, build_pcg_state(pcg), std::move(pcg)};
}

/// Every pair of vertices as a red edge: (|0...0> - sum_pairs |1 on pair>)/sqrt(1 + C(n,2)).
inline GeneratedState build_s2(int n) {
  if (n < 3) throw Error(ErrorCode::BadDim, "S2 needs n >= 3");
  std::vector<Edge> edges;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) edges.push_back({{a, b}, Weight::R});
  }
  auto pcg = validate_pcg(n, std::move(edges));
  return {StateFamily::S2, build_pcg_state(pcg), std::move(pcg)};
}

/// d+1 qudits of dimension d:
///   (1/d) [ |0...0> + sum_{l=1}^{d-1} e^{i l 2pi/d} |W;d+1,l> ]
/// where |W;d+1,l> sums the d+1 placements of a single 0 among l's.
/// Conditioning any site on 0 leaves an eigenstate of the d-fold shift
/// product with eigenvalue e^{-2 pi i/d}; d = 2 gives |S>.
inline GeneratedState build_s3(int d) {
  if (d < 2) throw Error(ErrorCode::BadDim, "S3 needs d >= 2");
  const int n = d + 1;
  const std::size_t dim = checked_pow(static_cast<std::size_t>(d), static_cast<std::size_t>(n));
  std::vector<complex_t> amps(dim, 0.0);
  const double scale = 1.0 / d;
  amps[0] = scale;
  for (int l = 1; l < d; ++l) {
    const complex_t coeff = root_of_unity(l, d) * scale;
    for (int zero_site = 1; zero_site <= n; ++zero_site) {
      std::size_t idx = 0;
      for (int s = 1; s <= n; ++s) idx = idx * static_cast<std::size_t>(d) + (s == zero_site ? 0 : static_cast<std::size_t>(l));
      amps[idx] = coeff;
    }
  }
  return {StateFamily::S3, StateVector(n, d, std::move(amps)), std::nullopt};
}

}  // namespace pcg_paradox
