#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pcg_paradox/numeric.hpp"
#include "pcg_paradox/pcg.hpp"
#include "pcg_paradox/state.hpp"

namespace pcg_paradox {

/// Survivor of a computational-basis post-selection and the probability of
/// the selected outcome.
struct PostselectionResult {
  StateVector surviving_state;
  double probability;
};

namespace detail {

inline std::vector<int> checked_sites(const StateVector& state, std::span<const int> sites) {
  std::vector<int> out(sites.begin(), sites.end());
  std::sort(out.begin(), out.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] < 1 || out[k] > state.num_sites()) {
      throw Error(ErrorCode::WrongShape, "site " + std::to_string(out[k]) + " outside the register");
    }
    if (k > 0 && out[k] == out[k - 1]) {
      throw Error(ErrorCode::WrongShape, "site " + std::to_string(out[k]) + " listed twice");
    }
  }
  return out;
}

/// Digits of `sites` (parallel to the caller's order) must match `digits`.
struct Selector {
  std::vector<std::size_t> strides;
  std::vector<int> digits;
  std::size_t dim;

  bool matches(std::size_t index) const {
    for (std::size_t k = 0; k < strides.size(); ++k) {
      if (static_cast<int>(index / strides[k] % dim) != digits[k]) return false;
    }
    return true;
  }
};

inline Selector make_selector(const StateVector& state, std::span<const int> sites, std::span<const int> digits) {
  if (sites.size() != digits.size()) throw Error(ErrorCode::BadDigits, "one digit per selected site required");
  checked_sites(state, sites);
  Selector sel{{}, {}, static_cast<std::size_t>(state.site_dim())};
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (digits[k] < 0 || digits[k] >= state.site_dim()) {
      throw Error(ErrorCode::BadDigits, "digit " + std::to_string(digits[k]) + " outside the site dimension");
    }
    sel.strides.push_back(state.stride(sites[k]));
    sel.digits.push_back(digits[k]);
  }
  return sel;
}

}  // namespace detail

/// Probability that measuring `sites` in the computational basis yields `digits`.
inline double outcome_probability(const StateVector& state, std::span<const int> sites, std::span<const int> digits) {
  const auto sel = detail::make_selector(state, sites, digits);
  return pairwise_sum(0, state.size(),
                      [&](std::size_t i) { return sel.matches(i) ? std::norm(state[i]) : 0.0; });
}

/// Conditions `sites` on the computational outcome `digits` and renormalizes.
/// The survivor keeps the remaining sites in their original order.
inline PostselectionResult postselect(const StateVector& state, std::span<const int> sites,
                                      std::span<const int> digits) {
  const auto sel = detail::make_selector(state, sites, digits);
  std::vector<complex_t> kept;
  kept.reserve(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (sel.matches(i)) kept.push_back(state[i]);
  }
  const double probability = squared_norm(kept);
  if (!(probability > 0.0)) {
    throw Error(ErrorCode::ZeroProbability, "post-selected outcome has probability zero");
  }
  const double scale = 1.0 / std::sqrt(probability);
  for (auto& a : kept) a *= scale;
  const int remaining = state.num_sites() - static_cast<int>(sites.size());
  return {StateVector(remaining, state.site_dim(), std::move(kept)), probability};
}

/// Conditions every listed site on |0> (Z = +1).
inline PostselectionResult postselect_zero(const StateVector& state, std::span<const int> sites) {
  const std::vector<int> zeros(sites.size(), 0);
  return postselect(state, sites, zeros);
}

/// P(Z_1 = ... = Z_n = +1) = |<0...0|psi>|^2.
inline double all_zero_probability(const StateVector& state) { return std::norm(state[0]); }

/// Moves each listed site into the shift-operator eigenbasis
/// |chi_m> = d^{-1/2} sum_k w^{-mk} |k>, with X|chi_m> = w^m |chi_m>.
/// The new digit at a transformed site is m. `inverse` undoes it.
inline std::vector<complex_t> to_shift_eigenbasis(const StateVector& state, std::span<const int> sites,
                                                  bool inverse = false) {
  const auto checked = detail::checked_sites(state, sites);
  const int d = state.site_dim();
  const auto ud = static_cast<std::size_t>(d);
  std::vector<complex_t> amps(state.amps().begin(), state.amps().end());
  // <chi_m|k> = w^{mk} / sqrt(d)
  std::vector<complex_t> kernel(ud * ud);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int m = 0; m < d; ++m) {
    for (int k = 0; k < d; ++k) {
      kernel[static_cast<std::size_t>(m * d + k)] = root_of_unity(inverse ? -m * k : m * k, d) * norm;
    }
  }
  std::vector<complex_t> in(ud);
  for (int site : checked) {
    const std::size_t stride = state.stride(site);
    for (std::size_t base = 0; base < amps.size(); ++base) {
      if (base / stride % ud != 0) continue;
      for (std::size_t k = 0; k < ud; ++k) in[k] = amps[base + k * stride];
      for (std::size_t m = 0; m < ud; ++m) {
        complex_t acc = 0.0;
        for (std::size_t k = 0; k < ud; ++k) acc += kernel[m * ud + k] * in[k];
        amps[base + m * stride] = acc;
      }
    }
  }
  return amps;
}

/// Outcome distribution of the product of shift operators on a set of sites.
/// probs[s] is the probability of eigenvalue w^s, w = e^{2 pi i/d}.
struct EigenvalueDistribution {
  int site_dim = 2;
  std::vector<double> probs;

  static complex_t eigenvalue(int s, int d) { return root_of_unity(s, d); }
  complex_t eigenvalue(int s) const { return eigenvalue(s, site_dim); }

  /// Index of the eigenvalue -1 for qubits, +1 -> 0.
  static int qubit_index(int sign) { return sign > 0 ? 0 : 1; }
};

inline EigenvalueDistribution x_product_distribution(const StateVector& state, std::span<const int> sites) {
  const auto checked = detail::checked_sites(state, sites);
  const auto amps = to_shift_eigenbasis(state, checked);
  const auto ud = static_cast<std::size_t>(state.site_dim());
  std::vector<std::size_t> strides;
  for (int s : checked) strides.push_back(state.stride(s));
  EigenvalueDistribution dist{state.site_dim(), std::vector<double>(ud, 0.0)};
  for (std::size_t s = 0; s < ud; ++s) {
    dist.probs[s] = pairwise_sum(0, amps.size(), [&](std::size_t i) {
      std::size_t total = 0;
      for (auto st : strides) total += i / st % ud;
      return total % ud == s ? std::norm(amps[i]) : 0.0;
    });
  }
  return dist;
}

/// Outcome of one "post-select the complement, then measure the product" test.
struct ConditionalCheck {
  std::vector<int> edge;             // sites whose shift product is measured
  std::vector<int> conditioned;      // sites post-selected on |0>
  int required_index = 0;            // eigenvalue w^required_index
  complex_t required_eigenvalue;     // w^required_index
  double conditioning_probability;   // P(conditioned sites all 0)
  double probability;                // P(required eigenvalue | conditioned sites all 0)
};

namespace detail {

inline ConditionalCheck run_conditional(const StateVector& state, std::vector<int> edge, std::vector<int> conditioned,
                                        int required_index) {
  const auto post = postselect_zero(state, conditioned);
  // The survivor's sites are the edge sites renumbered 1..|edge|.
  std::vector<int> survivor_sites(edge.size());
  std::iota(survivor_sites.begin(), survivor_sites.end(), 1);
  const auto dist = x_product_distribution(post.surviving_state, survivor_sites);
  return {std::move(edge),
          std::move(conditioned),
          required_index,
          EigenvalueDistribution::eigenvalue(required_index, state.site_dim()),
          post.probability,
          dist.probs[static_cast<std::size_t>(required_index)]};
}

}  // namespace detail

/// Qubit PCG states: conditioning the complement of edge i on |0> must give
/// X-product eigenvalue -theta_i.
inline ConditionalCheck conditional_edge_check(const StateVector& state, const Pcg& pcg, std::size_t i) {
  if (state.site_dim() != 2 || state.num_sites() != pcg.n()) {
    throw Error(ErrorCode::WrongShape, "edge checks need a qubit register matching the graph");
  }
  const auto& e = pcg.edge(i);
  return detail::run_conditional(state, e.vertices, pcg.complement(i),
                                 EigenvalueDistribution::qubit_index(-theta(e.weight)));
}

/// S3-type qudit states: conditioning site k on |0> must give eigenvalue
/// e^{-2 pi i/d} for the shift product over all other sites.
inline ConditionalCheck cyclic_conditional_check(const StateVector& state, int k) {
  if (k < 1 || k > state.num_sites()) throw Error(ErrorCode::WrongShape, "site outside the register");
  std::vector<int> edge;
  for (int s = 1; s <= state.num_sites(); ++s) {
    if (s != k) edge.push_back(s);
  }
  return detail::run_conditional(state, std::move(edge), {k}, state.site_dim() - 1);
}

namespace detail {

/// (X-string on mask) applied to a qubit register: flips the masked bits.
inline std::vector<complex_t> apply_x_string(std::span<const complex_t> v, std::size_t mask) {
  std::vector<complex_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i ^ mask];
  return out;
}

inline std::size_t qubit_mask(int n, std::span<const int> sites) {
  std::size_t m = 0;
  for (int s : sites) m |= std::size_t{1} << (n - s);
  return m;
}

/// v <- (v + sign * P v) / 2 for the X-string P on `mask`.
inline void apply_parity_projector(std::vector<complex_t>& v, std::size_t mask, int sign) {
  const auto flipped = apply_x_string(v, mask);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 0.5 * (v[i] + static_cast<double>(sign) * flipped[i]);
}

}  // namespace detail

/// || (1/8)(I - X2X3)(I - X1X3)(I - X1X2) |psi> ||.
inline double hardy_projector_residual(const StateVector& state) {
  if (state.site_dim() != 2 || state.num_sites() != 3) {
    throw Error(ErrorCode::WrongShape, "the Hardy projector acts on three qubits");
  }
  std::vector<complex_t> v(state.amps().begin(), state.amps().end());
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};  // rightmost factor first
  for (const auto& pair : pairs) detail::apply_parity_projector(v, detail::qubit_mask(3, pair), -1);
  return std::sqrt(squared_norm(v));
}

/// || prod_i (I - theta_i X_{S_i}) / 2 |psi> ||: the projector onto the joint
/// eigenspace X_{S_i} = -theta_i for every edge. Experimental; not asserted
/// as an identity of PCG states.
inline double hardy_product_residual(const StateVector& state, const Pcg& pcg) {
  if (state.site_dim() != 2 || state.num_sites() != pcg.n()) {
    throw Error(ErrorCode::WrongShape, "qubit register must match the graph");
  }
  std::vector<complex_t> v(state.amps().begin(), state.amps().end());
  for (const auto& e : pcg.edges()) {
    detail::apply_parity_projector(v, detail::qubit_mask(pcg.n(), e.vertices), -theta(e.weight));
  }
  return std::sqrt(squared_norm(v));
}

}  // namespace pcg_paradox
