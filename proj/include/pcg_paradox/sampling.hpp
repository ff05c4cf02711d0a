#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pcg_paradox/density.hpp"
#include "pcg_paradox/simulate.hpp"

namespace pcg_paradox {

enum class Basis : std::uint8_t { Z, X };

/// One basis per site. X sites are rotated into the shift eigenbasis before
/// the computational readout, so their digit is the eigenvalue index.
struct MeasurementPlan {
  std::vector<Basis> bases;

  static MeasurementPlan all_z(int sites) { return {std::vector<Basis>(static_cast<std::size_t>(sites), Basis::Z)}; }

  /// Parses "ZZX"-style strings.
  static MeasurementPlan parse(const std::string& letters) {
    MeasurementPlan plan;
    for (char c : letters) {
      if (c == 'Z' || c == 'z') {
        plan.bases.push_back(Basis::Z);
      } else if (c == 'X' || c == 'x') {
        plan.bases.push_back(Basis::X);
      } else {
        throw Error(ErrorCode::BadPlan, std::string("unknown basis '") + c + "'");
      }
    }
    return plan;
  }

  std::vector<int> x_sites() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < bases.size(); ++k) {
      if (bases[k] == Basis::X) out.push_back(static_cast<int>(k) + 1);
    }
    return out;
  }
};

struct ShotCounts {
  int num_sites = 0;
  int site_dim = 2;
  std::uint64_t shots = 0;
  std::map<std::size_t, std::uint64_t> counts;  // outcome index -> count, zero counts omitted

  double frequency(std::size_t outcome) const {
    const auto it = counts.find(outcome);
    return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(shots);
  }

  std::string digits(std::size_t outcome) const {
    std::string s(static_cast<std::size_t>(num_sites), '0');
    for (int k = num_sites - 1; k >= 0; --k) {
      s[static_cast<std::size_t>(k)] = static_cast<char>('0' + outcome % static_cast<std::size_t>(site_dim));
      outcome /= static_cast<std::size_t>(site_dim);
    }
    return s;
  }
};

namespace detail {

inline void check_plan(const MeasurementPlan& plan, int sites) {
  if (plan.bases.size() != static_cast<std::size_t>(sites)) {
    throw Error(ErrorCode::BadPlan, "plan lists " + std::to_string(plan.bases.size()) + " bases for " +
                                        std::to_string(sites) + " sites");
  }
}

}  // namespace detail

inline std::vector<double> outcome_distribution(const StateVector& state, const MeasurementPlan& plan) {
  detail::check_plan(plan, state.num_sites());
  const auto amps = to_shift_eigenbasis(state, plan.x_sites());
  std::vector<double> probs(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) probs[i] = std::norm(amps[i]);
  return probs;
}

inline std::vector<double> outcome_distribution(const DensityMatrix& rho, const MeasurementPlan& plan) {
  detail::check_plan(plan, rho.num_sites());
  // U = tensor product of per-site kernels; p(o) = (U rho U^dagger)_{oo}.
  const auto d = rho.site_dim();
  const auto x_sites = plan.x_sites();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(rho.dim(), rho.dim());
  if (!x_sites.empty()) {
    for (Eigen::Index c = 0; c < rho.dim(); ++c) {
      std::vector<complex_t> col(static_cast<std::size_t>(rho.dim()), 0.0);
      col[static_cast<std::size_t>(c)] = 1.0;
      const StateVector basis_vec(rho.num_sites(), d, std::move(col));
      const auto image = to_shift_eigenbasis(basis_vec, x_sites);
      for (Eigen::Index r = 0; r < rho.dim(); ++r) u(r, c) = image[static_cast<std::size_t>(r)];
    }
  }
  const Eigen::MatrixXcd rotated = u * rho.matrix() * u.adjoint();
  std::vector<double> probs(static_cast<std::size_t>(rho.dim()));
  for (Eigen::Index i = 0; i < rho.dim(); ++i) probs[static_cast<std::size_t>(i)] = std::max(0.0, rotated(i, i).real());
  return probs;
}

/// Multinomial sample by inverse CDF. Each shot draws one 53-bit uniform from
/// the engine, so results depend only on the engine state.
inline ShotCounts sample_distribution(const std::vector<double>& probs, int num_sites, int site_dim,
                                      std::uint64_t shots, std::mt19937_64& rng) {
  if (shots < 1) throw Error(ErrorCode::BadPlan, "at least one shot required");
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  ShotCounts out{num_sites, site_dim, shots, {}};
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > 0.0) last_nonzero = i;
  }
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    idx = std::min(idx, last_nonzero);
    ++out.counts[idx];
  }
  return out;
}

inline ShotCounts sample_shots(const StateVector& state, const MeasurementPlan& plan, std::uint64_t shots,
                               std::mt19937_64& rng) {
  return sample_distribution(outcome_distribution(state, plan), state.num_sites(), state.site_dim(), shots, rng);
}

inline ShotCounts sample_shots(const DensityMatrix& rho, const MeasurementPlan& plan, std::uint64_t shots,
                               std::mt19937_64& rng) {
  return sample_distribution(outcome_distribution(rho, plan), rho.num_sites(), rho.site_dim(), shots, rng);
}

}  // namespace pcg_paradox
