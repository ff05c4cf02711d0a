#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pcg_paradox/numeric.hpp"
#include "pcg_paradox/simulate.hpp"
#include "pcg_paradox/state.hpp"

namespace pcg_paradox {

/// Largest density-matrix dimension handled (10 qubits).
inline constexpr std::size_t max_density_dim = 1024;

/// Hermitian, unit-trace operator on a uniform qudit register.
class DensityMatrix {
 public:
  static constexpr double tolerance = 1e-10;

  DensityMatrix(int num_sites, int site_dim, Eigen::MatrixXcd rho)
      : num_sites_(num_sites), site_dim_(site_dim), rho_(std::move(rho)) {
    const std::size_t dim =
        checked_pow(static_cast<std::size_t>(site_dim), static_cast<std::size_t>(num_sites), max_density_dim);
    if (rho_.rows() != static_cast<Eigen::Index>(dim) || rho_.cols() != static_cast<Eigen::Index>(dim)) {
      throw Error(ErrorCode::DimensionMismatch, "density matrix must be " + std::to_string(dim) + " square");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tolerance) {
      throw Error(ErrorCode::WrongShape, "density matrix is not Hermitian");
    }
    if (std::abs(rho_.trace() - complex_t(1.0)) > tolerance) {
      throw Error(ErrorCode::NotNormalized, "density matrix trace differs from 1");
    }
  }

  static DensityMatrix pure(const StateVector& psi) {
    checked_pow(static_cast<std::size_t>(psi.site_dim()), static_cast<std::size_t>(psi.num_sites()), max_density_dim);
    const Eigen::Map<const Eigen::VectorXcd> v(psi.amps().data(), static_cast<Eigen::Index>(psi.size()));
    return DensityMatrix(psi.num_sites(), psi.site_dim(), v * v.adjoint());
  }

  int num_sites() const noexcept { return num_sites_; }
  int site_dim() const noexcept { return site_dim_; }
  Eigen::Index dim() const noexcept { return rho_.rows(); }
  const Eigen::MatrixXcd& matrix() const noexcept { return rho_; }

  Eigen::VectorXd eigenvalues() const {
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(rho_, Eigen::EigenvaluesOnly).eigenvalues();
  }

  bool is_positive_semidefinite() const { return eigenvalues().minCoeff() >= -tolerance; }

 private:
  int num_sites_;
  int site_dim_;
  Eigen::MatrixXcd rho_;
};

/// v |psi><psi| + (1 - v) I / d^n
inline DensityMatrix white_noise_mix(const StateVector& psi, double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0)) {
    throw Error(ErrorCode::BadVisibility, "visibility must lie in [0, 1]");
  }
  const auto pure = DensityMatrix::pure(psi);
  const auto dim = pure.dim();
  Eigen::MatrixXcd rho = visibility * pure.matrix();
  rho.diagonal().array() += (1.0 - visibility) / static_cast<double>(dim);
  return DensityMatrix(psi.num_sites(), psi.site_dim(), std::move(rho));
}

/// <psi| rho |psi>, the Uhlmann fidelity against a pure target.
inline double fidelity(const DensityMatrix& rho, const StateVector& target) {
  if (rho.num_sites() != target.num_sites() || rho.site_dim() != target.site_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and density matrix registers differ");
  }
  const Eigen::Map<const Eigen::VectorXcd> v(target.amps().data(), static_cast<Eigen::Index>(target.size()));
  return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

/// Transposes the digits of `subsystem`:
/// <i_I, j|rho^{T_I}|k_I, l> = <k_I, j|rho|i_I, l>.
inline Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho, std::span<const int> subsystem) {
  const auto d = static_cast<std::size_t>(rho.site_dim());
  std::vector<std::size_t> strides;
  for (int s : subsystem) {
    if (s < 1 || s > rho.num_sites()) throw Error(ErrorCode::DimensionMismatch, "subsystem site outside register");
    std::size_t st = 1;
    for (int k = s; k < rho.num_sites(); ++k) st *= d;
    strides.push_back(st);
  }
  const auto dim = static_cast<std::size_t>(rho.dim());
  Eigen::MatrixXcd out(rho.dim(), rho.dim());
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      std::size_t src_r = r;
      std::size_t src_c = c;
      for (auto st : strides) {
        const std::size_t dr = r / st % d;
        const std::size_t dc = c / st % d;
        src_r = src_r - dr * st + dc * st;
        src_c = src_c - dc * st + dr * st;
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rho.matrix()(static_cast<Eigen::Index>(src_r), static_cast<Eigen::Index>(src_c));
    }
  }
  return out;
}

/// Eigenvalues below this count as negative.
inline constexpr double negativity_cutoff = -1e-10;

/// -2 x (sum of negative eigenvalues of rho^{T_I}).
inline double negativity_bipartition(const DensityMatrix& rho, std::span<const int> subsystem) {
  const Eigen::VectorXd ev =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(partial_transpose(rho, subsystem), Eigen::EigenvaluesOnly)
          .eigenvalues();
  double negative = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < negativity_cutoff) negative += ev[i];
  }
  return -2.0 * negative;
}

inline double negativity_bipartition(const DensityMatrix& rho, int site) {
  const int sites[] = {site};
  return negativity_bipartition(rho, sites);
}

/// Geometric mean of the three one-versus-two negativities of a 3-qubit state.
inline double tripartite_negativity(const DensityMatrix& rho) {
  if (rho.num_sites() != 3 || rho.site_dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "tripartite negativity needs three qubits");
  }
  return std::cbrt(negativity_bipartition(rho, 1) * negativity_bipartition(rho, 2) * negativity_bipartition(rho, 3));
}

/// P(all `conditioned` sites read 0) for a mixed qubit state.
inline double zero_probability(const DensityMatrix& rho, std::span<const int> conditioned) {
  const auto n = rho.num_sites();
  const std::size_t zmask = detail::qubit_mask(n, conditioned);
  double p = 0.0;
  for (Eigen::Index r = 0; r < rho.dim(); ++r) {
    if ((static_cast<std::size_t>(r) & zmask) == 0) p += rho.matrix()(r, r).real();
  }
  return p;
}

/// <X_{product}> conditioned on Z = +1 for every site in `conditioned`:
/// Tr(P rho P X) / Tr(P rho) with P = |0><0| on the conditioned sites.
inline double conditional_x_expectation(const DensityMatrix& rho, std::span<const int> conditioned,
                                        std::span<const int> product) {
  if (rho.site_dim() != 2) throw Error(ErrorCode::WrongShape, "X-product expectations are qubit-only");
  const int n = rho.num_sites();
  const std::size_t zmask = detail::qubit_mask(n, conditioned);
  const std::size_t xmask = detail::qubit_mask(n, product);
  if (zmask & xmask) throw Error(ErrorCode::WrongShape, "conditioned and measured sites overlap");
  const double norm = zero_probability(rho, conditioned);
  if (!(norm > 0.0)) throw Error(ErrorCode::ZeroProbability, "conditioning event has probability zero");
  double acc = 0.0;
  for (Eigen::Index r = 0; r < rho.dim(); ++r) {
    const auto ur = static_cast<std::size_t>(r);
    if (ur & zmask) continue;
    acc += rho.matrix()(r, static_cast<Eigen::Index>(ur ^ xmask)).real();
  }
  return acc / norm;
}

}  // namespace pcg_paradox
