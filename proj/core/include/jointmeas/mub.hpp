#pragma once

#include <Eigen/Dense>
#include <vector>

#include "jointmeas/operators.hpp"
#include "jointmeas/tolerances.hpp"

namespace jointmeas {

/// Orthonormal basis of C^d; columns are the basis vectors.
struct OrthonormalBasis {
  Matrix vectors;

  Eigen::Index dim() const { return vectors.rows(); }
  Eigen::VectorXcd vector(Eigen::Index j) const { return vectors.col(j); }
};

void require_orthonormal(const OrthonormalBasis& basis, double tol = 1e-12);

/// Two mutually unbiased bases: |<phi_j|psi_k>| = 1/sqrt(d) for all j, k.
struct MubPair {
  OrthonormalBasis basis_a;
  OrthonormalBasis basis_b;

  Eigen::Index dim() const { return basis_a.dim(); }
};

void require_mub(const MubPair& pair, const ToleranceConfig& tol = {});

/// Computational basis paired with its discrete-Fourier conjugate,
/// psi_k = (1/sqrt(d)) sum_j e^{2 pi i jk/d} phi_j.
MubPair fourier_mub(int d);

/// Unit superposition vectors b_{jk} = N (phi_j + e^{i theta_{jk}} psi_k)
/// with e^{i theta_{jk}} = sqrt(d) <psi_k|phi_j>.
struct SuperpositionFamily {
  Eigen::Index dim = 0;
  double normalization = 0.0;        // N, shared by all (j, k)
  Matrix phases;                     // phases(j, k) = e^{i theta_{jk}}
  std::vector<std::vector<Eigen::VectorXcd>> vectors;  // [j][k], unit norm

  const Eigen::VectorXcd& vector(Eigen::Index j, Eigen::Index k) const {
    return vectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }
};

SuperpositionFamily superpositions(const MubPair& pair);

/// Rank-1 joint observable G(j,k) = (1/d) |b_{jk}><b_{jk}|; marginals are
/// the projective basis observables smeared by mub_lambda(d).
JointObservable mub_joint(const MubPair& pair);

/// lambda = (1 + 1/(1 + sqrt(d))) / 2.
double mub_lambda(int d);

/// Projective observable of a basis: effects |v_j><v_j|.
Observable basis_observable(const OrthonormalBasis& basis);

}  // namespace jointmeas
