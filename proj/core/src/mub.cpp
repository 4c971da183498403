#include "jointmeas/mub.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jointmeas {

void require_orthonormal(const OrthonormalBasis& basis, double tol) {
  const Eigen::Index d = basis.dim();
  if (basis.vectors.cols() != d) {
    throw std::invalid_argument("require_orthonormal: basis is not square");
  }
  const Matrix gram = basis.vectors.adjoint() * basis.vectors;
  if ((gram - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("require_orthonormal: basis is not orthonormal");
  }
}

void require_mub(const MubPair& pair, const ToleranceConfig& tol) {
  if (pair.basis_a.dim() != pair.basis_b.dim()) {
    throw std::invalid_argument("require_mub: dimension mismatch");
  }
  require_orthonormal(pair.basis_a, tol.exact_tol);
  require_orthonormal(pair.basis_b, tol.exact_tol);
  const double unbiased = 1.0 / std::sqrt(static_cast<double>(pair.dim()));
  const Matrix overlaps = pair.basis_a.vectors.adjoint() * pair.basis_b.vectors;
  if ((overlaps.cwiseAbs().array() - unbiased).abs().maxCoeff() > tol.eq_tol) {
    throw std::invalid_argument("require_mub: bases are not mutually unbiased");
  }
}

MubPair fourier_mub(int d) {
  if (d < 2) {
    throw std::invalid_argument("fourier_mub: d must be at least 2");
  }
  MubPair pair;
  pair.basis_a.vectors = Matrix::Identity(d, d);
  Matrix fourier(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const double angle = 2.0 * std::numbers::pi * j * k / d;
      fourier(j, k) = norm * Complex(std::cos(angle), std::sin(angle));
    }
  }
  pair.basis_b.vectors = fourier;
  return pair;
}

SuperpositionFamily superpositions(const MubPair& pair) {
  require_mub(pair);
  const Eigen::Index d = pair.dim();
  const double sqrt_d = std::sqrt(static_cast<double>(d));
  const double expected_n = 1.0 / std::sqrt(2.0 + 2.0 / sqrt_d);

  SuperpositionFamily family;
  family.dim = d;
  family.phases = Matrix(d, d);
  family.vectors.assign(d, std::vector<Eigen::VectorXcd>(d));
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      const Complex overlap =
          pair.basis_b.vector(k).adjoint() * pair.basis_a.vector(j);
      const Complex phase = sqrt_d * overlap;
      family.phases(j, k) = phase;
      const Eigen::VectorXcd raw =
          pair.basis_a.vector(j) + phase * pair.basis_b.vector(k);
      const double n = 1.0 / raw.norm();
      if (std::abs(n - expected_n) > 1e-12) {
        throw std::runtime_error(
            "superpositions: normalization disagrees with closed form");
      }
      family.normalization = n;
      family.vectors[j][k] = n * raw;
    }
  }
  return family;
}

JointObservable mub_joint(const MubPair& pair) {
  const SuperpositionFamily family = superpositions(pair);
  const Eigen::Index d = pair.dim();

  std::vector<std::string> alphabet;
  for (Eigen::Index i = 0; i < d; ++i) alphabet.push_back(std::to_string(i));

  JointObservable g;
  g.dim = d;
  g.slots = {alphabet, alphabet};
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const Eigen::VectorXcd& b = family.vector(j, k);
      g.effects.emplace(OutcomeTuple{j, k}, (b * b.adjoint()) / d);
    }
  }
  return g;
}

double mub_lambda(int d) {
  if (d < 2) {
    throw std::invalid_argument("mub_lambda: d must be at least 2");
  }
  return 0.5 * (1.0 + 1.0 / (1.0 + std::sqrt(static_cast<double>(d))));
}

Observable basis_observable(const OrthonormalBasis& basis) {
  Observable obs;
  for (Eigen::Index j = 0; j < basis.dim(); ++j) {
    obs.outcomes.push_back(std::to_string(j));
    const Eigen::VectorXcd v = basis.vector(j);
    obs.effects.push_back(v * v.adjoint());
  }
  return obs;
}

}  // namespace jointmeas
