#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "jointmeas/tolerances.hpp"

namespace jointmeas {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Max absolute deviation of H from its conjugate transpose.
double hermiticity_deviation(const Matrix& h);

/// Throws std::invalid_argument if H is not Hermitian within tol.
void require_hermitian(const Matrix& h, double tol = 1e-12);

/// Smallest eigenvalue of a Hermitian matrix. Uses the closed form
/// tr/2 - sqrt((tr/2)^2 - det) for 2x2 input, a spectral decomposition
/// otherwise.
double min_eigenvalue(const Matrix& h);

/// Closed-form smallest eigenvalue for 2x2 Hermitian matrices.
double min_eigenvalue_2x2(const Matrix& h);

/// Smallest eigenvalue via Eigen's self-adjoint solver, any dimension.
double min_eigenvalue_spectral(const Matrix& h);

/// A finite-outcome POVM: one labeled effect per outcome.
struct Observable {
  std::vector<std::string> outcomes;
  std::vector<Matrix> effects;

  Eigen::Index dim() const;
};

/// Per-effect positivity and normalization diagnostics.
struct PovmReport {
  std::vector<double> min_eigenvalues;
  double normalization_residual = 0.0;
  bool positive = false;
  bool normalized = false;

  bool ok() const { return positive && normalized; }
};

PovmReport validate_povm(const Observable& obs, const ToleranceConfig& tol = {});

/// Outcome tuple addressing a joint-observable effect. Entries index into
/// the per-slot alphabets.
using OutcomeTuple = std::vector<int>;

/// POVM indexed by outcome tuples. Absent tuples are zero operators.
struct JointObservable {
  Eigen::Index dim = 0;
  std::vector<std::vector<std::string>> slots;  // outcome alphabet per slot
  std::map<OutcomeTuple, Matrix> effects;

  std::size_t num_slots() const { return slots.size(); }
  /// Stored effect or the zero operator for absent tuples.
  Matrix effect(const OutcomeTuple& t) const;
};

PovmReport validate_povm(const JointObservable& g, const ToleranceConfig& tol = {});

/// Sum the joint observable over all slots except `slot`.
Observable marginal(const JointObservable& g, std::size_t slot);

/// A(x) -> lambda A(x) + (1-lambda) tr[A(x)] I/d.
Observable mix_white_noise(const Observable& obs, double lambda);
JointObservable mix_white_noise(const JointObservable& g, double lambda);

/// Elementwise transpose of every effect.
Observable transpose_observable(const Observable& obs);

/// Stochastic post-processing: for auxiliary k and auxiliary outcome beta,
/// a distribution over outcome tuples.
struct PostProcessing {
  // conditional[k][beta] maps tuples to probabilities; omitted tuples have
  // probability zero.
  std::vector<std::vector<std::map<OutcomeTuple, double>>> conditional;
};

/// General adaptive combiner:
///   G(t) = sum_k mu_k sum_beta p(t | B_k = beta) B_k(beta).
JointObservable adaptive_combine(const std::vector<Observable>& auxiliaries,
                                 const std::vector<double>& weights,
                                 const PostProcessing& post,
                                 std::vector<std::vector<std::string>> slots,
                                 const ToleranceConfig& tol = {});

}  // namespace jointmeas
