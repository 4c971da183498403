#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "jointmeas/operators.hpp"
#include "jointmeas/tolerances.hpp"

namespace jointmeas {

using BlochVector = Eigen::Vector3d;

/// Pauli matrices sigma_x, sigma_y, sigma_z.
const Matrix& pauli(int i);

/// a . sigma for a real 3-vector.
Matrix dot_sigma(const BlochVector& a);

/// Binary qubit observable S^{lambda a}(+/-) = (I +/- lambda a.sigma)/2,
/// outcomes labeled "+", "-".
Observable observable_from_bloch(const BlochVector& a, double lambda);

/// Bloch vector of the "+" effect of a binary qubit observable, scaled by
/// the noise parameter: E(+) = (I + m.sigma)/2 -> returns m.
BlochVector bloch_of_effect(const Matrix& effect_plus);

/// Sign of a.b; throws if |a.b| < dot_tol (orthogonal pair, the strategy's
/// step-1 requirement is violated).
int sign_rule(const BlochVector& a, const BlochVector& b, double dot_tol = 1e-9);

/// A qubit configuration: target directions a_1..a_M, guessing directions
/// b_1..b_N with weights mu_k (uniform by default).
struct QubitConfig {
  std::string name;
  std::vector<BlochVector> targets;
  std::vector<BlochVector> guesses;
  std::vector<double> weights;  // empty means uniform 1/N

  std::vector<double> effective_weights() const;
};

/// Joint observable of the sign-rule adaptive strategy: guess k routes
/// S^{b_k}(+) to the tuple of signs (a_l . b_k) and S^{b_k}(-) to its
/// negation; unassigned tuples are zero.
JointObservable adaptive_joint(const QubitConfig& config,
                               const ToleranceConfig& tol = {});

/// Deterministic post-processing equivalent of the sign rule, usable with
/// adaptive_combine.
PostProcessing sign_rule_post_processing(const QubitConfig& config,
                                         const ToleranceConfig& tol = {});

/// Per-target noise parameter lambda_l = ||sum_k mu_k sign(a_l.b_k) b_k||.
/// Throws if any marginal Bloch vector is not parallel to its target.
std::vector<double> marginal_noise(const QubitConfig& config,
                                   const ToleranceConfig& tol = {});

/// M coplanar targets at angles (k-1) pi / M; guesses equal the targets for
/// odd M and are rotated by pi/(2M) for even M.
QubitConfig planar_config(int m);

/// Catalog entry by name: octahedron3, tetrahedron4, icosahedron6,
/// dodecahedron10.
QubitConfig platonic_config(std::string_view name);

struct OptimalPair {
  double mu;
  double lambda;
  JointObservable joint;
};

/// Optimal joint observable for two arbitrary unbiased qubit observables,
/// built from the equal superpositions of the target directions.
OptimalPair optimal_pair(const BlochVector& a1, const BlochVector& a2,
                         const ToleranceConfig& tol = {});

}  // namespace jointmeas
