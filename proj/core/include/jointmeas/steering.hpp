#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jointmeas/bloch.hpp"
#include "jointmeas/mub.hpp"
#include "jointmeas/operators.hpp"

namespace jointmeas {

/// Non-normalized conditional states sigma_{x|k} of a steering scenario,
/// together with the common reduced state rho = sum_x sigma_{x|k}.
struct Assemblage {
  std::vector<std::vector<Matrix>> states;  // [setting][outcome]
  Matrix reduced;
};

/// Assemblage produced by measuring the maximally entangled state:
/// sigma_{x|k} = A_k(x)^T / d.
Assemblage assemblage_from_max_entangled(const std::vector<Observable>& observables,
                                         const ToleranceConfig& tol = {});

/// Steering bound C_n = max over sign patterns of ||sum_k x_k c_k|| / n,
/// exhaustive over 2^(n-1) patterns (global flip symmetry). n is capped at
/// 24.
double qubit_bound(const std::vector<BlochVector>& directions);

/// Closed form C_M = 1 / (M sin(pi / 2M)) for the planar configuration.
double planar_bound(int m);

/// The Z-operator steering witness for a MUB pair.
struct MubWitness {
  Eigen::Index dim = 0;
  double coeff_a = 0.0;
  double coeff_b = 0.0;
  double coeff_c = 0.0;
  double n_plus = 0.0;   // normalization of chi^+
  double n_minus = 0.0;  // normalization of chi^-
  std::vector<std::vector<Matrix>> z;  // Z_{jk}
};

/// Builds Z_{jk} = a (|phi_j><phi_j| + |psi_k><psi_k|) + b I and verifies
/// it against the explicitly positive chi^+/- representation.
MubWitness build_mub_witness(const MubPair& pair, const ToleranceConfig& tol = {});

/// Witness value for the noisy MUB assemblage at noise lambda:
///   d ( sum_j tr[Z_jt sigma_{j|1}] + sum_k tr[Z_sk sigma_{k|2}]
///       - tr[Z_st rho] ),
/// equal to 2(1 - lambda (1 - 1/(sqrt(d)+2))) - 1 for every (s, t).
double mub_steering_value(const MubPair& pair, double lambda, int s, int t);

/// lambda_max = (1 + 1/(1 + sqrt(d))) / 2, where the witness value hits 0.
double mub_threshold(int d);

/// Construction lower bound vs. witness upper bound for one configuration.
struct WitnessReport {
  std::string config;
  double lambda_construction = 0.0;
  double lambda_witness = 0.0;
  bool tight = false;

  double gap() const { return lambda_witness - lambda_construction; }
};

WitnessReport tightness_report(const std::string& config_id,
                               const ToleranceConfig& tol = {});

/// Thresholds bounding the 4-Specker window: below the first all four
/// planar M=4 observables are compatible; above the second some triple is
/// incompatible.
std::pair<double, double> specker_window();

enum class SpeckerClass {
  all_compatible,
  specker_4,
  some_triple_incompatible,
};

SpeckerClass specker_classify(double lambda);

std::string to_string(SpeckerClass c);

}  // namespace jointmeas
