#include "jointmeas/steering.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jointmeas/catalog.hpp"

namespace jointmeas {

Assemblage assemblage_from_max_entangled(const std::vector<Observable>& observables,
                                         const ToleranceConfig& tol) {
  if (observables.empty()) {
    throw std::invalid_argument("assemblage_from_max_entangled: no observables");
  }
  const Eigen::Index d = observables.front().dim();
  Assemblage assemblage;
  assemblage.reduced = Matrix::Identity(d, d) / d;
  for (const Observable& obs : observables) {
    if (obs.dim() != d) {
      throw std::invalid_argument(
          "assemblage_from_max_entangled: dimension mismatch");
    }
    std::vector<Matrix> conditional;
    Matrix sum = Matrix::Zero(d, d);
    conditional.reserve(obs.effects.size());
    for (const Matrix& e : obs.effects) {
      conditional.push_back(e.transpose() / static_cast<double>(d));
      sum += conditional.back();
    }
    if ((sum - assemblage.reduced).cwiseAbs().maxCoeff() > tol.eq_tol) {
      throw std::runtime_error(
          "assemblage_from_max_entangled: reduced state mismatch");
    }
    assemblage.states.push_back(std::move(conditional));
  }
  return assemblage;
}

double qubit_bound(const std::vector<BlochVector>& directions) {
  const std::size_t n = directions.size();
  if (n == 0) {
    throw std::invalid_argument("qubit_bound: empty direction set");
  }
  if (n > 24) {
    throw std::invalid_argument(
        "qubit_bound: sign enumeration capped at n = 24");
  }
  // Fix the first sign to +1; the norm is invariant under a global flip.
  double best = 0.0;
  const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
  for (std::uint64_t bits = 0; bits < patterns; ++bits) {
    BlochVector sum = directions[0];
    for (std::size_t k = 1; k < n; ++k) {
      const double sign = (bits >> (k - 1)) & 1 ? -1.0 : 1.0;
      sum += sign * directions[k];
    }
    best = std::max(best, sum.norm());
  }
  return best / static_cast<double>(n);
}

double planar_bound(int m) {
  if (m < 2) {
    throw std::invalid_argument("planar_bound: M must be at least 2");
  }
  return 1.0 / (m * std::sin(std::numbers::pi / (2.0 * m)));
}

MubWitness build_mub_witness(const MubPair& pair, const ToleranceConfig& tol) {
  require_mub(pair, tol);
  const Eigen::Index d = pair.dim();
  const double sqrt_d = std::sqrt(static_cast<double>(d));
  const double denom = (sqrt_d - 1.0) * (sqrt_d + 2.0);
  if (std::abs(denom) < 1e-12) {
    throw std::domain_error("build_mub_witness: coefficient singularity");
  }

  MubWitness w;
  w.dim = d;
  w.coeff_a = -1.0 / denom;
  w.coeff_b = (sqrt_d + 1.0) / (sqrt_d * denom);
  w.coeff_c = 2.0 / (sqrt_d * denom);

  const Matrix identity = Matrix::Identity(d, d);
  w.z.assign(d, std::vector<Matrix>(d));
  for (Eigen::Index j = 0; j < d; ++j) {
    const Eigen::VectorXcd phi = pair.basis_a.vector(j);
    const Matrix phi_proj = phi * phi.adjoint();
    for (Eigen::Index k = 0; k < d; ++k) {
      const Eigen::VectorXcd psi = pair.basis_b.vector(k);
      const Matrix z1 = w.coeff_a * (phi_proj + psi * psi.adjoint()) +
                        w.coeff_b * identity;

      // Alternative representation through the orthogonal superpositions
      // chi^+- = (phi +- e^{-i theta} psi) / N_+- with
      // e^{i theta} = sqrt(d) <phi|psi>.
      const Complex phase = sqrt_d * (phi.adjoint() * psi)(0);
      const Eigen::VectorXcd raw_plus = phi + std::conj(phase) * psi;
      const Eigen::VectorXcd raw_minus = phi - std::conj(phase) * psi;
      w.n_plus = raw_plus.norm();
      w.n_minus = raw_minus.norm();
      const Eigen::VectorXcd chi_plus = raw_plus / w.n_plus;
      const Eigen::VectorXcd chi_minus = raw_minus / w.n_minus;
      if (std::abs((chi_plus.adjoint() * chi_minus)(0)) > tol.exact_tol) {
        throw std::runtime_error(
            "build_mub_witness: superposition states are not orthogonal");
      }
      const Matrix minus_proj = chi_minus * chi_minus.adjoint();
      const Matrix plus_proj = chi_plus * chi_plus.adjoint();
      const Matrix z2 = w.coeff_c * minus_proj +
                        w.coeff_b * (identity - minus_proj - plus_proj);
      if ((z1 - z2).cwiseAbs().maxCoeff() > tol.exact_tol) {
        throw std::runtime_error(
            "build_mub_witness: Z representations disagree");
      }
      if (std::abs(z1.trace().real() - 1.0) > tol.exact_tol) {
        throw std::runtime_error("build_mub_witness: Z trace is not 1");
      }
      if (min_eigenvalue(z1) < -tol.psd_tol) {
        throw std::runtime_error("build_mub_witness: Z is not PSD");
      }
      w.z[j][k] = z1;
    }
  }
  // Coefficient relation that kills the cross terms in the chi form.
  const double residual = (w.coeff_c - w.coeff_b) / (w.n_minus * w.n_minus) +
                          w.coeff_b / (w.n_plus * w.n_plus);
  if (std::abs(residual) > tol.exact_tol) {
    throw std::runtime_error(
        "build_mub_witness: phase-cancellation identity violated");
  }
  return w;
}

double mub_steering_value(const MubPair& pair, double lambda, int s, int t) {
  const MubWitness w = build_mub_witness(pair);
  const Eigen::Index d = pair.dim();
  if (s < 0 || s >= d || t < 0 || t >= d) {
    throw std::out_of_range("mub_steering_value: index out of range");
  }
  const Observable a1 = mix_white_noise(basis_observable(pair.basis_a), lambda);
  const Observable a2 = mix_white_noise(basis_observable(pair.basis_b), lambda);

  double value = 0.0;
  for (Eigen::Index j = 0; j < d; ++j) {
    value += (w.z[j][t] * a1.effects[j] / static_cast<double>(d)).trace().real();
  }
  for (Eigen::Index k = 0; k < d; ++k) {
    value += (w.z[s][k] * a2.effects[k] / static_cast<double>(d)).trace().real();
  }
  value -= (w.z[s][t] / static_cast<double>(d)).trace().real();
  return value * d;
}

double mub_threshold(int d) {
  if (d < 2) {
    throw std::invalid_argument("mub_threshold: d must be at least 2");
  }
  return 0.5 * (1.0 + 1.0 / (1.0 + std::sqrt(static_cast<double>(d))));
}

WitnessReport tightness_report(const std::string& config_id,
                               const ToleranceConfig& tol) {
  const ConfigRef config = parse_config_id(config_id);
  WitnessReport report;
  report.config = config.id;
  report.lambda_construction = construction_lambda(config);
  report.lambda_witness = witness_bound(config);
  report.tight =
      std::abs(report.lambda_witness - report.lambda_construction) <= tol.eq_tol;
  return report;
}

std::pair<double, double> specker_window() {
  const double pi = std::numbers::pi;
  const double lo = 1.0 / (4.0 * std::sin(pi / 8.0));
  const double hi = 1.0 / (std::cos(pi / 4.0) + 2.0 * std::sin(pi / 8.0));
  return {lo, hi};
}

SpeckerClass specker_classify(double lambda) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::domain_error("specker_classify: lambda must be in [0, 1]");
  }
  const auto [lo, hi] = specker_window();
  if (lambda <= lo) return SpeckerClass::all_compatible;
  if (lambda <= hi) return SpeckerClass::specker_4;
  return SpeckerClass::some_triple_incompatible;
}

std::string to_string(SpeckerClass c) {
  switch (c) {
    case SpeckerClass::all_compatible:
      return "all_compatible";
    case SpeckerClass::specker_4:
      return "specker_4";
    case SpeckerClass::some_triple_incompatible:
      return "some_triple_incompatible";
  }
  return "unknown";
}

}  // namespace jointmeas
