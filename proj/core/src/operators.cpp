#include "jointmeas/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace jointmeas {

double hermiticity_deviation(const Matrix& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

void require_hermitian(const Matrix& h, double tol) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("require_hermitian: matrix is not square");
  }
  if (hermiticity_deviation(h) > tol) {
    throw std::invalid_argument("require_hermitian: matrix is not Hermitian");
  }
}

double min_eigenvalue_2x2(const Matrix& h) {
  const double m = 0.5 * h.trace().real();
  const double det = (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0)).real();
  const double disc = std::max(0.0, m * m - det);
  return m - std::sqrt(disc);
}

double min_eigenvalue_spectral(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double min_eigenvalue(const Matrix& h) {
  require_hermitian(h);
  if (h.rows() == 2) {
    return min_eigenvalue_2x2(h);
  }
  return min_eigenvalue_spectral(h);
}

Eigen::Index Observable::dim() const {
  return effects.empty() ? 0 : effects.front().rows();
}

namespace {

PovmReport validate_effects(const std::vector<const Matrix*>& effects,
                            Eigen::Index dim, const ToleranceConfig& tol) {
  PovmReport report;
  Matrix sum = Matrix::Zero(dim, dim);
  report.positive = true;
  for (const Matrix* e : effects) {
    if (e->rows() != dim || e->cols() != dim) {
      throw std::invalid_argument("validate_povm: effect dimension mismatch");
    }
    const double lo = min_eigenvalue(*e);
    report.min_eigenvalues.push_back(lo);
    if (lo < -tol.psd_tol) report.positive = false;
    sum += *e;
  }
  report.normalization_residual =
      (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  report.normalized = report.normalization_residual <= tol.eq_tol;
  return report;
}

}  // namespace

PovmReport validate_povm(const Observable& obs, const ToleranceConfig& tol) {
  if (obs.effects.empty()) {
    throw std::invalid_argument("validate_povm: observable has no effects");
  }
  std::vector<const Matrix*> ptrs;
  ptrs.reserve(obs.effects.size());
  for (const Matrix& e : obs.effects) ptrs.push_back(&e);
  return validate_effects(ptrs, obs.effects.front().rows(), tol);
}

Matrix JointObservable::effect(const OutcomeTuple& t) const {
  auto it = effects.find(t);
  if (it != effects.end()) return it->second;
  return Matrix::Zero(dim, dim);
}

PovmReport validate_povm(const JointObservable& g, const ToleranceConfig& tol) {
  if (g.effects.empty()) {
    throw std::invalid_argument("validate_povm: joint observable is empty");
  }
  std::vector<const Matrix*> ptrs;
  ptrs.reserve(g.effects.size());
  for (const auto& [t, e] : g.effects) ptrs.push_back(&e);
  return validate_effects(ptrs, g.dim, tol);
}

Observable marginal(const JointObservable& g, std::size_t slot) {
  if (slot >= g.slots.size()) {
    throw std::out_of_range("marginal: slot index out of range");
  }
  const std::size_t n = g.slots[slot].size();
  Observable out;
  out.outcomes = g.slots[slot];
  out.effects.assign(n, Matrix::Zero(g.dim, g.dim));
  for (const auto& [t, e] : g.effects) {
    out.effects[static_cast<std::size_t>(t[slot])] += e;
  }
  return out;
}

Observable mix_white_noise(const Observable& obs, double lambda) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::domain_error("mix_white_noise: lambda must be in [0, 1]");
  }
  const Eigen::Index d = obs.dim();
  Observable out;
  out.outcomes = obs.outcomes;
  out.effects.reserve(obs.effects.size());
  for (const Matrix& e : obs.effects) {
    out.effects.push_back(lambda * e + (1.0 - lambda) * e.trace().real() / d *
                                           Matrix::Identity(d, d));
  }
  return out;
}

JointObservable mix_white_noise(const JointObservable& g, double lambda) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::domain_error("mix_white_noise: lambda must be in [0, 1]");
  }
  // Mixing towards tr[G(t)] I/d keeps absent tuples absent (trace zero).
  JointObservable out;
  out.dim = g.dim;
  out.slots = g.slots;
  for (const auto& [t, e] : g.effects) {
    out.effects.emplace(t, lambda * e + (1.0 - lambda) * e.trace().real() /
                                            g.dim *
                                            Matrix::Identity(g.dim, g.dim));
  }
  return out;
}

Observable transpose_observable(const Observable& obs) {
  Observable out;
  out.outcomes = obs.outcomes;
  out.effects.reserve(obs.effects.size());
  for (const Matrix& e : obs.effects) out.effects.push_back(e.transpose());
  return out;
}

JointObservable adaptive_combine(const std::vector<Observable>& auxiliaries,
                                 const std::vector<double>& weights,
                                 const PostProcessing& post,
                                 std::vector<std::vector<std::string>> slots,
                                 const ToleranceConfig& tol) {
  const std::size_t n = auxiliaries.size();
  if (weights.size() != n || post.conditional.size() != n) {
    throw std::invalid_argument("adaptive_combine: size mismatch");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) {
      throw std::invalid_argument("adaptive_combine: negative weight");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > tol.exact_tol) {
    throw std::invalid_argument("adaptive_combine: weights must sum to 1");
  }
  const Eigen::Index d = auxiliaries.empty() ? 0 : auxiliaries.front().dim();

  JointObservable g;
  g.dim = d;
  g.slots = std::move(slots);
  for (std::size_t k = 0; k < n; ++k) {
    const Observable& aux = auxiliaries[k];
    if (aux.dim() != d) {
      throw std::invalid_argument("adaptive_combine: dimension mismatch");
    }
    if (post.conditional[k].size() != aux.effects.size()) {
      throw std::invalid_argument(
          "adaptive_combine: post-processing misses auxiliary outcomes");
    }
    for (std::size_t beta = 0; beta < aux.effects.size(); ++beta) {
      const auto& dist = post.conditional[k][beta];
      double mass = 0.0;
      for (const auto& [t, p] : dist) {
        if (p < 0.0) {
          throw std::invalid_argument(
              "adaptive_combine: negative conditional probability");
        }
        if (t.size() != g.slots.size()) {
          throw std::invalid_argument("adaptive_combine: tuple arity mismatch");
        }
        mass += p;
      }
      if (std::abs(mass - 1.0) > tol.exact_tol) {
        throw std::invalid_argument(
            "adaptive_combine: conditional distribution does not sum to 1");
      }
      for (const auto& [t, p] : dist) {
        const Matrix term = weights[k] * p * aux.effects[beta];
        auto [it, inserted] = g.effects.emplace(t, term);
        if (!inserted) it->second += term;
      }
    }
  }
  return g;
}

}  // namespace jointmeas
