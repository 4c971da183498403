#include "jointmeas/bloch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jointmeas {

namespace {

const Complex kI(0.0, 1.0);

Matrix make_pauli(int i) {
  Matrix m(2, 2);
  switch (i) {
    case 0:
      m << 0, 1, 1, 0;
      break;
    case 1:
      m << 0, -kI, kI, 0;
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

void require_unit(const BlochVector& a, const char* what) {
  if (std::abs(a.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument(std::string(what) + ": vector is not unit");
  }
}

}  // namespace

const Matrix& pauli(int i) {
  static const Matrix sx = make_pauli(0);
  static const Matrix sy = make_pauli(1);
  static const Matrix sz = make_pauli(2);
  switch (i) {
    case 0:
      return sx;
    case 1:
      return sy;
    case 2:
      return sz;
    default:
      throw std::out_of_range("pauli: index must be 0, 1 or 2");
  }
}

Matrix dot_sigma(const BlochVector& a) {
  return a.x() * pauli(0) + a.y() * pauli(1) + a.z() * pauli(2);
}

Observable observable_from_bloch(const BlochVector& a, double lambda) {
  require_unit(a, "observable_from_bloch");
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::domain_error("observable_from_bloch: lambda must be in [0, 1]");
  }
  const Matrix half = 0.5 * Matrix::Identity(2, 2);
  const Matrix tilt = 0.5 * lambda * dot_sigma(a);
  return Observable{{"+", "-"}, {half + tilt, half - tilt}};
}

BlochVector bloch_of_effect(const Matrix& effect_plus) {
  BlochVector m;
  for (int i = 0; i < 3; ++i) {
    m[i] = (effect_plus * pauli(i)).trace().real();
  }
  return m;
}

int sign_rule(const BlochVector& a, const BlochVector& b, double dot_tol) {
  const double dot = a.dot(b);
  if (std::abs(dot) < dot_tol) {
    throw std::invalid_argument(
        "sign_rule: target and guess are orthogonal (a . b = 0)");
  }
  return dot > 0.0 ? +1 : -1;
}

std::vector<double> QubitConfig::effective_weights() const {
  if (!weights.empty()) return weights;
  return std::vector<double>(guesses.size(), 1.0 / guesses.size());
}

PostProcessing sign_rule_post_processing(const QubitConfig& config,
                                         const ToleranceConfig& tol) {
  const std::size_t m = config.targets.size();
  PostProcessing post;
  post.conditional.reserve(config.guesses.size());
  for (const BlochVector& b : config.guesses) {
    OutcomeTuple plus(m), minus(m);
    for (std::size_t l = 0; l < m; ++l) {
      const int s = sign_rule(config.targets[l], b, tol.dot_tol);
      plus[l] = s > 0 ? 0 : 1;
      minus[l] = 1 - plus[l];
    }
    post.conditional.push_back({{{plus, 1.0}}, {{minus, 1.0}}});
  }
  return post;
}

JointObservable adaptive_joint(const QubitConfig& config,
                               const ToleranceConfig& tol) {
  if (config.targets.empty() || config.guesses.empty()) {
    throw std::invalid_argument("adaptive_joint: empty configuration");
  }
  std::vector<Observable> auxiliaries;
  auxiliaries.reserve(config.guesses.size());
  for (const BlochVector& b : config.guesses) {
    auxiliaries.push_back(observable_from_bloch(b, 1.0));
  }
  std::vector<std::vector<std::string>> slots(config.targets.size(),
                                              {"+", "-"});
  return adaptive_combine(auxiliaries, config.effective_weights(),
                          sign_rule_post_processing(config, tol),
                          std::move(slots), tol);
}

std::vector<double> marginal_noise(const QubitConfig& config,
                                   const ToleranceConfig& tol) {
  const auto weights = config.effective_weights();
  std::vector<double> lambdas;
  lambdas.reserve(config.targets.size());
  for (const BlochVector& a : config.targets) {
    BlochVector m = BlochVector::Zero();
    for (std::size_t k = 0; k < config.guesses.size(); ++k) {
      m += weights[k] * sign_rule(a, config.guesses[k], tol.dot_tol) *
           config.guesses[k];
    }
    if (a.cross(m).norm() > tol.eq_tol || a.dot(m) < 0.0) {
      throw std::domain_error(
          "marginal_noise: marginal Bloch vector is biased or rotated "
          "relative to its target");
    }
    lambdas.push_back(m.norm());
  }
  return lambdas;
}

QubitConfig planar_config(int m) {
  if (m < 2) {
    throw std::invalid_argument("planar_config: M must be at least 2");
  }
  QubitConfig config;
  config.name = "planar:M=" + std::to_string(m);
  const double pi = std::numbers::pi;
  for (int k = 0; k < m; ++k) {
    const double theta = k * pi / m;
    config.targets.emplace_back(std::cos(theta), std::sin(theta), 0.0);
  }
  if (m % 2 == 1) {
    config.guesses = config.targets;
  } else {
    const double shift = pi / (2.0 * m);
    for (int k = 0; k < m; ++k) {
      const double theta = k * pi / m + shift;
      config.guesses.emplace_back(std::cos(theta), std::sin(theta), 0.0);
    }
  }
  return config;
}

QubitConfig platonic_config(std::string_view name) {
  const double s3 = 1.0 / std::sqrt(3.0);
  const double chi = (1.0 + std::sqrt(5.0)) / 2.0;  // golden ratio
  QubitConfig config;
  config.name = std::string(name);
  if (name == "octahedron3") {
    config.targets = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    config.guesses = {BlochVector(1, 1, 1) * s3, BlochVector(-1, 1, 1) * s3,
                      BlochVector(1, -1, 1) * s3, BlochVector(-1, -1, 1) * s3};
  } else if (name == "tetrahedron4") {
    config.targets = {BlochVector(1, 1, 1) * s3, BlochVector(1, -1, -1) * s3,
                      BlochVector(-1, 1, -1) * s3, BlochVector(-1, -1, 1) * s3};
    config.guesses = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  } else if (name == "icosahedron6") {
    const double n = std::sqrt((5.0 + std::sqrt(5.0)) / 2.0);
    config.targets = {BlochVector(0, 1, chi) / n,  BlochVector(0, -1, chi) / n,
                      BlochVector(1, chi, 0) / n,  BlochVector(-1, chi, 0) / n,
                      BlochVector(chi, 0, 1) / n,  BlochVector(-chi, 0, 1) / n};
    config.guesses = config.targets;
  } else if (name == "dodecahedron10") {
    const double ichi = 1.0 / chi;
    config.targets = {
        BlochVector(1, 1, 1) * s3,        BlochVector(1, -1, 1) * s3,
        BlochVector(-1, 1, 1) * s3,       BlochVector(1, 1, -1) * s3,
        BlochVector(0, ichi, chi) * s3,   BlochVector(0, -ichi, chi) * s3,
        BlochVector(ichi, chi, 0) * s3,   BlochVector(-ichi, chi, 0) * s3,
        BlochVector(chi, 0, ichi) * s3,   BlochVector(-chi, 0, ichi) * s3};
    config.guesses = config.targets;
  } else {
    throw std::invalid_argument("platonic_config: unknown name '" +
                                std::string(name) + "'");
  }
  return config;
}

OptimalPair optimal_pair(const BlochVector& a1, const BlochVector& a2,
                         const ToleranceConfig& tol) {
  require_unit(a1, "optimal_pair");
  require_unit(a2, "optimal_pair");
  const double sum_norm = (a1 + a2).norm();
  const double diff_norm = (a1 - a2).norm();
  if (sum_norm < tol.dot_tol || diff_norm < tol.dot_tol) {
    throw std::invalid_argument(
        "optimal_pair: degenerate (anti)parallel directions");
  }
  OptimalPair result;
  result.mu = sum_norm / (sum_norm + diff_norm);
  result.lambda = 2.0 / (sum_norm + diff_norm);

  QubitConfig config;
  config.name = "pair";
  config.targets = {a1, a2};
  config.guesses = {(a1 + a2) / sum_norm, (a1 - a2) / diff_norm};
  config.weights = {result.mu, 1.0 - result.mu};
  result.joint = adaptive_joint(config, tol);
  return result;
}

}  // namespace jointmeas
