#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "jointmeas/bloch.hpp"
#include "jointmeas/operators.hpp"

using namespace jointmeas;

namespace {

Matrix random_hermitian(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> normal;
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      m(r, c) = Complex(normal(rng), normal(rng));
    }
  }
  return 0.5 * (m + Matrix(m.adjoint()));
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("min_eigenvalue basic values") {
  CHECK(min_eigenvalue(Matrix::Identity(3, 3)) == doctest::Approx(1.0).epsilon(1e-14));

  const Observable sharp_x = observable_from_bloch({1, 0, 0}, 1.0);
  CHECK(std::abs(min_eigenvalue(sharp_x.effects[0])) <= 1e-12);

  // (I + 0.5 x.sigma)/2 has eigenvalues (1 +- 0.5)/2.
  const Observable noisy_x = observable_from_bloch({1, 0, 0}, 0.5);
  CHECK(min_eigenvalue(noisy_x.effects[0]) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("min_eigenvalue closed form agrees with spectral path") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix h = random_hermitian(rng, 2);
    CHECK(std::abs(min_eigenvalue_2x2(h) - min_eigenvalue_spectral(h)) <= 1e-12);
  }
}

TEST_CASE("min_eigenvalue rejects non-Hermitian input") {
  Matrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(min_eigenvalue(bad), std::invalid_argument);
}

TEST_CASE("validate_povm") {
  CHECK(validate_povm(observable_from_bloch({1, 0, 0}, 1.0)).ok());

  Observable broken;
  broken.outcomes = {"a", "b"};
  broken.effects = {1.01 * Matrix::Identity(2, 2), -0.01 * Matrix::Identity(2, 2)};
  const PovmReport report = validate_povm(broken);
  CHECK_FALSE(report.positive);
  CHECK_FALSE(report.ok());

  CHECK(validate_povm(adaptive_joint(platonic_config("tetrahedron4"))).ok());

  Observable mismatch;
  mismatch.outcomes = {"a", "b"};
  mismatch.effects = {Matrix::Identity(2, 2), Matrix::Identity(3, 3)};
  CHECK_THROWS_AS(validate_povm(mismatch), std::invalid_argument);
}

TEST_CASE("marginal of a product-style tuple POVM recovers the factor") {
  const Observable a = observable_from_bloch({0, 0, 1}, 0.7);
  const double p[2] = {0.25, 0.75};
  JointObservable g;
  g.dim = 2;
  g.slots = {{"+", "-"}, {"+", "-"}};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      g.effects.emplace(OutcomeTuple{x, y}, p[y] * a.effects[x]);
    }
  }
  const Observable recovered = marginal(g, 0);
  for (int x = 0; x < 2; ++x) {
    CHECK(max_abs_diff(recovered.effects[x], a.effects[x]) <= 1e-15);
  }
}

TEST_CASE("marginals of the catalog joints carry the published noise") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Observable m2 = marginal(adaptive_joint(planar_config(2)), 0);
  const Observable want2 = observable_from_bloch({1, 0, 0}, inv_sqrt2);
  CHECK(max_abs_diff(m2.effects[0], want2.effects[0]) <= 1e-14);

  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const QubitConfig oct = platonic_config("octahedron3");
  const JointObservable g3 = adaptive_joint(oct);
  for (std::size_t slot = 0; slot < 3; ++slot) {
    const Observable got = marginal(g3, slot);
    const Observable want = observable_from_bloch(oct.targets[slot], inv_sqrt3);
    CHECK(max_abs_diff(got.effects[0], want.effects[0]) <= 1e-14);
    CHECK(max_abs_diff(got.effects[1], want.effects[1]) <= 1e-14);
  }
}

TEST_CASE("mix_white_noise") {
  const Observable a = observable_from_bloch({1, 0, 0}, 1.0);

  const Observable same = mix_white_noise(a, 1.0);
  CHECK(max_abs_diff(same.effects[0], a.effects[0]) <= 1e-15);

  const Observable trivial = mix_white_noise(a, 0.0);
  CHECK(max_abs_diff(trivial.effects[0], 0.5 * Matrix::Identity(2, 2)) <= 1e-15);
  CHECK(max_abs_diff(trivial.effects[1], 0.5 * Matrix::Identity(2, 2)) <= 1e-15);

  const double l = 1.0 / std::sqrt(2.0);
  const Observable noisy = mix_white_noise(a, l);
  const Observable direct = observable_from_bloch({1, 0, 0}, l);
  CHECK(max_abs_diff(noisy.effects[0], direct.effects[0]) <= 1e-15);

  CHECK_THROWS_AS(mix_white_noise(a, 1.5), std::domain_error);
}

TEST_CASE("mix_white_noise composition law") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const Observable base = observable_from_bloch({0, 1, 0}, 0.9);
  for (int trial = 0; trial < 50; ++trial) {
    const double l1 = uniform(rng), l2 = uniform(rng);
    const Observable twice = mix_white_noise(mix_white_noise(base, l1), l2);
    const Observable once = mix_white_noise(base, l1 * l2);
    for (std::size_t i = 0; i < base.effects.size(); ++i) {
      CHECK(max_abs_diff(twice.effects[i], once.effects[i]) <= 1e-12);
    }
  }
}

TEST_CASE("marginal commutes with white-noise mixing of the joint") {
  const JointObservable g = adaptive_joint(platonic_config("tetrahedron4"));
  const double l = 0.37;
  for (std::size_t slot = 0; slot < g.num_slots(); ++slot) {
    const Observable mixed_first = marginal(mix_white_noise(g, l), slot);
    const Observable marginal_first = mix_white_noise(marginal(g, slot), l);
    for (std::size_t i = 0; i < mixed_first.effects.size(); ++i) {
      CHECK(max_abs_diff(mixed_first.effects[i], marginal_first.effects[i]) <= 1e-12);
    }
  }
}

TEST_CASE("transpose_observable") {
  const Observable sx = observable_from_bloch({1, 0, 0}, 1.0);
  const Observable sx_t = transpose_observable(sx);
  CHECK(max_abs_diff(sx.effects[0], sx_t.effects[0]) <= 1e-15);

  const Observable sy = observable_from_bloch({0, 1, 0}, 1.0);
  const Observable sy_t = transpose_observable(sy);
  const Observable s_minus_y = observable_from_bloch({0, -1, 0}, 1.0);
  CHECK(max_abs_diff(sy_t.effects[0], s_minus_y.effects[0]) <= 1e-15);

  // Involution and validity.
  const Observable back = transpose_observable(sy_t);
  CHECK(max_abs_diff(back.effects[0], sy.effects[0]) == 0.0);
  CHECK(validate_povm(sy_t).ok());

  // Spectra are preserved per effect.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix h = random_hermitian(rng, 4);
    CHECK(std::abs(min_eigenvalue(h) - min_eigenvalue(Matrix(h.transpose()))) <= 1e-12);
  }
}

TEST_CASE("adaptive_combine reproduces the outcome-independent special case") {
  const Observable a1 = observable_from_bloch({1, 0, 0}, 1.0);
  const Observable a2 = observable_from_bloch({0, 1, 0}, 1.0);
  const double mu = 0.4;
  const double p[2] = {0.3, 0.7};

  PostProcessing post;
  post.conditional.resize(2);
  for (int beta = 0; beta < 2; ++beta) {
    post.conditional[0].push_back({{{beta, 0}, p[0]}, {{beta, 1}, p[1]}});
    post.conditional[1].push_back({{{0, beta}, p[0]}, {{1, beta}, p[1]}});
  }
  const JointObservable g = adaptive_combine({a1, a2}, {mu, 1.0 - mu}, post,
                                             {{"+", "-"}, {"+", "-"}});
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const Matrix want = mu * p[y] * a1.effects[x] + (1.0 - mu) * p[x] * a2.effects[y];
      CHECK(max_abs_diff(g.effect({x, y}), want) <= 1e-15);
    }
  }
  CHECK(validate_povm(g).ok());
}

TEST_CASE("sign-rule post-processing matches adaptive_joint bit-exactly") {
  for (const char* name : {"octahedron3", "tetrahedron4", "icosahedron6"}) {
    const QubitConfig config = platonic_config(name);
    std::vector<Observable> auxiliaries;
    for (const BlochVector& b : config.guesses) {
      auxiliaries.push_back(observable_from_bloch(b, 1.0));
    }
    std::vector<std::vector<std::string>> slots(config.targets.size(), {"+", "-"});
    const JointObservable direct = adaptive_joint(config);
    const JointObservable combined =
        adaptive_combine(auxiliaries, config.effective_weights(),
                         sign_rule_post_processing(config), slots);
    REQUIRE(direct.effects.size() == combined.effects.size());
    for (const auto& [t, e] : direct.effects) {
      CHECK(max_abs_diff(e, combined.effect(t)) == 0.0);
    }
  }
}

TEST_CASE("adaptive_combine with a single identity post-processing relabels") {
  const Observable b = observable_from_bloch({0, 0, 1}, 0.8);
  PostProcessing post;
  post.conditional.push_back({{{{0}, 1.0}}, {{{1}, 1.0}}});
  const JointObservable g = adaptive_combine({b}, {1.0}, post, {{"+", "-"}});
  CHECK(max_abs_diff(g.effect({0}), b.effects[0]) == 0.0);
  CHECK(max_abs_diff(g.effect({1}), b.effects[1]) == 0.0);
}

TEST_CASE("adaptive_combine rejects invalid weights and distributions") {
  const Observable b = observable_from_bloch({0, 0, 1}, 1.0);
  PostProcessing post;
  post.conditional.push_back({{{{0}, 1.0}}, {{{1}, 1.0}}});
  CHECK_THROWS_AS(adaptive_combine({b}, {0.9}, post, {{"+", "-"}}),
                  std::invalid_argument);

  PostProcessing leaky;
  leaky.conditional.push_back({{{{0}, 0.5}}, {{{1}, 1.0}}});
  CHECK_THROWS_AS(adaptive_combine({b}, {1.0}, leaky, {{"+", "-"}}),
                  std::invalid_argument);
}

TEST_CASE("marginals of adaptive_combine stay valid observables") {
  const QubitConfig config = platonic_config("dodecahedron10");
  const JointObservable g = adaptive_joint(config);
  for (std::size_t slot = 0; slot < g.num_slots(); ++slot) {
    CHECK(validate_povm(marginal(g, slot)).ok());
  }
}
