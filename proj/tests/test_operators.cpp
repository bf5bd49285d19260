#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "homtype/norms.hpp"
#include "homtype/operators.hpp"
#include "homtype/scenarios.hpp"

using namespace homtype;

namespace {
double rand_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1p-53;
}
} // namespace

TEST_CASE("canonical family enumerates every distinct open ball") {
  const auto two = build_finite_space({{0, 1}, {1, 0}}, {1, 1});
  const auto fam2 = BallFamily::canonical(two);
  CHECK(fam2.size() == 4); // {x}, {y}, and the full ball from each center
  std::size_t full = 0;
  for (std::size_t b = 0; b < fam2.size(); ++b)
    if (fam2.ball(b).count == 2) ++full;
  CHECK(full == 2);

  const auto one = FinitePointSpace::line({LogReal::from_value(1.0)},
                                          {LogReal::from_value(1.0)});
  CHECK(BallFamily::canonical(one).size() == 1);

  // every ball membership matches a brute-force open-ball scan
  const auto dexp = double_exponential_space(5);
  const auto fam = BallFamily::canonical(dexp);
  CHECK(fam.size() <= dexp.size() * dexp.size());
  for (std::size_t b = 0; b < fam.size(); ++b) {
    const auto& ball = fam.ball(b);
    std::vector<bool> in_family(dexp.size(), false);
    for (PointId y : fam.members(b)) in_family[y] = true;
    for (PointId y = 0; y < dexp.size(); ++y)
      CHECK(in_family[y] == (dexp.distance(ball.center, y) < ball.radius));
  }
  // the proof-scale balls B(4, 2^(2^j) - 4) appear with the right membership
  for (int j = 2; j <= 4; ++j) {
    const LogReal r = dexp.position(j - 1) - LogReal::from_value(4.0);
    bool found = false;
    for (std::size_t b = 0; b < fam.size(); ++b) {
      if (fam.ball(b).center != 0) continue;
      if (fam.ball(b).count == static_cast<std::uint32_t>(j - 1)) {
        found = true;
        CHECK(fam.measure(b).ln_abs() ==
              doctest::Approx(dexp.ball_measure(0, r).ln_abs()).epsilon(1e-12));
      }
    }
    CHECK(found);
  }
}

TEST_CASE("maximal function basics") {
  const auto two = build_finite_space({{0, 1}, {1, 0}}, {1, 1});
  const auto fam = BallFamily::canonical(two);
  const auto mf = maximal_function(two, std::vector<double>{1.0, 0.0}, fam);
  CHECK(mf[0] == doctest::Approx(1.0));
  CHECK(mf[1] == doctest::Approx(0.5));

  const auto space = random_bounded_space(12, 808);
  const auto family = BallFamily::canonical(space);
  const std::vector<double> c(space.size(), 3.25);
  for (double v : maximal_function(space, c, family))
    CHECK(v == doctest::Approx(3.25));

  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> f(space.size()), g(space.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] = 2.0 * rand_unit(rng) - 1.0;
      g[i] = 2.0 * rand_unit(rng) - 1.0;
    }
    const auto mf = maximal_function(space, f, family);
    const auto mg = maximal_function(space, g, family);
    std::vector<double> fg(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fg[i] = f[i] + g[i];
    const auto mfg = maximal_function(space, fg, family);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(mf[i] >= std::abs(f[i]) - 1e-14); // singleton balls
      CHECK(mfg[i] <= mf[i] + mg[i] + 1e-12); // sublinearity
    }
  }
}

TEST_CASE("Muckenhoupt constants") {
  const auto two = build_finite_space({{0, 1}, {1, 0}}, {1, 1});
  const auto fam2 = BallFamily::canonical(two);
  CHECK(muckenhoupt_constant(two, std::vector<double>{2.0, 1.0}, 1.0, fam2) ==
        doctest::Approx(1.5));
  for (double p : {1.0, 2.0, 3.0})
    CHECK(muckenhoupt_constant(two, std::vector<double>{1.0, 1.0}, p, fam2) ==
          doctest::Approx(1.0));
  CHECK_THROWS_AS(
      muckenhoupt_constant(two, std::vector<double>{1.0, 0.0}, 1.0, fam2),
      NonpositiveWeight);

  const auto space = random_bounded_space(10, 66);
  const auto family = BallFamily::canonical(space);
  std::mt19937_64 rng(42);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> w(space.size());
    for (double& x : w) x = 0.2 + 3.0 * rand_unit(rng);
    // [w]_{A_q} <= [w]_{A_p} for q >= p
    const double a1 = muckenhoupt_constant(space, w, 1.0, family);
    const double a2 = muckenhoupt_constant(space, w, 2.0, family);
    const double a4 = muckenhoupt_constant(space, w, 4.0, family);
    CHECK(a2 <= a1 * (1.0 + 1e-12));
    CHECK(a4 <= a2 * (1.0 + 1e-12));
    // pointwise control of the maximal function by the A1 constant
    const auto mw = maximal_function(space, w, family);
    for (std::size_t i = 0; i < w.size(); ++i)
      CHECK(mw[i] <= a1 * w[i] * (1.0 + 1e-12));
  }
}

TEST_CASE("weight dilation bound over family balls") {
  const auto space = random_bounded_space(10, 31415);
  const auto family = BallFamily::canonical(space);
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> w(space.size());
    for (double& x : w) x = 0.2 + 3.0 * rand_unit(rng);
    for (double p : {1.0, 2.0}) {
      const double ap = muckenhoupt_constant(space, w, p, family);
      for (std::size_t b = 0; b < family.size(); ++b) {
        for (double lambda : {2.0, 4.0}) {
          const LogReal big_r =
              family.ball(b).radius * LogReal::from_value(lambda);
          double w_ball = 0.0, w_big = 0.0;
          double mu_ball = 0.0, mu_big = 0.0;
          for (PointId y = 0; y < space.size(); ++y) {
            const bool in_small =
                space.distance(family.ball(b).center, y) < family.ball(b).radius;
            const bool in_big = space.distance(family.ball(b).center, y) < big_r;
            const double m = space.mass(y).value();
            if (in_small) {
              w_ball += w[y] * m;
              mu_ball += m;
            }
            if (in_big) {
              w_big += w[y] * m;
              mu_big += m;
            }
          }
          CHECK(w_big / w_ball <=
                ap * std::pow(mu_big / mu_ball, p) * (1.0 + 1e-12));
        }
      }
    }
  }
}

TEST_CASE("maximal operator norm estimates") {
  const auto space = random_bounded_space(9, 271828);
  // sup norm: averages never exceed the maximum
  const auto sup_est = maximal_operator_norm(space, NormSpec::sup(), 4);
  CHECK(sup_est.lower == doctest::Approx(1.0));
  REQUIRE(sup_est.upper.has_value());
  CHECK(*sup_est.upper == doctest::Approx(1.0));

  for (double p : {1.0, 1.5, 2.0}) {
    const auto est = maximal_operator_norm(space, NormSpec::lp(p), 6);
    REQUIRE(est.upper.has_value());
    CHECK(est.lower >= 1.0 - 1e-12);
    CHECK(est.lower <= *est.upper + 1e-12);
  }
  // no certified upper bound below p = 1 or with weights
  CHECK_FALSE(maximal_operator_norm(space, NormSpec::lp(0.5), 2).upper.has_value());
  CHECK_FALSE(maximal_operator_norm(space, NormSpec::lorentz(2.0, 1.0), 2)
                  .upper.has_value());

  // the lower bound is a running max: more trials never lower it
  const auto few = maximal_operator_norm(space, NormSpec::lp(2.0), 2, 99);
  const auto many = maximal_operator_norm(space, NormSpec::lp(2.0), 20, 99);
  CHECK(many.lower >= few.lower - 1e-15);
}

TEST_CASE("Rubio de Francia iteration") {
  const auto space = random_bounded_space(11, 1618);
  const NormSpec l2 = NormSpec::lp(2.0);
  const auto est = maximal_operator_norm(space, l2, 6);
  const double m = *est.upper;

  // constants: M fixes them, so the series is geometric
  const std::vector<double> c(space.size(), 1.5);
  const auto rc = rubio_de_francia(space, c, l2, 1.0, 12);
  for (double v : rc)
    CHECK(v == doctest::Approx(2.0 * 1.5 * (1.0 - std::ldexp(1.0, -13))));

  std::mt19937_64 rng(44);
  for (int t = 0; t < 25; ++t) {
    std::vector<double> g(space.size());
    for (double& x : g) x = 2.0 * rand_unit(rng) - 1.0;
    const auto r = rubio_de_francia(space, g, l2, m, 40);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(g[i]) <= r[i]);
    CHECK(evaluate_norm(space, r, l2) <=
          2.0 * evaluate_norm(space, g, l2) * (1.0 + 1e-12));
  }

  CHECK_THROWS_AS(rubio_de_francia(space, c, l2, m, 4), Error);
  CHECK_THROWS_AS(rubio_de_francia(space, c, l2, 0.5, 12), InvalidOperatorNorm);
  // a declared norm below the true one is caught by the growth certificate
  std::vector<double> spike(space.size(), 0.0);
  spike[0] = 1.0;
  CHECK_THROWS_AS(rubio_de_francia(space, spike, l2, 1.0, 40),
                  InvalidOperatorNorm);
}

TEST_CASE("A1 constant of the majorant stays below twice the operator norm") {
  std::mt19937_64 rng(45);
  for (int sp = 0; sp < 4; ++sp) {
    const auto space = random_bounded_space(10, 5000 + sp);
    const NormSpec l2 = NormSpec::lp(2.0);
    const double m = *maximal_operator_norm(space, l2, 6).upper;
    const auto family = BallFamily::canonical(space);
    for (int t = 0; t < 5; ++t) {
      std::vector<double> g(space.size());
      for (double& x : g) x = 2.0 * rand_unit(rng) - 1.0;
      const auto r = rubio_de_francia(space, g, l2, m, 40);
      CHECK(muckenhoupt_constant(space, r, 1.0, family) <= 2.0 * m * 1.05);
    }
  }
}
