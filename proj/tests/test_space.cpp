#include <doctest.h>

#include <cmath>
#include <random>

#include "homtype/space.hpp"

using namespace homtype;

namespace {
double rand_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1p-53;
}
} // namespace

TEST_CASE("two-point build infers k0 = 1") {
  const auto s = build_finite_space({{0, 1}, {1, 0}}, {1, 1});
  CHECK(s.k0() == doctest::Approx(1.0));
  CHECK(s.size() == 2);
}

TEST_CASE("declared k0 below the minimal one is rejected") {
  CHECK_THROWS_AS(build_finite_space({{0, 1, 10}, {1, 0, 1}, {10, 1, 0}},
                                     {1, 1, 1}, 1.0),
                  QuasiTriangleViolation);
  // without the declaration the minimal constant is stored
  const auto s =
      build_finite_space({{0, 1, 10}, {1, 0, 1}, {10, 1, 0}}, {1, 1, 1});
  CHECK(s.k0() == doctest::Approx(5.0));
}

TEST_CASE("asymmetric and degenerate tables are rejected") {
  CHECK_THROWS_AS(build_finite_space({{0, 1}, {2, 0}}, {1, 1}),
                  AsymmetricDistance);
  CHECK_THROWS_AS(build_finite_space({{0, 0}, {0, 0}}, {1, 1}),
                  ZeroDistanceDistinctPoints);
  CHECK_THROWS_AS(build_finite_space({{0, 1}, {1, 0}}, {1, 0}), NonpositiveMass);
  CHECK_THROWS_AS(build_finite_space({{0, 1}, {1, 0}}, {1}), LengthMismatch);
}

TEST_CASE("double-exponential space: points, masses, doubling, log range") {
  const auto s3 = double_exponential_space(3);
  REQUIRE(s3.size() == 3);
  CHECK(s3.position(0).value() == doctest::Approx(4.0));
  CHECK(s3.position(1).value() == doctest::Approx(16.0));
  CHECK(s3.position(2).value() == doctest::Approx(256.0));
  CHECK(s3.mass(0).value() == doctest::Approx(2.0));
  CHECK(s3.mass(1).value() == doctest::Approx(4.0));
  CHECK(s3.mass(2).value() == doctest::Approx(8.0));
  CHECK(s3.k0() == doctest::Approx(1.0));

  const auto s = double_exponential_space(40);
  for (PointId i = 0; i < s.size(); ++i) {
    CHECK(std::isfinite(s.position(i).ln_abs()));
    CHECK(std::isfinite(s.mass(i).ln_abs()));
  }
  // sampled doubling ratios stay below 4
  std::mt19937_64 rng(991);
  for (int t = 0; t < 400; ++t) {
    const PointId x = rng() % s.size();
    const double u = rand_unit(rng);
    const LogReal r = LogReal::from_ln(u * diameter(s).ln_abs());
    const double ratio = std::exp(
        s.ball_measure(x, r * LogReal::from_value(2.0)).ln_abs() -
        s.ball_measure(x, r).ln_abs());
    CHECK(ratio <= 4.0 + 1e-12);
  }
}

TEST_CASE("open balls use strict inequality") {
  const auto s = double_exponential_space(5);
  CHECK(s.ball_measure(0, LogReal::from_value(13.0)).value() ==
        doctest::Approx(6.0)); // contains 4 and 16
  CHECK(s.ball_measure(0, LogReal::from_value(12.0)).value() ==
        doctest::Approx(2.0)); // 16 sits exactly on the boundary
}

TEST_CASE("interval ball measures") {
  IntervalDomain1D line;
  line.whole_line = true;
  CHECK(line.ball_measure(0.5, 0.25) == doctest::Approx(0.5));
  IntervalDomain1D dom;
  dom.intervals = {{0.0, 1.0}, {2.0, 3.0}};
  CHECK(dom.ball_measure(0.5, 10.0) == doctest::Approx(2.0));
  CHECK(dom.diameter().value() == doctest::Approx(3.0));
  CHECK(line.diameter().is_positive_infinity());
}

TEST_CASE("mutual minimum ball measure") {
  const auto s = double_exponential_space(12);
  CHECK(mutual_min_measure(s, 0, 1).value() == doctest::Approx(2.0));
  CHECK_THROWS_AS(mutual_min_measure(s, 1, 1), SamePoint);
  // U(4, 2^(2^j)) = 2^j - 2, checked in log space
  for (int j = 2; j <= 10; ++j) {
    const LogReal u = mutual_min_measure(s, 0, static_cast<PointId>(j - 1));
    const double expected_ln =
        j * LogReal::ln2() + std::log1p(-std::ldexp(1.0, 1 - j));
    CHECK(u.ln_abs() == doctest::Approx(expected_ln).epsilon(1e-13));
  }
  // U symmetry is exact
  for (PointId a = 0; a < s.size(); ++a)
    for (PointId b = a + 1; b < std::min<PointId>(s.size(), a + 4); ++b)
      CHECK(mutual_min_measure(s, a, b) == mutual_min_measure(s, b, a));
}

TEST_CASE("ball measure monotone in the radius") {
  const auto s = double_exponential_space(10);
  std::mt19937_64 rng(77);
  for (PointId x = 0; x < s.size(); ++x) {
    for (int t = 0; t < 100; ++t) {
      const double l1 = rand_unit(rng) * diameter(s).ln_abs();
      const double l2 = rand_unit(rng) * diameter(s).ln_abs();
      const LogReal r1 = LogReal::from_ln(std::min(l1, l2));
      const LogReal r2 = LogReal::from_ln(std::max(l1, l2));
      CHECK(s.ball_measure(x, r1) <= s.ball_measure(x, r2));
    }
  }
}

TEST_CASE("log-domain space matches direct floating point while in range") {
  const auto s = double_exponential_space(8);
  std::vector<double> pos, mass;
  for (int k = 1; k <= 8; ++k) {
    pos.push_back(std::pow(2.0, std::ldexp(1.0, k)));
    mass.push_back(std::ldexp(1.0, k));
  }
  for (PointId i = 0; i < s.size(); ++i) {
    CHECK(s.position(i).value() == doctest::Approx(pos[i]).epsilon(1e-12));
    CHECK(s.mass(i).value() == doctest::Approx(mass[i]).epsilon(1e-12));
    for (PointId j = 0; j < s.size(); ++j) {
      if (i == j) continue;
      CHECK(s.distance(i, j).value() ==
            doctest::Approx(std::abs(pos[i] - pos[j])).epsilon(1e-12));
      const double u_direct = [&] {
        double bi = 0.0, bj = 0.0;
        const double r = std::abs(pos[i] - pos[j]);
        for (std::size_t y = 0; y < pos.size(); ++y) {
          if (std::abs(pos[y] - pos[i]) < r) bi += mass[y];
          if (std::abs(pos[y] - pos[j]) < r) bj += mass[y];
        }
        return std::min(bi, bj);
      }();
      CHECK(mutual_min_measure(s, i, j).value() ==
            doctest::Approx(u_direct).epsilon(1e-12));
    }
  }
}

TEST_CASE("integrate: exactness, linearity, overflow report") {
  const auto s = build_finite_space({{0, 1}, {1, 0}}, {2, 3});
  CHECK(integrate(s, std::vector<double>{1, 1}) == doctest::Approx(5.0));
  CHECK(integrate(s, std::vector<double>{0, 0}) == 0.0);
  CHECK_THROWS_AS(integrate(s, std::vector<double>{1, 2, 3}), LengthMismatch);

  const auto d5 = double_exponential_space(5);
  CHECK(integrate(d5, std::vector<double>(5, 1.0)) == doctest::Approx(62.0));

  std::mt19937_64 rng(5);
  std::vector<double> u(5), v(5);
  for (int i = 0; i < 5; ++i) {
    u[i] = rand_unit(rng) - 0.5;
    v[i] = rand_unit(rng) - 0.5;
  }
  std::vector<double> w(5);
  for (int i = 0; i < 5; ++i) w[i] = 2.5 * u[i] - 1.25 * v[i];
  CHECK(integrate(d5, w) ==
        doctest::Approx(2.5 * integrate(d5, u) - 1.25 * integrate(d5, v))
            .epsilon(1e-12));

  CHECK_THROWS_AS(integrate(s, std::vector<double>{1e308, 1e308}),
                  OverflowError);
}

TEST_CASE("holder seminorm") {
  const auto s = build_finite_space({{0, 1}, {1, 0}}, {1, 1});
  CHECK(holder_seminorm(s, std::vector<double>{0, 1}, 1.0) == doctest::Approx(1.0));
  CHECK(holder_seminorm(s, std::vector<double>{3, 3}, 0.5) == 0.0);
  const auto s3 = build_finite_space(
      {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}, {1, 1, 1});
  std::mt19937_64 rng(6);
  std::vector<double> f{rand_unit(rng), rand_unit(rng), rand_unit(rng)};
  std::vector<double> g = f;
  for (double& x : g) x *= -7.5;
  CHECK(holder_seminorm(s3, g, 0.7) ==
        doctest::Approx(7.5 * holder_seminorm(s3, f, 0.7)));
}

TEST_CASE("step functions evaluate and integrate in closed form") {
  const StepFunction1D f{{0.0, 1.0}, {0.0, 1.0, 0.0}};
  CHECK(f(0.5) == 1.0);
  CHECK(f(-0.5) == 0.0);
  CHECK(f(2.0) == 0.0);
  IntervalDomain1D dom;
  dom.intervals = {{-1.0, 2.0}};
  CHECK(f.lp_norm(dom, 1.0) == doctest::Approx(1.0));
  CHECK(f.lp_norm(dom, 2.0) == doctest::Approx(1.0));
}

TEST_CASE("sample_1d carries the measure and converges first order") {
  IntervalDomain1D dom;
  dom.intervals = {{0.0, 1.0}, {2.0, 3.0}};
  const StepFunction1D one{{}, {1.0}};
  QuadratureRule rule;
  auto [space, sample] = sample_1d(dom, one, rule);
  double mass = 0.0;
  for (const auto& m : sample.masses) mass += m.value();
  CHECK(mass == doctest::Approx(2.0).epsilon(1e-12));

  // unaligned jumps: the worst-case error over jump locations is first order
  // in the panel count (individual locations fluctuate with the panel grid)
  IntervalDomain1D unit;
  unit.intervals = {{0.0, 1.0}};
  auto worst_l1_error = [&](int nodes) {
    double worst = 0.0;
    for (int k = 1; k <= 21; ++k) {
      const double cut = k / 22.7;
      const StepFunction1D jump{{cut}, {1.0, 0.0}};
      QuadratureRule r;
      r.nodes_per_piece = nodes;
      r.grading = 1.0;
      r.split_at_function_breakpoints = false;
      auto [sp, sm] = sample_1d(unit, jump, r);
      double acc = 0.0;
      for (std::size_t i = 0; i < sm.size(); ++i)
        acc += std::abs(sm.values[i]) * sm.masses[i].value();
      worst = std::max(worst, std::abs(acc - cut));
    }
    return worst;
  };
  const double e1 = worst_l1_error(32);
  const double e2 = worst_l1_error(128);
  CHECK(e2 <= 0.6 * e1);

  IntervalDomain1D empty;
  CHECK_THROWS_AS(sample_1d(empty, one, rule), EmptyDomain);
}

TEST_CASE("diameter variants") {
  const auto s = build_finite_space({{0, 3}, {3, 0}}, {1, 1});
  CHECK(diameter(s).value() == doctest::Approx(3.0));
}
