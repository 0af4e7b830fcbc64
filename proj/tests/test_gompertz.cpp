#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "gsn/gompertz.hpp"
#include "gsn/special_numbers.hpp"

using namespace gsn;

namespace {

const std::vector<double> qs = {0.5, 1.0, 2.0};
const std::vector<double> cs = {0.5, 1.0, 3.0};
const std::vector<double> us = {1.0, 2.0, 5.0};
const std::vector<double> ts = {-1.0, 0.0, 1.5};

double rel_gap(double a, double b, double scale) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), scale});
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(GompertzParams({0.0, 1.0, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(GompertzParams({1.0, -1.0, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(GompertzParams({1.0, 1.0, 0.0}).validate(), std::invalid_argument);
  CHECK_NOTHROW(GompertzParams::unit().validate());
  CHECK_THROWS_AS(derivative_coeffs(0), std::invalid_argument);
  CHECK_THROWS_AS(derivative_eval(-1, GompertzParams::unit(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(gumbel_pdf_derivative(0, 0.0), std::invalid_argument);
}

TEST_CASE("derivative coefficients: values, unit lead, alternating signs") {
  CHECK(derivative_coeffs(1).coeffs == std::vector<BigInt>{BigInt(1)});
  CHECK(derivative_coeffs(2).coeffs == std::vector<BigInt>{BigInt(-1), BigInt(1)});
  CHECK(derivative_coeffs(3).coeffs == std::vector<BigInt>{BigInt(1), BigInt(-3), BigInt(1)});
  CHECK(derivative_coeffs(4).coeffs ==
        std::vector<BigInt>{BigInt(-1), BigInt(7), BigInt(-6), BigInt(1)});

  for (long n = 1; n <= 20; ++n) {
    const auto lp = derivative_coeffs(n);
    REQUIRE(lp.coeffs.size() == static_cast<size_t>(n));
    CHECK(lp.coeff(n) == 1);
    for (long k = 1; k <= n; ++k) {
      const int want = ((n - k) % 2 == 0) ? 1 : -1;
      CHECK(sgn(lp.coeffs[k - 1]) == want);
      CHECK(abs(lp.coeffs[k - 1]) == stirling2(n, k));
    }
    CHECK_THROWS_AS(lp.coeff(0), std::out_of_range);
    CHECK_THROWS_AS(lp.coeff(n + 1), std::out_of_range);
  }
}

TEST_CASE("basic evaluations") {
  const auto p = GompertzParams::unit();
  CHECK(gompertz_eval(p, 0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(derivative_eval(0, p, 0.3) == gompertz_eval(p, 0.3));
  // first derivative of exp(-e^-t) is the Gumbel density e^-t exp(-e^-t)
  for (double t : {-2.0, 0.0, 1.0, 3.0}) {
    const double g = std::exp(-std::exp(-t)) * std::exp(-t);
    CHECK(gumbel_pdf_derivative(1, t) == doctest::Approx(g).epsilon(1e-14));
  }
  // u(0) = u_max e^-c always sits inside (0, u_max)
  for (double q : qs)
    for (double c : cs)
      for (double u : us) {
        const double v = gompertz_eval({q, c, u}, 0.0);
        CHECK(v > 0.0);
        CHECK(v < u);
      }
}

TEST_CASE("ExpSum equals LogPoly composed with the state") {
  for (double q : qs)
    for (double c : cs)
      for (double u : us) {
        const GompertzParams p{q, c, u};
        for (long n = 1; n <= 12; ++n) {
          const auto lp = derivative_coeffs(n);
          const auto es = derivative_exp_sum(n, p);
          for (double t : {-1.5, -0.3, 0.0, 0.7, 2.0}) {
            const double via_state = lp.eval(gompertz_eval(p, t), p);
            const double via_time = es.eval(t);
            CHECK(rel_gap(via_state, via_time, es.scale(t)) < 1e-12);
          }
        }
      }
}

TEST_CASE("ExpSum stays finite and decays at extreme times") {
  for (long n : {1L, 3L, 10L, 30L}) {
    const auto es = derivative_exp_sum(n, {0.5, 3.0, 5.0});
    for (double t : {-1e6, -1e3, 1e3, 1e6}) {
      const double v = es.eval(t);
      CHECK(std::isfinite(v));
      CHECK(std::abs(v) < 1e-100);  // deep in the double-sided decay
    }
    CHECK(std::isfinite(es.eval(-40.0)));
    CHECK(std::isfinite(es.eval(40.0)));
  }
}

TEST_CASE("chain rule: finite difference of u^(n) matches u^(n+1)") {
  const double h = 1e-4;
  for (double q : qs)
    for (double c : cs) {
      const GompertzParams p{q, c, 2.0};
      for (long n = 1; n <= 8; ++n)
        for (double t : ts) {
          const double fd = (derivative_eval(n, p, t + h) - derivative_eval(n, p, t - h)) / (2 * h);
          const double target = derivative_eval(n + 1, p, t);
          CHECK(rel_gap(fd, target, derivative_scale(n + 1, p, t)) < 1e-5);
        }
    }
}

TEST_CASE("finite-difference oracle: example points") {
  // unit parameters at t = 0: u' = e^-1
  const auto r1 = taylor_coeff_oracle(GompertzParams::unit(), 0.0, 1);
  CHECK(std::abs(r1.value - std::exp(-1.0)) < 1e-8);
  CHECK(r1.converged);
  CHECK(r1.rel_error_estimate <= 1e-6);

  const GompertzParams p{2.0, 3.0, 5.0};
  const auto r5 = taylor_coeff_oracle(p, 0.4, 5);
  const double direct = derivative_eval(5, p, 0.4);
  CHECK(std::abs(r5.value - direct) < 1e-5 * std::abs(direct));

  const auto r0 = taylor_coeff_oracle(p, 0.4, 0);
  CHECK(r0.value == gompertz_eval(p, 0.4));
  CHECK(r0.abs_error_estimate == 0.0);

  CHECK_THROWS_AS(taylor_coeff_oracle(p, 0.0, 13), std::invalid_argument);
  CHECK_THROWS_AS(taylor_coeff_oracle(p, 0.0, -1), std::invalid_argument);
}

TEST_CASE("finite-difference oracle: agreement and honest estimates on a grid") {
  for (double q : qs)
    for (double c : cs) {
      const GompertzParams p{q, c, 5.0};
      for (long n = 1; n <= 10; ++n)
        for (double t : ts) {
          const auto o = taylor_coeff_oracle(p, t, n);
          const double direct = derivative_eval(n, p, t);
          const double scale = derivative_scale(n, p, t);
          CHECK(rel_gap(o.value, direct, scale) < 1e-5);
          // the reported estimate bounds the actual deviation, up to the
          // double-precision noise of the closed-form evaluation itself
          CHECK(std::abs(o.value - direct) <= o.abs_error_estimate + 1e-11 * scale);
        }
    }
}

TEST_CASE("generating function of the derivative sequence") {
  const GompertzParams p{1.0, 1.0, 1.0};
  // closed form at a known point, computed independently
  CHECK(egf_eval(0.5, 0.3, p) == doctest::Approx(std::pow(0.5, std::exp(-0.3))).epsilon(1e-15));

  // z = 0 reproduces u
  CHECK(egf_eval(0.25, 0.0, p) == doctest::Approx(0.25).epsilon(1e-15));

  // d/dz egf(u(t), z) at z = 0 equals u'(t); second derivative likewise
  for (double q : qs)
    for (double c : cs) {
      const GompertzParams pp{q, c, 3.0};
      for (double t : ts) {
        const double u = gompertz_eval(pp, t);
        const double h1 = 1e-5;
        const double d1 = (egf_eval(u, h1, pp) - egf_eval(u, -h1, pp)) / (2 * h1);
        CHECK(rel_gap(d1, derivative_eval(1, pp, t), derivative_scale(1, pp, t)) < 1e-6);
        const double h2 = 1e-4;
        const double d2 =
            (egf_eval(u, h2, pp) - 2 * egf_eval(u, 0.0, pp) + egf_eval(u, -h2, pp)) / (h2 * h2);
        CHECK(rel_gap(d2, derivative_eval(2, pp, t), derivative_scale(2, pp, t)) < 1e-5);
      }
    }

  CHECK_THROWS_AS(egf_eval(0.0, 0.1, p), std::domain_error);
  CHECK_THROWS_AS(egf_eval(1.0, 0.1, p), std::domain_error);
  CHECK_THROWS_AS(egf_eval(-0.5, 0.1, p), std::domain_error);
  CHECK_THROWS_AS(egf_eval(7.0, 0.1, p), std::domain_error);
}
