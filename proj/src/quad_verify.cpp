#include "gsn/quad_verify.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gsn/identities.hpp"
#include "gsn/soliton.hpp"
#include "gsn/special_numbers.hpp"

namespace gsn {

namespace {

template <class Real>
VerificationReport quad_report(std::string identity,
                               std::vector<std::pair<std::string, double>> parameter,
                               const BigRational& expected, const Real& computed, double tol) {
  using std::abs;
  VerificationReport r;
  r.identity = std::move(identity);
  r.parameter = std::move(parameter);
  r.expected = expected.str();
  r.computed = format_real(computed);
  const Real exp_r = to_real<Real>(expected);
  r.abs_error = static_cast<double>(abs(computed - exp_r));
  const double scale = exp_r == 0 ? 1.0 : std::abs(static_cast<double>(exp_r));
  r.rel_error = r.abs_error / scale;
  r.passed = r.abs_error <= tol;
  r.route = Route::quadrature;
  return r;
}

// Signed derivative coefficients a_1..a_k as working-precision reals.
template <class Real>
std::vector<Real> real_coeffs(long k) {
  const auto c = derivative_coeffs(k).coeffs;
  std::vector<Real> a(c.size());
  for (size_t i = 0; i < c.size(); ++i) a[i] = to_real<Real>(c[i]);
  return a;
}

template <class Real>
VerificationReport gumbel_quad_impl(long k, double tol, const QuadratureOptions& opts) {
  using std::exp;
  const auto a = real_coeffs<Real>(k);
  // (d^(k-1)/dt^(k-1) g)^2 with v = e^-t becomes e^(-2v) P(v)^2 / v, P(v) = sum_j a_j v^j.
  auto f = [&](const Real& v) {
    if (v == 0) return Real(0);
    Real p(0);
    for (long j = k; j >= 1; --j) {
      p += a[j - 1];
      p *= v;
    }
    return exp(Real(-2) * v) * p * p / v;
  };
  const auto res = integrate_half_line<Real>(f, Real(tol) / 4, opts);
  BigRational expected = gumbel_integral_exact(k);
  return quad_report("gumbel-quad", {{"k", static_cast<double>(k)}}, expected, res.value, tol);
}

template <class Real>
VerificationReport general_derivative_impl(long k, const GompertzParams& p, double tol,
                                           const QuadratureOptions& opts) {
  using std::exp;
  const auto a = real_coeffs<Real>(k);
  const Real q(p.q), c(p.c);
  const Real front = real_pow_int(q, k) * Real(p.u_max);
  std::vector<Real> acj(k);
  Real cj(1);
  for (long j = 1; j <= k; ++j) {
    cj *= c;
    acj[j - 1] = a[j - 1] * cj;
  }
  auto f = [&](const Real& t) {
    const Real emqt = exp(-q * t);
    Real s(0);
    for (long j = 1; j <= k; ++j) s += acj[j - 1] * exp(-c * emqt - Real(j) * q * t);
    s *= front;
    return s * s;
  };
  const auto res = integrate_real_line<Real>(f, Real(tol) / 4, opts);

  BigRational factor = bernoulli(2 * k) * BigRational(BigInt(1) - pow2(2 * k)) / BigRational(2 * k);
  if (k % 2 != 0) factor = -factor;
  const Real expected = to_real<Real>(factor) * real_pow_int(q, 2 * k - 1) * Real(p.u_max) * Real(p.u_max);

  using std::abs;
  VerificationReport r;
  r.identity = "general-derivative";
  r.parameter = {{"k", static_cast<double>(k)}, {"q", p.q}, {"c", p.c}, {"u_max", p.u_max}};
  r.expected = format_real(expected);
  r.computed = format_real(res.value);
  r.abs_error = static_cast<double>(abs(res.value - expected));
  r.rel_error = r.abs_error / (expected == 0 ? 1.0 : std::abs(static_cast<double>(expected)));
  r.passed = r.abs_error <= tol;
  r.route = Route::quadrature;
  return r;
}

template <class Real>
VerificationReport moment_quad_impl(long n, const GompertzParams& p, double tol,
                                    const QuadratureOptions& opts) {
  using std::exp;
  const Real q(p.q), c(p.c), umax(p.u_max);
  // u^(n) u' = q^(n+1) u_max^2 c * sum_j a_j c^j exp(-2 c e^(-q t) - (j+1) q t),
  // with the single term j = 0, a_0 = 1 covering n = 0.
  std::vector<Real> acj;
  long j_base = 0;
  if (n == 0) {
    acj = {Real(1)};
    j_base = 0;
  } else {
    acj = real_coeffs<Real>(n);
    Real cj(1);
    for (long j = 1; j <= n; ++j) {
      cj *= c;
      acj[j - 1] *= cj;
    }
    j_base = 1;
  }
  const Real front = real_pow_int(q, n + 1) * umax * umax * c;
  auto f = [&](const Real& t) {
    const Real emqt = exp(-q * t);
    Real s(0);
    for (size_t i = 0; i < acj.size(); ++i) {
      const Real j(static_cast<long>(i) + j_base);
      s += acj[i] * exp(Real(-2) * c * emqt - (j + 1) * q * t);
    }
    return front * s;
  };
  const auto res = integrate_real_line<Real>(f, Real(tol) / 4, opts);

  BigRational factor = bernoulli(n + 1) * BigRational(BigInt(1) - pow2(n + 1)) / BigRational(n + 1);
  const Real expected = to_real<Real>(factor) * real_pow_int(-q, n) * umax * umax;

  using std::abs;
  VerificationReport r;
  r.identity = "moment";
  r.parameter = {{"n", static_cast<double>(n)}, {"q", p.q}, {"c", p.c}, {"u_max", p.u_max}};
  r.expected = format_real(expected);
  r.computed = format_real(res.value);
  r.abs_error = static_cast<double>(abs(res.value - expected));
  r.rel_error = r.abs_error / (expected == 0 ? 1.0 : std::abs(static_cast<double>(expected)));
  r.passed = r.abs_error <= tol;
  r.route = Route::quadrature;
  return r;
}

template <class Real>
VerificationReport gv_quad_impl(long k, double tol, const QuadratureOptions& opts) {
  const auto poly = sech2_derivative(k - 1);
  std::vector<Real> ct(poly.coeffs.size());
  for (size_t i = 0; i < ct.size(); ++i) ct[i] = to_real<Real>(poly.coeffs[i]);
  auto f = [&](const Real& x) {
    using std::tanh;
    const Real tau = tanh(x);
    Real acc(0);
    for (size_t i = ct.size(); i-- > 0;) {
      acc *= tau;
      acc += ct[i];
    }
    const Real v = sech2(x) * acc;
    return v * v;
  };
  const auto res = integrate_real_line<Real>(f, Real(tol) / 4, opts);
  return quad_report("soliton-quad", {{"k", static_cast<double>(k)}},
                     grosset_veselov_exact(k), res.value, tol);
}

void check_tol(double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
}

}  // namespace

VerificationReport verify_gumbel_bernoulli_quadrature(long k, double tol, PrecisionMode mode,
                                                      const QuadratureOptions& opts) {
  check_tol(tol);
  if (k < 1 || k > 10)
    throw std::invalid_argument("verify_gumbel_bernoulli_quadrature: k must be in [1, 10]");
  if (mode == PrecisionMode::double_precision && k > 6)
    throw std::invalid_argument("verify_gumbel_bernoulli_quadrature: k > 6 requires extended precision");
  return mode == PrecisionMode::double_precision ? gumbel_quad_impl<double>(k, tol, opts)
                                                 : gumbel_quad_impl<ExtReal>(k, tol, opts);
}

VerificationReport verify_general_derivative_integral(long k, const GompertzParams& p, double tol,
                                                      PrecisionMode mode, const QuadratureOptions& opts) {
  check_tol(tol);
  p.validate();
  if (k < 1 || k > 8)
    throw std::invalid_argument("verify_general_derivative_integral: k must be in [1, 8]");
  return mode == PrecisionMode::double_precision ? general_derivative_impl<double>(k, p, tol, opts)
                                                 : general_derivative_impl<ExtReal>(k, p, tol, opts);
}

VerificationReport verify_moment_quadrature(long n, const GompertzParams& p, double tol,
                                            PrecisionMode mode, const QuadratureOptions& opts) {
  check_tol(tol);
  p.validate();
  if (n < 0 || n > 10)
    throw std::invalid_argument("verify_moment_quadrature: n must be in [0, 10]");
  return mode == PrecisionMode::double_precision ? moment_quad_impl<double>(n, p, tol, opts)
                                                 : moment_quad_impl<ExtReal>(n, p, tol, opts);
}

VerificationReport verify_grosset_veselov_quadrature(long k, double tol, PrecisionMode mode,
                                                     const QuadratureOptions& opts) {
  check_tol(tol);
  if (k < 1 || k > 8)
    throw std::invalid_argument("verify_grosset_veselov_quadrature: k must be in [1, 8]");
  return mode == PrecisionMode::double_precision ? gv_quad_impl<double>(k, tol, opts)
                                                 : gv_quad_impl<ExtReal>(k, tol, opts);
}

}  // namespace gsn
