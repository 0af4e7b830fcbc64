#include "gsn/gompertz.hpp"

#include <algorithm>

#include "gsn/special_numbers.hpp"

namespace gsn {

LogPoly derivative_coeffs(long n) {
  if (n < 1) throw std::invalid_argument("derivative_coeffs: n must be >= 1");
  const auto row = stirling_row(n);
  LogPoly p;
  p.n = n;
  p.coeffs.resize(n);
  for (long k = 1; k <= n; ++k) {
    p.coeffs[k - 1] = ((n - k) % 2 != 0) ? BigInt(-row[k]) : row[k];
  }
  return p;
}

ExpSum derivative_exp_sum(long n, const GompertzParams& p) {
  if (n < 1) throw std::invalid_argument("derivative_exp_sum: n must be >= 1");
  p.validate();
  ExpSum s;
  s.n = n;
  s.params = p;
  s.coeffs = derivative_coeffs(n).coeffs;
  return s;
}

double gompertz_eval(const GompertzParams& p, double t) {
  p.validate();
  return p.u_max * std::exp(-p.c * std::exp(-p.q * t));
}

double derivative_eval(long n, const GompertzParams& p, double t) {
  if (n < 0) throw std::invalid_argument("derivative_eval: n must be nonnegative");
  if (n == 0) return gompertz_eval(p, t);
  return derivative_exp_sum(n, p).eval(t);
}

double derivative_scale(long n, const GompertzParams& p, double t) {
  if (n < 0) throw std::invalid_argument("derivative_scale: n must be nonnegative");
  if (n == 0) return gompertz_eval(p, t);
  return derivative_exp_sum(n, p).scale(t);
}

double gumbel_pdf_derivative(long k, double t) {
  if (k < 1) throw std::invalid_argument("gumbel_pdf_derivative: k must be >= 1");
  return derivative_eval(k, GompertzParams::unit(), t);
}

double egf_eval(double u, double z, const GompertzParams& p) {
  p.validate();
  if (!(u > 0.0) || !(u < p.u_max))
    throw std::domain_error("egf_eval: u must lie strictly inside (0, u_max)");
  return p.u_max * std::pow(u / p.u_max, std::exp(-p.q * z));
}

namespace {

// Fornberg weights for the m-th derivative at x0 = 0 over the given nodes.
template <class Real>
std::vector<Real> fd_weights(const std::vector<Real>& x, int m) {
  const int nn = static_cast<int>(x.size()) - 1;
  std::vector<std::vector<Real>> C(x.size(), std::vector<Real>(m + 1, Real(0)));
  C[0][0] = 1;
  Real c1(1), c4 = x[0];
  for (int i = 1; i <= nn; ++i) {
    const int mn = std::min(i, m);
    Real c2(1), c5 = c4;
    c4 = x[i];
    for (int j = 0; j < i; ++j) {
      const Real c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) C[i][k] = c1 * (Real(k) * C[i - 1][k - 1] - c5 * C[i - 1][k]) / c2;
        C[i][0] = -c1 * c5 * C[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) C[j][k] = (c4 * C[j][k] - Real(k) * C[j][k - 1]) / c3;
      C[j][0] = c4 * C[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<Real> w(x.size());
  for (size_t j = 0; j < x.size(); ++j) w[j] = C[j][m];
  return w;
}

}  // namespace

TaylorOracleResult taylor_coeff_oracle(const GompertzParams& p, double t, long n) {
  p.validate();
  if (n < 0) throw std::invalid_argument("taylor_coeff_oracle: n must be nonnegative");
  if (n > 12) throw std::invalid_argument("taylor_coeff_oracle: n > 12 exceeds the oracle's precision range");
  if (n == 0) return {gompertz_eval(p, t), 0.0, 0.0, true};

  using Real = ExtReal;
  const Real q(p.q), c(p.c), umax(p.u_max), t0(t);
  auto u = [&](const Real& z) { return umax * exp(-c * exp(-q * (t0 + z))); };

  Real scale(0);
  auto estimate = [&](const Real& h) {
    std::vector<Real> nodes(2 * n + 1);
    for (long i = 0; i <= 2 * n; ++i) nodes[i] = Real(i - n) * h;
    const auto w = fd_weights(nodes, static_cast<int>(n));
    Real acc(0), acc_abs(0);
    for (size_t i = 0; i < nodes.size(); ++i) {
      const Real term = w[i] * u(nodes[i]);
      acc += term;
      acc_abs += abs(term);
    }
    if (acc_abs > scale) scale = acc_abs;
    return acc;
  };

  const Real h = pow(Real(10), Real(-8) / Real(n + 1)) / q;
  const Real d1 = estimate(h);
  const Real d2 = estimate(h / 2);
  const Real d3 = estimate(h / 4);
  // Leading truncation order of the symmetric stencil: n+2 for even n, n+1 for
  // odd; the error expansion then proceeds in even powers, so the two
  // step-halvings support two stages of Richardson extrapolation.
  const long order = (n % 2 == 0) ? n + 2 : n + 1;
  const Real f1 = real_pow_int(Real(2), order) - 1;
  const Real e1 = d2 + (d2 - d1) / f1;
  const Real e2 = d3 + (d3 - d2) / f1;
  const Real f2 = real_pow_int(Real(2), order + 2) - 1;
  const Real corr = (e2 - e1) / f2;
  const Real value = e2 + corr;

  TaylorOracleResult r;
  r.value = static_cast<double>(value);
  const double floor_err = static_cast<double>(scale) * 1e-45;  // extended-precision roundoff carried by the stencil
  r.abs_error_estimate = std::max(16.0 * static_cast<double>(abs(corr)), floor_err);
  // Judged against the stencil's own magnitude, not |value|: at zeros of the
  // derivative a pure relative error is undefined while the estimate is fine.
  const double denom = std::max({std::abs(r.value), static_cast<double>(scale), 1e-300});
  r.rel_error_estimate = r.abs_error_estimate / denom;
  r.converged = r.rel_error_estimate <= 1e-6;
  return r;
}

}  // namespace gsn
