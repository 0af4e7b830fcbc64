#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gsn/precision.hpp"
#include "gsn/rational.hpp"

namespace gsn {

// u(t) = u_max * exp(-c * exp(-q t))
struct GompertzParams {
  double q = 1.0;
  double c = 1.0;
  double u_max = 1.0;

  void validate() const {
    if (!(q > 0.0) || !(c > 0.0) || !(u_max > 0.0) ||
        !std::isfinite(q) || !std::isfinite(c) || !std::isfinite(u_max))
      throw std::invalid_argument("GompertzParams: q, c, u_max must be positive and finite");
  }
  static GompertzParams unit() { return {1.0, 1.0, 1.0}; }
};

// n-th derivative written in the state variable:
//   u^(n) = q^n * sum_{k=1}^{n} a_k * u * log^k(u_max / u),  a_k = (-1)^(n-k) {n brace k}
struct LogPoly {
  long n = 0;
  std::vector<BigInt> coeffs;  // a_1 .. a_n

  const BigInt& coeff(long k) const {
    if (k < 1 || k > n) throw std::out_of_range("LogPoly::coeff: k out of range");
    return coeffs[k - 1];
  }

  template <class Real>
  Real eval(Real u, const GompertzParams& p) const {
    using std::log;
    const Real L = log(Real(p.u_max) / u);
    Real acc(0);
    for (long k = n; k >= 1; --k) {
      acc += to_real<Real>(coeffs[k - 1]);
      acc *= L;
    }
    return real_pow_int(Real(p.q), n) * u * acc;
  }
};

LogPoly derivative_coeffs(long n);

// Same derivative as an explicit function of t:
//   u^(n)(t) = q^n * u_max * sum_{j=1}^{n} a_j c^j exp(-c e^(-q t) - j q t)
// Each term keeps a single exp() of the combined exponent, so the value decays
// cleanly to zero for t -> -inf instead of producing 0 * inf.
struct ExpSum {
  long n = 0;
  GompertzParams params;
  std::vector<BigInt> coeffs;  // a_1 .. a_n

  template <class Real>
  Real eval(Real t) const {
    using std::exp;
    const Real q(params.q), c(params.c);
    const Real emqt = exp(-q * t);
    Real acc(0), cj(1);
    for (long j = 1; j <= n; ++j) {
      cj *= c;
      acc += to_real<Real>(coeffs[j - 1]) * cj * exp(-c * emqt - Real(j) * q * t);
    }
    return real_pow_int(Real(params.q), n) * Real(params.u_max) * acc;
  }

  // Sum of term magnitudes: the natural scale against which cancellation in
  // eval() should be judged.
  template <class Real>
  Real scale(Real t) const {
    using std::exp;
    using std::abs;
    const Real q(params.q), c(params.c);
    const Real emqt = exp(-q * t);
    Real acc(0), cj(1);
    for (long j = 1; j <= n; ++j) {
      cj *= c;
      acc += abs(to_real<Real>(coeffs[j - 1])) * cj * exp(-c * emqt - Real(j) * q * t);
    }
    return real_pow_int(Real(params.q), n) * Real(params.u_max) * acc;
  }
};

ExpSum derivative_exp_sum(long n, const GompertzParams& p);

double gompertz_eval(const GompertzParams& p, double t);
double derivative_eval(long n, const GompertzParams& p, double t);
double derivative_scale(long n, const GompertzParams& p, double t);

// (k-1)-th derivative of the Gumbel density exp(-e^-t) e^-t, i.e. the k-th
// derivative of the unit-parameter Gompertz function.
double gumbel_pdf_derivative(long k, double t);

// Exponential generating function of the derivative sequence at time t with
// u = u(t): G(u, z) = u_max * (u / u_max)^(e^(-q z)). Requires 0 < u < u_max.
double egf_eval(double u, double z, const GompertzParams& p);

struct TaylorOracleResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  double rel_error_estimate = 0.0;
  bool converged = false;  // rel_error_estimate <= 1e-6 against the result scale
};

// Finite-difference estimate of u^(n)(t), independent of the closed forms
// above: symmetric (2n+1)-point weights at step h = 10^(-8/(n+1)) / q,
// step-halved and Richardson-extrapolated, evaluated in extended precision.
TaylorOracleResult taylor_coeff_oracle(const GompertzParams& p, double t, long n);

}  // namespace gsn
