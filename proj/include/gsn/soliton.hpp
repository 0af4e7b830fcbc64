#pragma once

#include <vector>

#include "gsn/precision.hpp"
#include "gsn/rational.hpp"

namespace gsn {

// Polynomial T_m with d^m/dx^m sech^2(x) = sech^2(x) * T_m(tanh x).
struct TanhPoly {
  long order = 0;
  std::vector<BigInt> coeffs;  // c_0 .. c_order in powers of tau = tanh x

  template <class Real>
  Real eval(Real tau) const {
    Real acc(0);
    for (long i = order; i >= 0; --i) {
      acc *= tau;
      acc += to_real<Real>(coeffs[i]);
    }
    return acc;
  }
};

// Recurrence T_0 = 1, T_{m+1}(tau) = (1 - tau^2) T_m'(tau) - 2 tau T_m(tau). Cached.
TanhPoly sech2_derivative(long m);

template <class Real>
Real sech2(Real x) {
  using std::exp;
  using std::abs;
  const Real e = exp(Real(-2) * abs(x));
  const Real d = Real(1) + e;
  return Real(4) * e / (d * d);
}

template <class Real>
Real sech2_derivative_eval(long m, Real x) {
  using std::tanh;
  return sech2(x) * sech2_derivative(m).eval(tanh(x));
}

// integral over [-1, 1] of (1 - tau^2) T_{k-1}(tau)^2 dtau, which equals the
// x-integral of the squared (k-1)-th sech^2 derivative.
BigRational grosset_veselov_exact(long k);

}  // namespace gsn
