#pragma once

#include "gsn/gompertz.hpp"
#include "gsn/precision.hpp"
#include "gsn/quadrature.hpp"
#include "gsn/report.hpp"

namespace gsn {

// Numeric (quadrature) routes for the integral identities. Each one computes
// the integral with no reference to the exact reduction, then compares against
// the exact rational value; passed means |computed - expected| <= tol.
//
// Non-convergence inside the integrator propagates as QuadratureError.

// integral of the squared (k-1)-th Gumbel-density derivative, evaluated in the
// substituted variable v = e^-t over (0, inf). 1 <= k <= 10; k <= 6 in double.
VerificationReport verify_gumbel_bernoulli_quadrature(
    long k, double tol, PrecisionMode mode = PrecisionMode::extended,
    const QuadratureOptions& opts = {});

// integral over t of (u^(k))^2 against (-1)^k q^(2k-1) B_{2k} (1 - 2^(2k)) / (2k) u_max^2,
// for arbitrary positive parameters (the value is independent of c). 1 <= k <= 8.
VerificationReport verify_general_derivative_integral(
    long k, const GompertzParams& p, double tol, PrecisionMode mode = PrecisionMode::extended,
    const QuadratureOptions& opts = {});

// integral over t of u^(n) u' against (-q)^n B_{n+1} (1 - 2^(n+1)) / (n+1) u_max^2. 0 <= n <= 10.
VerificationReport verify_moment_quadrature(
    long n, const GompertzParams& p, double tol, PrecisionMode mode = PrecisionMode::extended,
    const QuadratureOptions& opts = {});

// integral over x of the squared (k-1)-th derivative of sech^2 against
// grosset_veselov_exact(k), equivalently 2^(2k+1) |B_{2k}|. 1 <= k <= 8.
VerificationReport verify_grosset_veselov_quadrature(
    long k, double tol, PrecisionMode mode = PrecisionMode::extended,
    const QuadratureOptions& opts = {});

}  // namespace gsn
