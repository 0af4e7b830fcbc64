#pragma once

#include "gsn/rational.hpp"
#include "gsn/report.hpp"

namespace gsn {

// Coefficient of w^n in the expansion of 1 / (1 + e^w):
//   B_{n+1} (1 - 2^(n+1)) / (n+1)!
BigRational euler_series_coeff(long n);

// sum_{k=1}^{m-1} k^n  ==  (1/(n+1)) sum_{j=0}^{n} C(n+1, j) B_j m^(n+1-j)
VerificationReport verify_faulhaber(long m, long n);

// Partial sum of sum 1/k^(2n) against (-1)^(n+1) 2^(2n-1) pi^(2n) B_{2n} / (2n)!,
// accepted when the gap is within the integral tail bound plus tol.
VerificationReport verify_zeta_even(long n, long terms, double tol = 1e-10);

// sum_{k=1}^{n} (-1)^k {n brace k} k! / 2^(k+1)  ==  B_{n+1} (1 - 2^(n+1)) / (n+1)
VerificationReport verify_stirling_bernoulli(long n);

// Same right-hand side reached purely through binomial sums:
//   sum_{k=1}^{n} 2^-(k+1) sum_{j=0}^{k} (-1)^j C(k, j) j^n
VerificationReport verify_binomial_bernoulli(long n);

// integral over t of u u' log^n(u_max / u) dt = n! / 2^(n+1) * u_max^2
BigRational log_moment_exact(long n, const BigRational& u_max);

// B_{n+1} (1 - 2^(n+1)) / (n+1) * u_max^2; the integral over t of u^(n) u' dt
// equals (-q)^n times this value.
BigRational moment_exact(long n, const BigRational& u_max);
// Same value assembled from log-moments through the derivative coefficients.
BigRational moment_exact_stirling(long n, const BigRational& u_max);

// integral over t of (d^(k-1)/dt^(k-1) [e^(-e^-t) e^-t])^2 dt, reduced to
// Gamma moments: sum_{i,j} a_i a_j (i+j-1)! / 2^(i+j) with a_j = (-1)^(k-j) {k brace j}.
BigRational gumbel_integral_exact(long k);

// gumbel_integral_exact(k)  ==  (-1)^k B_{2k} (1 - 2^(2k)) / (2k)
VerificationReport verify_gumbel_bernoulli(long k);

// (-1)^(k-1) / 2^(2k+1) * grosset_veselov_exact(k)  ==  B_{2k}
VerificationReport verify_grosset_veselov(long k);

}  // namespace gsn
