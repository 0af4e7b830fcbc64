#pragma once

#include <vector>

#include "gsn/rational.hpp"

namespace gsn {

BigInt binomial(long n, long k);
BigInt factorial(long n);

// Stirling numbers of the second kind {n brace k}: number of partitions of an
// n-set into k nonempty blocks. Triangle recurrence, cached, thread-safe.
BigInt stirling2(long n, long k);

// Same quantity via the alternating binomial sum (1/k!) sum_j (-1)^(k-j) C(k,j) j^n.
// Independent of the recurrence; kept as a cross-check route.
BigInt stirling2_explicit(long n, long k);

// Row {n brace 0} .. {n brace n}.
std::vector<BigInt> stirling_row(long n);

// Bernoulli numbers, B_1 = -1/2 convention. Cached, thread-safe.
BigRational bernoulli(long n);

// Bell polynomial B_n(x) = sum_k {n brace k} x^k, with B_0(x) = 1.
BigRational bell_polynomial_eval(long n, const BigRational& x);

}  // namespace gsn
