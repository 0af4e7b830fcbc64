#include "gsn/identities.hpp"

#include <cmath>
#include <stdexcept>

#include "gsn/gompertz.hpp"
#include "gsn/precision.hpp"
#include "gsn/soliton.hpp"
#include "gsn/special_numbers.hpp"

namespace gsn {

namespace {

// B_{n+1} (1 - 2^(n+1)) / (n+1); shows up on the Bernoulli side of several identities.
BigRational euler_factor(long n) {
  return bernoulli(n + 1) * BigRational(BigInt(1) - pow2(n + 1)) / BigRational(n + 1);
}

VerificationReport exact_report(std::string identity,
                                std::vector<std::pair<std::string, double>> parameter,
                                const BigRational& expected, const BigRational& computed) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.parameter = std::move(parameter);
  r.expected = expected.str();
  r.computed = computed.str();
  r.passed = (expected == computed);
  if (!r.passed) {
    r.abs_error = abs(computed - expected).to_double();
    const double scale = std::abs(expected.to_double());
    r.rel_error = scale > 0 ? r.abs_error / scale : r.abs_error;
  }
  r.route = Route::exact;
  return r;
}

}  // namespace

BigRational euler_series_coeff(long n) {
  if (n < 0) throw std::invalid_argument("euler_series_coeff: n must be nonnegative");
  return bernoulli(n + 1) * BigRational(BigInt(1) - pow2(n + 1)) / BigRational(factorial(n + 1));
}

VerificationReport verify_faulhaber(long m, long n) {
  if (m < 2) throw std::invalid_argument("verify_faulhaber: m must be >= 2");
  if (n < 1) throw std::invalid_argument("verify_faulhaber: n must be >= 1");
  BigInt direct = 0;
  for (long k = 1; k < m; ++k) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
    direct += p;
  }
  BigRational formula(0);
  const BigInt mm(m);
  for (long j = 0; j <= n; ++j) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), mm.get_mpz_t(), static_cast<unsigned long>(n + 1 - j));
    formula += BigRational(binomial(n + 1, j) * p) * bernoulli(j);
  }
  formula /= BigRational(n + 1);
  return exact_report("faulhaber",
                      {{"m", static_cast<double>(m)}, {"n", static_cast<double>(n)}},
                      BigRational(direct), formula);
}

VerificationReport verify_zeta_even(long n, long terms, double tol) {
  if (n < 1) throw std::invalid_argument("verify_zeta_even: n must be >= 1");
  if (terms < 10) throw std::invalid_argument("verify_zeta_even: terms must be >= 10");
  if (!(tol > 0)) throw std::invalid_argument("verify_zeta_even: tol must be positive");
  const double e = -2.0 * static_cast<double>(n);
  double partial = 0.0;
  for (long k = terms; k >= 1; --k) partial += std::pow(static_cast<double>(k), e);

  const double pi = std::acos(-1.0);
  const double ratio = (bernoulli(2 * n) / BigRational(factorial(2 * n))).to_double();
  double closed = std::ldexp(1.0, static_cast<int>(2 * n - 1)) * std::pow(pi, 2.0 * n) * ratio;
  if (n % 2 == 0) closed = -closed;

  // Tail of the series is below the integral bound terms^(1-2n) / (2n-1).
  const double tail = std::pow(static_cast<double>(terms), 1.0 - 2.0 * n) / (2.0 * n - 1.0);

  VerificationReport r;
  r.identity = "zeta";
  r.parameter = {{"n", static_cast<double>(n)}, {"terms", static_cast<double>(terms)}};
  r.expected = format_real(closed);
  r.computed = format_real(partial);
  r.abs_error = std::abs(closed - partial);
  r.rel_error = r.abs_error / std::abs(closed);
  r.passed = r.abs_error <= tail + tol;
  r.route = Route::quadrature;
  return r;
}

VerificationReport verify_stirling_bernoulli(long n) {
  if (n < 1) throw std::invalid_argument("verify_stirling_bernoulli: n must be >= 1");
  const auto row = stirling_row(n);
  // Common denominator 2^(n+1).
  BigInt num = 0;
  for (long k = 1; k <= n; ++k) {
    BigInt term = row[k] * factorial(k) * pow2(n - k);
    if (k % 2 != 0) num -= term; else num += term;
  }
  return exact_report("stirling-bernoulli", {{"n", static_cast<double>(n)}},
                      euler_factor(n), BigRational(num, pow2(n + 1)));
}

VerificationReport verify_binomial_bernoulli(long n) {
  if (n < 1) throw std::invalid_argument("verify_binomial_bernoulli: n must be >= 1");
  BigInt num = 0;  // over common denominator 2^(n+1)
  for (long k = 1; k <= n; ++k) {
    BigInt inner = 0;
    for (long j = 1; j <= k; ++j) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
      BigInt term = binomial(k, j) * p;
      if (j % 2 != 0) inner -= term; else inner += term;
    }
    num += inner * pow2(n - k);
  }
  return exact_report("binomial-bernoulli", {{"n", static_cast<double>(n)}},
                      euler_factor(n), BigRational(num, pow2(n + 1)));
}

BigRational log_moment_exact(long n, const BigRational& u_max) {
  if (n < 0) throw std::invalid_argument("log_moment_exact: n must be nonnegative");
  if (u_max.sign() <= 0) throw std::invalid_argument("log_moment_exact: u_max must be positive");
  return BigRational(factorial(n), pow2(n + 1)) * u_max * u_max;
}

BigRational moment_exact(long n, const BigRational& u_max) {
  if (n < 0) throw std::invalid_argument("moment_exact: n must be nonnegative");
  if (u_max.sign() <= 0) throw std::invalid_argument("moment_exact: u_max must be positive");
  return euler_factor(n) * u_max * u_max;
}

BigRational moment_exact_stirling(long n, const BigRational& u_max) {
  if (n < 0) throw std::invalid_argument("moment_exact_stirling: n must be nonnegative");
  if (u_max.sign() <= 0) throw std::invalid_argument("moment_exact_stirling: u_max must be positive");
  if (n == 0) return log_moment_exact(0, u_max);
  const auto row = stirling_row(n);
  BigRational acc(0);
  for (long k = 1; k <= n; ++k) {
    const BigRational term = BigRational(row[k]) * log_moment_exact(k, u_max);
    if (k % 2 != 0) acc -= term; else acc += term;
  }
  return acc;
}

BigRational gumbel_integral_exact(long k) {
  if (k < 1) throw std::invalid_argument("gumbel_integral_exact: k must be >= 1");
  const auto row = stirling_row(k);
  std::vector<BigInt> a(k + 1);
  for (long j = 1; j <= k; ++j) a[j] = ((k - j) % 2 != 0) ? BigInt(-row[j]) : row[j];
  // sum_{i,j} a_i a_j (i+j-1)! / 2^(i+j) over the common denominator 2^(2k)
  BigInt num = 0;
  for (long i = 1; i <= k; ++i)
    for (long j = 1; j <= k; ++j)
      num += a[i] * a[j] * factorial(i + j - 1) * pow2(2 * k - i - j);
  return BigRational(num, pow2(2 * k));
}

VerificationReport verify_gumbel_bernoulli(long k) {
  if (k < 1) throw std::invalid_argument("verify_gumbel_bernoulli: k must be >= 1");
  BigRational rhs = euler_factor(2 * k - 1);
  if (k % 2 != 0) rhs = -rhs;
  return exact_report("gumbel", {{"k", static_cast<double>(k)}},
                      rhs, gumbel_integral_exact(k));
}

VerificationReport verify_grosset_veselov(long k) {
  if (k < 1) throw std::invalid_argument("verify_grosset_veselov: k must be >= 1");
  BigRational lhs = grosset_veselov_exact(k) / BigRational(pow2(2 * k + 1));
  if (k % 2 == 0) lhs = -lhs;
  return exact_report("soliton", {{"k", static_cast<double>(k)}},
                      bernoulli(2 * k), lhs);
}

}  // namespace gsn
