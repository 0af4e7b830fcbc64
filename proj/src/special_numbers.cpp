#include "gsn/special_numbers.hpp"

#include <mutex>
#include <stdexcept>

namespace gsn {

namespace {

std::mutex stirling_mutex;
std::vector<std::vector<BigInt>> stirling_rows;  // rows of {n brace k}, row n has n+1 entries

std::mutex bernoulli_mutex;
std::vector<BigRational> bernoulli_cache;

void extend_stirling_rows(long n) {
  if (stirling_rows.empty()) stirling_rows.push_back({BigInt(1)});
  while (static_cast<long>(stirling_rows.size()) <= n) {
    const auto& prev = stirling_rows.back();
    const long m = static_cast<long>(stirling_rows.size());
    std::vector<BigInt> row(m + 1);
    row[0] = 0;
    for (long k = 1; k < m; ++k) row[k] = k * prev[k] + prev[k - 1];
    row[m] = 1;
    stirling_rows.push_back(std::move(row));
  }
}

}  // namespace

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt stirling2(long n, long k) {
  if (n < 0) throw std::invalid_argument("stirling2: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  std::scoped_lock lock(stirling_mutex);
  extend_stirling_rows(n);
  return stirling_rows[n][k];
}

std::vector<BigInt> stirling_row(long n) {
  if (n < 0) throw std::invalid_argument("stirling_row: n must be nonnegative");
  std::scoped_lock lock(stirling_mutex);
  extend_stirling_rows(n);
  return stirling_rows[n];
}

BigInt stirling2_explicit(long n, long k) {
  if (n < 0) throw std::invalid_argument("stirling2_explicit: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigInt acc = 0;
  for (long j = 0; j <= k; ++j) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
    BigInt term = binomial(k, j) * p;
    if ((k - j) % 2 != 0) acc -= term; else acc += term;
  }
  BigInt q, f = factorial(k);
  mpz_divexact(q.get_mpz_t(), acc.get_mpz_t(), f.get_mpz_t());
  return q;
}

BigRational bernoulli(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli: n must be nonnegative");
  std::scoped_lock lock(bernoulli_mutex);
  if (bernoulli_cache.empty()) bernoulli_cache.push_back(BigRational(1));
  while (static_cast<long>(bernoulli_cache.size()) <= n) {
    const long m = static_cast<long>(bernoulli_cache.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    BigRational s(0);
    for (long j = 0; j < m; ++j) s += BigRational(binomial(m + 1, j)) * bernoulli_cache[j];
    bernoulli_cache.push_back(-s / BigRational(m + 1));
  }
  return bernoulli_cache[n];
}

BigRational bell_polynomial_eval(long n, const BigRational& x) {
  if (n < 0) throw std::invalid_argument("bell_polynomial_eval: n must be nonnegative");
  if (n == 0) return BigRational(1);
  const auto row = stirling_row(n);
  BigRational acc(0);
  for (long k = n; k >= 1; --k) {
    acc += BigRational(row[k]);
    acc *= x;
  }
  return acc;
}

}  // namespace gsn
