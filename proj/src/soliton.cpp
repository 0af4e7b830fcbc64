#include "gsn/soliton.hpp"

#include <mutex>
#include <stdexcept>

namespace gsn {

namespace {

std::mutex tanh_mutex;
std::vector<std::vector<BigInt>> tanh_cache;  // coefficients of T_m

void extend_tanh_cache(long m) {
  if (tanh_cache.empty()) tanh_cache.push_back({BigInt(1)});
  while (static_cast<long>(tanh_cache.size()) <= m) {
    const auto& c = tanh_cache.back();
    const long deg = static_cast<long>(c.size()) - 1;
    // (1 - tau^2) T' - 2 tau T collapses to next_i = (i+1) * (c_{i+1} - c_{i-1})
    std::vector<BigInt> next(deg + 2);
    for (long i = 0; i <= deg + 1; ++i) {
      BigInt hi = (i + 1 <= deg) ? c[i + 1] : BigInt(0);
      BigInt lo = (i >= 1) ? c[i - 1] : BigInt(0);
      next[i] = (i + 1) * (hi - lo);
    }
    tanh_cache.push_back(std::move(next));
  }
}

}  // namespace

TanhPoly sech2_derivative(long m) {
  if (m < 0) throw std::invalid_argument("sech2_derivative: m must be nonnegative");
  std::scoped_lock lock(tanh_mutex);
  extend_tanh_cache(m);
  TanhPoly p;
  p.order = m;
  p.coeffs = tanh_cache[m];
  return p;
}

BigRational grosset_veselov_exact(long k) {
  if (k < 1) throw std::invalid_argument("grosset_veselov_exact: k must be >= 1");
  const auto t = sech2_derivative(k - 1).coeffs;
  const long deg = static_cast<long>(t.size()) - 1;
  // (1 - tau^2) * T^2, then integrate monomials: odd powers vanish,
  // tau^(2j) contributes 2/(2j+1).
  std::vector<BigInt> sq(2 * deg + 1, BigInt(0));
  for (long i = 0; i <= deg; ++i)
    for (long j = 0; j <= deg; ++j) sq[i + j] += t[i] * t[j];
  BigRational acc(0);
  for (long i = 0; i <= 2 * deg; i += 2) {
    const BigInt num = 2 * sq[i];
    acc += BigRational(num, BigInt(i + 1));
    acc -= BigRational(num, BigInt(i + 3));
  }
  return acc;
}

}  // namespace gsn
