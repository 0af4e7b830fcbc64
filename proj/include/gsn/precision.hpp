#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <type_traits>

#include "gsn/rational.hpp"

namespace gsn {

// ~50 significant decimal digits; used wherever double roundoff would eat the
// tolerance budget (high-order quadrature, finite-difference oracles).
using ExtReal = boost::multiprecision::cpp_bin_float_50;

enum class PrecisionMode { double_precision, extended };

inline const char* precision_mode_name(PrecisionMode m) {
  return m == PrecisionMode::double_precision ? "double" : "extended";
}

template <class Real>
Real to_real(const BigInt& v) {
  if constexpr (std::is_same_v<Real, double>) {
    return v.get_d();
  } else {
    return Real(v.get_str());
  }
}

template <class Real>
Real to_real(const BigRational& v) {
  if constexpr (std::is_same_v<Real, double>) {
    return v.to_double();
  } else {
    return Real(v.numerator().get_str()) / Real(v.denominator().get_str());
  }
}

// Exact integer powers without going through pow()'s log/exp path.
template <class Real>
Real real_pow_int(Real base, long e) {
  if (e < 0) return Real(1) / real_pow_int(base, -e);
  Real acc(1);
  for (long m = e; m > 0; m >>= 1) {
    if (m & 1) acc *= base;
    if (m > 1) base *= base;
  }
  return acc;
}

template <class Real>
std::string format_real(const Real& v, int digits = 25) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace gsn
