#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsn {

struct QuadratureOptions {
  long max_evaluations = 1L << 20;  // hard per-integral budget
  bool parallel = true;             // evaluate refinement nodes with OpenMP
  int min_levels = 3;               // refine at least this far before trusting the estimate
};

template <class Real>
struct QuadratureResult {
  Real value{};
  Real error_estimate{};
  long evaluations = 0;
};

// Raised instead of ever returning a value that failed to converge.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

namespace quad_detail {

// Trapezoid sums over a doubly-exponential substitution converge geometrically
// in the step, so each halving of h is compared with the previous level and
// |I_m - I_{m-1}| serves as a (conservative) error estimate for I_m.
//
// Level 0 walks outward from w = 0 in steps of 1/2 until the transformed
// integrand has been negligible relative to its peak for a few consecutive
// nodes (and at least |w| >= 3.5, so late peaks are not missed), or until the
// map-specific cap on |w| is reached. Refinement levels insert midpoints only;
// node positions are exact binary fractions, and the nodes of one level are
// evaluated into an index-ordered buffer before a serial in-order summation,
// so results are bitwise identical with parallel evaluation on or off.
template <class Real, class G>
QuadratureResult<Real> trapezoid_refine(G&& g, Real tol, double w_cap, const QuadratureOptions& opts) {
  using std::abs;
  using std::isnan;
  const double h0 = 0.5;
  const Real cutoff = std::numeric_limits<Real>::epsilon() * Real(1e-3);
  long evals = 0;
  auto sample = [&](double w) {
    if (evals >= opts.max_evaluations)
      throw QuadratureError("quadrature: evaluation budget exhausted while scanning tails");
    ++evals;
    const Real fv = g(Real(w));
    if (isnan(fv)) throw QuadratureError("quadrature: integrand returned NaN at w = " + std::to_string(w));
    return fv;
  };

  Real coarse_sum = sample(0.0);
  Real coarse_abs = abs(coarse_sum);
  Real max_abs = coarse_abs;
  long steps[2] = {0, 0};       // coarse nodes taken to the right / left of 0
  Real edge_abs[2] = {Real(0), Real(0)};  // |g| at the outermost node kept per side
  for (int side = 0; side < 2; ++side) {
    const double dir = side == 0 ? 1.0 : -1.0;
    int quiet = 0;
    for (long i = 1;; ++i) {
      const double w = dir * h0 * static_cast<double>(i);
      if (std::fabs(w) > w_cap) {
        steps[side] = i - 1;
        break;
      }
      const Real fv = sample(w);
      coarse_sum += fv;
      coarse_abs += abs(fv);
      edge_abs[side] = abs(fv);
      if (abs(fv) > max_abs) max_abs = abs(fv);
      if (abs(fv) <= cutoff * max_abs) {
        if (++quiet >= 3 && h0 * static_cast<double>(i) >= 3.5) {
          steps[side] = i;
          break;
        }
      } else {
        quiet = 0;
      }
    }
  }
  // Mass beyond the last node is invisible to the step-doubling estimate. When
  // the walk stopped at the quiet cutoff this is negligible; when it stopped at
  // the map cap (endpoint singularities at the edge of the working precision)
  // it can dominate, so charge one outer step of it to the error estimate.
  const Real truncation_term = (edge_abs[0] + edge_abs[1]) * Real(h0);

  const double w_lo = -h0 * static_cast<double>(steps[1]);
  const long span = steps[0] + steps[1];
  if (span == 0) return {Real(0), Real(0), evals};

  double h = h0;
  Real integral = coarse_sum * Real(h);
  Real abs_integral = coarse_abs * Real(h);
  std::vector<Real> values;
  for (int level = 1;; ++level) {
    h *= 0.5;
    const long n_new = span << (level - 1);  // midpoints of the previous grid
    if (evals + n_new > opts.max_evaluations)
      throw QuadratureError("quadrature: evaluation budget exhausted at refinement level " +
                            std::to_string(level) + " (estimate " +
                            std::to_string(static_cast<double>(abs(integral))) + ")");
    values.assign(n_new, Real(0));
    if (opts.parallel) {
#pragma omp parallel for schedule(static)
      for (long i = 0; i < n_new; ++i)
        values[i] = g(Real(w_lo + static_cast<double>(2 * i + 1) * h));
    } else {
      for (long i = 0; i < n_new; ++i)
        values[i] = g(Real(w_lo + static_cast<double>(2 * i + 1) * h));
    }
    evals += n_new;
    Real s(0), sa(0);
    for (long i = 0; i < n_new; ++i) {
      if (isnan(values[i]))
        throw QuadratureError("quadrature: integrand returned NaN at refinement level " + std::to_string(level));
      s += values[i];
      sa += abs(values[i]);
    }
    const Real prev = integral;
    integral = integral * Real(0.5) + s * Real(h);
    abs_integral = abs_integral * Real(0.5) + sa * Real(h);
    const Real diff = abs(integral - prev);
    if (level >= opts.min_levels && diff <= tol) {
      const Real floor_est = abs_integral * std::numeric_limits<Real>::epsilon() * 8;
      return {integral, (diff > floor_est ? diff : floor_est) + truncation_term, evals};
    }
  }
}

template <class Real>
Real half_pi() {
  using std::atan;
  return Real(2) * atan(Real(1));
}

template <class Real>
double log_eps() {
  using std::log;
  return static_cast<double>(-log(std::numeric_limits<Real>::epsilon()));
}

template <class Real>
double log_max() {
  using std::log;
  return static_cast<double>(log(std::numeric_limits<Real>::max()));
}

}  // namespace quad_detail

// integral of f over (-inf, inf) via x = sinh(w).
template <class Real, class F>
QuadratureResult<Real> integrate_real_line(F&& f, Real tol, const QuadratureOptions& opts = {}) {
  auto g = [&](Real w) {
    using std::sinh;
    using std::cosh;
    return f(sinh(w)) * cosh(w);
  };
  return quad_detail::trapezoid_refine<Real>(g, tol, 9.0, opts);
}

// integral of f over (0, inf) via x = exp((pi/2) sinh(w)).
template <class Real, class F>
QuadratureResult<Real> integrate_half_line(F&& f, Real tol, const QuadratureOptions& opts = {}) {
  const Real lambda = quad_detail::half_pi<Real>();
  auto g = [&, lambda](Real w) {
    using std::sinh;
    using std::cosh;
    using std::exp;
    const Real x = exp(lambda * sinh(w));
    return f(x) * x * lambda * cosh(w);
  };
  const double cap = std::asinh(0.8 * quad_detail::log_max<Real>() / static_cast<double>(lambda));
  return quad_detail::trapezoid_refine<Real>(g, tol, cap, opts);
}

// integral of f over (a, b) via x = mid + rad * tanh((pi/2) sinh(w)), with the
// argument of tanh capped before it saturates to +-1 in the working precision.
template <class Real, class F>
QuadratureResult<Real> integrate_finite(F&& f, Real a, Real b, Real tol, const QuadratureOptions& opts = {}) {
  const Real lambda = quad_detail::half_pi<Real>();
  const Real mid = (a + b) / 2, rad = (b - a) / 2;
  auto g = [&, lambda, mid, rad](Real w) {
    using std::sinh;
    using std::cosh;
    using std::tanh;
    const Real u = lambda * sinh(w);
    const Real ch = cosh(u);
    return f(mid + rad * tanh(u)) * rad * lambda * cosh(w) / (ch * ch);
  };
  const double cap = std::asinh(0.49 * quad_detail::log_eps<Real>() / static_cast<double>(lambda));
  return quad_detail::trapezoid_refine<Real>(g, tol, cap, opts);
}

}  // namespace gsn
