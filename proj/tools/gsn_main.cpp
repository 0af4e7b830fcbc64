#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsn/gompertz.hpp"
#include "gsn/identities.hpp"
#include "gsn/precision.hpp"
#include "gsn/quad_verify.hpp"
#include "gsn/report.hpp"
#include "gsn/soliton.hpp"
#include "gsn/special_numbers.hpp"
#include "gsn/sweep.hpp"

using json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  std::string format = "json";
  double tol = 1e-10;
  std::string precision = "extended";

  gsn::PrecisionMode mode() const {
    return precision == "double" ? gsn::PrecisionMode::double_precision
                                 : gsn::PrecisionMode::extended;
  }
};

// Honors SOURCE_DATE_EPOCH so repeated runs can be made byte-identical.
std::string iso_timestamp() {
  std::time_t t;
  if (const char* e = std::getenv("SOURCE_DATE_EPOCH"))
    t = static_cast<std::time_t>(std::strtoll(e, nullptr, 10));
  else
    t = std::time(nullptr);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool looks_integral(double v) { return std::floor(v) == v && std::fabs(v) < 9e15; }

json number_json(double v) {
  if (looks_integral(v)) return json(static_cast<long long>(v));
  return json(v);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json report_to_json(const gsn::VerificationReport& r) {
  json j;
  j["identity"] = r.identity;
  if (r.parameter.size() == 1 && looks_integral(r.parameter[0].second)) {
    j["parameter"] = number_json(r.parameter[0].second);
  } else {
    json o = json::object();
    for (const auto& [k, v] : r.parameter) o[k] = number_json(v);
    j["parameter"] = o;
  }
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["abs_error"] = r.abs_error;
  j["rel_error"] = r.rel_error;
  j["passed"] = r.passed;
  j["route"] = gsn::route_name(r.route);
  return j;
}

std::string report_param_csv(const gsn::VerificationReport& r) {
  std::string s;
  for (const auto& [k, v] : r.parameter) {
    if (!s.empty()) s += ';';
    s += k + "=" + (looks_integral(v) ? std::to_string(static_cast<long long>(v)) : format_double(v));
  }
  return s;
}

void emit_manifest(const std::string& command, const json& parameters, const GlobalOpts& g,
                   const json& results) {
  json m;
  m["command"] = command;
  m["parameters"] = parameters;
  m["timestamp"] = iso_timestamp();
  m["precision_mode"] = g.precision;
  m["results"] = results;
  std::cout << m.dump(2) << "\n";
}

void emit_reports(const std::string& command, const json& parameters, const GlobalOpts& g,
                  const std::vector<gsn::VerificationReport>& reports) {
  if (g.format == "csv") {
    std::cout << "identity,parameter,expected,computed,abs_error,rel_error,passed,route\n";
    for (const auto& r : reports) {
      std::cout << r.identity << ',' << report_param_csv(r) << ',' << r.expected << ','
                << r.computed << ',' << format_double(r.abs_error) << ','
                << format_double(r.rel_error) << ',' << (r.passed ? "true" : "false") << ','
                << gsn::route_name(r.route) << "\n";
    }
  } else {
    json results = json::array();
    for (const auto& r : reports) results.push_back(report_to_json(r));
    emit_manifest(command, parameters, g, results);
  }
}

int exit_code_for(const std::vector<gsn::VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return 1;
  }
  return 0;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

// ---- table ----------------------------------------------------------------

int run_table(const std::string& kind, long max_index, long stirling_n, const GlobalOpts& g) {
  std::vector<std::pair<long, gsn::BigRational>> rows;
  json parameters;
  parameters["kind"] = kind;
  if (kind == "bernoulli") {
    if (max_index < 0 || max_index > 1000) return usage_error("table bernoulli: --max must be in [0, 1000]");
    parameters["max"] = max_index;
    for (long n = 0; n <= max_index; ++n) rows.emplace_back(n, gsn::bernoulli(n));
  } else if (kind == "stirling") {
    if (stirling_n < 0 || stirling_n > 200) return usage_error("table stirling: --n must be in [0, 200]");
    parameters["n"] = stirling_n;
    const auto row = gsn::stirling_row(stirling_n);
    for (long k = 0; k <= stirling_n; ++k) rows.emplace_back(k, gsn::BigRational(row[k]));
  } else {  // gv
    if (max_index < 1 || max_index > 200) return usage_error("table gv: --max must be in [1, 200]");
    parameters["max"] = max_index;
    for (long k = 1; k <= max_index; ++k) rows.emplace_back(k, gsn::grosset_veselov_exact(k));
  }

  if (g.format == "csv") {
    std::cout << "index,numerator,denominator\n";
    for (const auto& [i, v] : rows)
      std::cout << i << ',' << v.numerator().get_str() << ',' << v.denominator().get_str() << "\n";
  } else {
    json results = json::array();
    for (const auto& [i, v] : rows) results.push_back({{"index", i}, {"value", v.str()}});
    emit_manifest("table", parameters, g, results);
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOpts {
  long k_max = -1;
  long n_max = -1;
  long m_max = -1;
  long terms = 1000000;
  double q = 1.0, c = 1.0, u_max = 1.0;
};

int run_verify(const std::string& identity, VerifyOpts v, const GlobalOpts& g) {
  using namespace gsn;
  std::vector<VerificationReport> reports;
  std::vector<std::string> diagnostics;
  json parameters;
  parameters["identity"] = identity;

  auto quad_guard = [&](const std::string& id, std::vector<std::pair<std::string, double>> ps,
                        auto&& fn) {
    // Sweep items must not throw across the parallel region; a non-convergent
    // integral becomes a failed report instead.
    VerificationReport r;
    try {
      return fn();
    } catch (const QuadratureError&) {
      r.identity = id;
      r.parameter = std::move(ps);
      r.expected = "";
      r.computed = "nan";
      r.abs_error = -1.0;
      r.rel_error = -1.0;
      r.passed = false;
      r.route = Route::quadrature;
      return r;
    }
  };

  if (identity == "faulhaber") {
    const long m_max = v.m_max < 0 ? 10 : v.m_max;
    const long n_max = v.n_max < 0 ? 10 : v.n_max;
    if (m_max < 2 || m_max > 1000) return usage_error("verify faulhaber: --m-max must be in [2, 1000]");
    if (n_max < 1 || n_max > 200) return usage_error("verify faulhaber: --n-max must be in [1, 200]");
    parameters["m_max"] = m_max;
    parameters["n_max"] = n_max;
    reports = run_indexed((m_max - 1) * n_max, [&](long i) {
      return verify_faulhaber(2 + i / n_max, 1 + i % n_max);
    });
  } else if (identity == "zeta") {
    const long n_max = v.n_max < 0 ? 5 : v.n_max;
    if (n_max < 1 || n_max > 100) return usage_error("verify zeta: --n-max must be in [1, 100]");
    if (v.terms < 10 || v.terms > 100000000) return usage_error("verify zeta: --terms must be in [10, 1e8]");
    parameters["n_max"] = n_max;
    parameters["terms"] = v.terms;
    reports = run_indexed(n_max, [&](long i) { return verify_zeta_even(i + 1, v.terms, g.tol); });
    for (long n = 1; n <= n_max; ++n) {
      const double tail = std::pow(static_cast<double>(v.terms), 1.0 - 2.0 * n) / (2.0 * n - 1.0);
      if (tail > g.tol)
        diagnostics.push_back("zeta n=" + std::to_string(n) + ": series tail bound " +
                              format_double(tail) + " exceeds tol " + format_double(g.tol) +
                              "; acceptance uses tail bound + tol");
    }
  } else if (identity == "stirling-bernoulli") {
    const long n_max = v.n_max < 0 ? 60 : v.n_max;
    if (n_max < 1 || n_max > 1000) return usage_error("verify stirling-bernoulli: --n-max must be in [1, 1000]");
    parameters["n_max"] = n_max;
    reports = run_indexed(n_max, [&](long i) { return verify_stirling_bernoulli(i + 1); });
  } else if (identity == "binomial-bernoulli") {
    const long n_max = v.n_max < 0 ? 30 : v.n_max;
    if (n_max < 1 || n_max > 200) return usage_error("verify binomial-bernoulli: --n-max must be in [1, 200]");
    parameters["n_max"] = n_max;
    reports = run_indexed(n_max, [&](long i) { return verify_binomial_bernoulli(i + 1); });
  } else if (identity == "gumbel") {
    const long k_max = v.k_max < 0 ? 20 : v.k_max;
    if (k_max < 1 || k_max > 200) return usage_error("verify gumbel: --k-max must be in [1, 200]");
    parameters["k_max"] = k_max;
    reports = run_indexed(k_max, [&](long i) { return verify_gumbel_bernoulli(i + 1); });
  } else if (identity == "soliton") {
    const long k_max = v.k_max < 0 ? 10 : v.k_max;
    if (k_max < 1 || k_max > 200) return usage_error("verify soliton: --k-max must be in [1, 200]");
    parameters["k_max"] = k_max;
    reports = run_indexed(k_max, [&](long i) { return verify_grosset_veselov(i + 1); });
  } else if (identity == "gumbel-quad") {
    const long k_max = v.k_max < 0 ? 6 : v.k_max;
    const long mode_cap = g.mode() == PrecisionMode::double_precision ? 6 : 10;
    if (k_max < 1 || k_max > mode_cap)
      return usage_error("verify gumbel-quad: --k-max must be in [1, " + std::to_string(mode_cap) +
                         "] for --precision " + g.precision);
    parameters["k_max"] = k_max;
    parameters["tol"] = g.tol;
    reports = run_indexed(k_max, [&](long i) {
      return quad_guard("gumbel-quad", {{"k", static_cast<double>(i + 1)}}, [&] {
        return verify_gumbel_bernoulli_quadrature(i + 1, g.tol, g.mode());
      });
    });
  } else if (identity == "soliton-quad") {
    const long k_max = v.k_max < 0 ? 6 : v.k_max;
    if (k_max < 1 || k_max > 8) return usage_error("verify soliton-quad: --k-max must be in [1, 8]");
    parameters["k_max"] = k_max;
    parameters["tol"] = g.tol;
    reports = run_indexed(k_max, [&](long i) {
      return quad_guard("soliton-quad", {{"k", static_cast<double>(i + 1)}}, [&] {
        return verify_grosset_veselov_quadrature(i + 1, g.tol, g.mode());
      });
    });
  } else if (identity == "moment") {
    const long n_max = v.n_max < 0 ? 8 : v.n_max;
    if (n_max < 0 || n_max > 10) return usage_error("verify moment: --n-max must be in [0, 10]");
    GompertzParams p{v.q, v.c, v.u_max};
    try {
      p.validate();
    } catch (const std::exception& e) {
      return usage_error(e.what());
    }
    parameters["n_max"] = n_max;
    parameters["q"] = v.q;
    parameters["c"] = v.c;
    parameters["u_max"] = v.u_max;
    parameters["tol"] = g.tol;
    reports = run_indexed(n_max + 1, [&](long i) {
      return quad_guard("moment",
                        {{"n", static_cast<double>(i)}, {"q", v.q}, {"c", v.c}, {"u_max", v.u_max}},
                        [&] { return verify_moment_quadrature(i, p, g.tol, g.mode()); });
    });
  } else if (identity == "general-derivative") {
    const long k_max = v.k_max < 0 ? 4 : v.k_max;
    if (k_max < 1 || k_max > 8) return usage_error("verify general-derivative: --k-max must be in [1, 8]");
    GompertzParams p{v.q, v.c, v.u_max};
    try {
      p.validate();
    } catch (const std::exception& e) {
      return usage_error(e.what());
    }
    parameters["k_max"] = k_max;
    parameters["q"] = v.q;
    parameters["c"] = v.c;
    parameters["u_max"] = v.u_max;
    parameters["tol"] = g.tol;
    reports = run_indexed(k_max, [&](long i) {
      return quad_guard("general-derivative",
                        {{"k", static_cast<double>(i + 1)}, {"q", v.q}, {"c", v.c}, {"u_max", v.u_max}},
                        [&] { return verify_general_derivative_integral(i + 1, p, g.tol, g.mode()); });
    });
  } else {
    return usage_error("unknown identity '" + identity + "'");
  }

  for (const auto& d : diagnostics) std::cerr << "note: " << d << "\n";
  for (const auto& r : reports)
    if (r.computed == "nan")
      std::cerr << "note: " << r.identity << " [" << report_param_csv(r)
                << "]: quadrature did not converge within the evaluation budget\n";
  emit_reports("verify", parameters, g, reports);
  return exit_code_for(reports);
}

// ---- derivative -----------------------------------------------------------

int run_derivative(long n, double q, double c, double u_max, double t, const GlobalOpts& g) {
  using namespace gsn;
  if (n < 0 || n > 30) return usage_error("derivative: --n must be in [0, 30]");
  GompertzParams p{q, c, u_max};
  try {
    p.validate();
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }

  std::string value;
  if (n == 0) {
    value = g.mode() == PrecisionMode::double_precision
                ? format_real(gompertz_eval(p, t))
                : format_real(ExtReal(u_max) * exp(-ExtReal(c) * exp(-ExtReal(q) * ExtReal(t))));
  } else {
    const auto s = derivative_exp_sum(n, p);
    value = g.mode() == PrecisionMode::double_precision ? format_real(s.eval(t))
                                                        : format_real(s.eval(ExtReal(t)));
  }

  json parameters;
  parameters["n"] = n;
  parameters["q"] = q;
  parameters["c"] = c;
  parameters["u_max"] = u_max;
  parameters["t"] = t;

  std::vector<std::pair<std::string, std::string>> logpoly, expsum;
  if (n >= 1) {
    const auto lp = derivative_coeffs(n);
    double cj = 1.0;
    for (long k = 1; k <= n; ++k) {
      logpoly.emplace_back(std::to_string(k), lp.coeffs[k - 1].get_str());
      cj *= c;
      expsum.emplace_back(std::to_string(k),
                          format_double(lp.coeffs[k - 1].get_d() * cj));
    }
  }

  if (g.format == "csv") {
    std::cout << "field,index,value\n";
    std::cout << "value," << n << ',' << value << "\n";
    for (const auto& [k, s] : logpoly) std::cout << "logpoly_coeff," << k << ',' << s << "\n";
    for (const auto& [j, s] : expsum) std::cout << "expsum_coeff," << j << ',' << s << "\n";
  } else {
    json results = json::array();
    results.push_back({{"type", "value"}, {"n", n}, {"t", t}, {"value", value}});
    for (const auto& [k, s] : logpoly)
      results.push_back({{"type", "logpoly_coeff"}, {"index", std::stol(k)}, {"value", s}});
    for (const auto& [j, s] : expsum)
      results.push_back({{"type", "expsum_coeff"}, {"index", std::stol(j)}, {"value", s}});
    emit_manifest("derivative", parameters, g, results);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and quadrature checks tying Gompertz derivatives, Gumbel moments, and the KdV 1-soliton to Bernoulli numbers"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", g.tol, "absolute tolerance for quadrature routes")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", g.precision, "floating precision for quadrature routes")
      ->check(CLI::IsMember({"double", "extended"}));

  auto* table = app.add_subcommand("table", "print exact number tables");
  table->fallthrough();
  std::string kind;
  long table_max = -1, table_n = 4;
  table->add_option("kind", kind, "bernoulli | stirling | gv")
      ->required()
      ->check(CLI::IsMember({"bernoulli", "stirling", "gv"}));
  table->add_option("--max", table_max, "last index (bernoulli: n, gv: k)");
  table->add_option("--n", table_n, "row index for stirling");

  auto* verify = app.add_subcommand("verify", "check identities and report pass/fail");
  verify->fallthrough();
  std::string identity;
  VerifyOpts vo;
  verify->add_option("identity", identity,
                     "faulhaber | zeta | stirling-bernoulli | binomial-bernoulli | gumbel | "
                     "gumbel-quad | soliton | soliton-quad | moment | general-derivative")
      ->required();
  verify->add_option("--k-max", vo.k_max);
  verify->add_option("--n-max", vo.n_max);
  verify->add_option("--m-max", vo.m_max);
  verify->add_option("--terms", vo.terms);
  verify->add_option("--q", vo.q);
  verify->add_option("--c", vo.c);
  verify->add_option("--umax", vo.u_max);

  auto* deriv = app.add_subcommand("derivative", "evaluate the n-th Gompertz derivative");
  deriv->fallthrough();
  long dn = 1;
  double dq = 1.0, dc = 1.0, dumax = 1.0, dt = 0.0;
  deriv->add_option("--n", dn)->required();
  deriv->add_option("--q", dq);
  deriv->add_option("--c", dc);
  deriv->add_option("--umax", dumax);
  deriv->add_option("--t", dt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints help or the error message
    return rc == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) {
      long mx = table_max;
      if (mx < 0) mx = (kind == "bernoulli") ? 12 : 10;
      return run_table(kind, mx, table_n, g);
    }
    if (verify->parsed()) return run_verify(identity, vo, g);
    if (deriv->parsed()) return run_derivative(dn, dq, dc, dumax, dt, g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
