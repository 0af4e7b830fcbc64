#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gsn {

enum class Route { exact, quadrature };

inline const char* route_name(Route r) { return r == Route::exact ? "exact" : "quadrature"; }

// One identity instance checked along one route. Exact routes carry rational
// strings ("p/q") in expected/computed and zero errors when they pass;
// quadrature routes carry 25-digit decimals in computed.
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, double>> parameter;
  std::string expected;
  std::string computed;
  double abs_error = 0.0;
  double rel_error = 0.0;
  bool passed = false;
  Route route = Route::exact;
};

}  // namespace gsn
