#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "k3cy/hodge.hpp"
#include "k3cy/invariants.hpp"

namespace k3cy {

/// Largest level accepted by the orbifold enumeration.
inline constexpr int kMaxOrbifoldLevel = 8;

Integer euler_from_diamond(const HodgeDiamond& diamond);

/// sum (-1)^{p+q} h^{p,q} read symbolically off build_hodge_poly(d, n).
LinForm euler_hodge_symbolic(Order d, int n);

/// a_k = sum_i coefficients[i] * a_{k-1-i}, started from symbolic initial
/// values a_0 .. a_{m-1}; e(Y_{d,n}) = a_{n-1}.
struct RecurrenceSpec {
  Order order;
  std::vector<Integer> coefficients;
  std::vector<LinForm> initial;
  /// Roots of x^m - sum c_i x^{m-1-i}.
  std::vector<Integer> roots;
};

const RecurrenceSpec& recurrence_spec(Order d);

LinForm euler_recurrence(Order d, int n);
Rational euler_recurrence(Order d, int n, const InvariantSet& set);

/// e(Y_{d,n}) = sum_i weight_i * root_i^{n-1}.
struct ClosedForm {
  Order order;
  std::vector<std::pair<Integer, LinForm>> terms;
};

const ClosedForm& closed_form(Order d);

LinForm euler_closed_form(Order d, int n);
/// Throws InternalError if the value is not an integer.
Rational euler_closed_form(Order d, int n, const InvariantSet& set);

/// One aggregated class of commuting pairs (g, h) in G_{d,n} x G_{d,n}:
/// surface_class = gcd(g_1, h_1, d) and elliptic[c] = number of elliptic
/// coordinates i with gcd(g_i, h_i, d) = c, for c a divisor of d.
struct OrbifoldClass {
  int surface_class = 0;
  std::vector<int> elliptic;  // indexed by divisor value, size d + 1
  Integer multiplicity;
};

/// Classes with their pair counts, obtained by dynamic programming over the
/// elliptic coordinates with the running coordinate sums as state.
std::vector<OrbifoldClass> orbifold_classes(Order d, int n);

/// Stringy Euler number of (S x E^{n-1}) / G_{d,n}. Throws ResourceError
/// for n > kMaxOrbifoldLevel.
LinForm euler_orbifold(Order d, int n, IsolatedPoints points = IsolatedPoints::Include);
Rational euler_orbifold(Order d, int n, const InvariantSet& set);

enum class Route { Diamond = 0, Recurrence = 1, ClosedForm = 2, Orbifold = 3 };
inline constexpr std::array<Route, 4> kAllRoutes = {Route::Diamond, Route::Recurrence,
                                                    Route::ClosedForm, Route::Orbifold};
std::string route_name(Route r);
Route route_from_name(const std::string& name);

struct RouteValue {
  Route route;
  std::optional<Rational> value;  // empty when the route failed
  std::string error;
};

struct EulerReport {
  Order order;
  int level = 0;
  std::vector<RouteValue> routes;
  /// agree[i][j] for routes i, j that both produced a value.
  std::array<std::array<bool, 4>, 4> agree{};
  /// Whether the set satisfies the full relation system (known + aliases).
  bool relation_consistent = false;
  /// Routes 2 and 3 always; routes 1 and 4 too when relation_consistent.
  bool demanded_agreement_holds = false;
};

/// Numeric cross-check of the four routes.
EulerReport crosscheck(Order d, int n, const InvariantSet& set);

struct SymbolicEulerReport {
  Order order;
  int level = 0;
  std::array<LinForm, 4> values;
  /// residual[i][j] = values[i] - values[j].
  std::array<std::array<LinForm, 4>, 4> residual;
};

SymbolicEulerReport crosscheck_symbolic(Order d, int n);

}  // namespace k3cy
