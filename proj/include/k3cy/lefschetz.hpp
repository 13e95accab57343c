#pragma once

#include <string>
#include <vector>

#include "k3cy/cyclotomic.hpp"
#include "k3cy/invariants.hpp"

namespace k3cy {

/// Dimension of the zeta_d^e eigenspace of alpha* on H^2(S, C), e = 0..d-1.
/// For d = 4 the zeta_4^2 eigenspace is 22 - r - 2m.
std::vector<LinForm> eigenspace_dims(Order d);

/// Trace of (alpha^j)* on H^0 + H^2 + H^4 as a symbolic cyclotomic number.
SymbolicCyclotomic top_lefschetz_trace(Order d, int j);

/// Topological Lefschetz number of alpha^j from eigenspace data, 1 <= j < d.
/// Throws InternalError if the trace is not rational.
LinForm top_lefschetz_eigen(Order d, int j);
Rational top_lefschetz_eigen(Order d, int j, const InvariantSet& set);

/// Euler characteristic of the fixed locus of alpha^j.
LinForm top_lefschetz_fix(Order d, int j, IsolatedPoints points = IsolatedPoints::Include);
Rational top_lefschetz_fix(Order d, int j, const InvariantSet& set,
                           IsolatedPoints points = IsolatedPoints::Include);

/// Isolated fixed point where alpha acts on the tangent space with
/// eigenvalues zeta^e1, zeta^e2.
struct FixedPoint {
  int e1 = 0;
  int e2 = 0;
};

/// Fixed curve with normal eigenvalue zeta^normal_exponent.
struct FixedCurve {
  Rational genus;
  Rational self_intersection;
  int normal_exponent = 1;
};

/// Self-intersection of a smooth curve of genus g on a K3 surface.
inline Rational k3_self_intersection(const Rational& genus) { return 2 * genus - 2; }

/// 1 / ((1 - zeta^e1)(1 - zeta^e2)). Throws UsageError if a factor vanishes.
CyclotomicNumber point_term(Order d, const FixedPoint& p);

/// (1 - g)/(1 - zeta) - zeta C^2/(1 - zeta)^2 with zeta the normal eigenvalue.
CyclotomicNumber curve_term(Order d, const FixedCurve& c);

/// Sum of the local contributions of the holomorphic Lefschetz formula.
CyclotomicNumber hol_lefschetz_local(Order d, const std::vector<FixedPoint>& points,
                                     const std::vector<FixedCurve>& curves);

/// Fixed-point class with a symbolic multiplicity.
struct PointClass {
  FixedPoint type;
  LinForm count;
};

/// Curves aggregated by normal eigenvalue: the local term is linear in
/// sum(1 - g) and sum C^2, so a class only needs those totals.
struct CurveClass {
  LinForm one_minus_genus;
  LinForm self_intersection;
  int normal_exponent = 1;
};

struct FixedLocusShape {
  std::vector<PointClass> points;
  std::vector<CurveClass> curves;
};

/// Generic fixed locus of alpha for d = 6 (p25 points of type (2,5), p34 of
/// type (3,4), l - 1 rational curves and D) and d = 4 (n1 + n2 points of
/// type (2,3), k - 1 rational curves and D). UsageError otherwise.
FixedLocusShape generic_fixed_locus(Order d);

SymbolicCyclotomic hol_lefschetz_symbolic(Order d, const FixedLocusShape& shape);

/// Value of the holomorphic Lefschetz number from the action on H^{0,q}:
/// 1 + zeta^{d-1}. Defined for d in {4, 6}.
CyclotomicNumber hol_expected(Order d);

struct LefschetzRelation {
  std::string name;  // "top1", "top2", ..., "hol"
  int power = 1;
  bool holomorphic = false;
  LinForm form;  // primitive
};

/// Topological relations for each j | d, 1 <= j < d (the alpha^2 fixed
/// locus counted without isolated points), and for d in {4, 6} the
/// holomorphic relations from both coordinates of local sum - expected,
/// deduplicated.
std::vector<LefschetzRelation> derive_lefschetz_relations(Order d);

}  // namespace k3cy
