#include "k3cy/lefschetz.hpp"

#include <algorithm>

namespace k3cy {

namespace {

CyclotomicNumber zeta_pow(Order d, long k) { return CyclotomicNumber::root_power(to_int(d), k); }

CyclotomicNumber one_minus(Order d, long k) {
  return CyclotomicNumber(to_int(d), Rational(1)) - zeta_pow(d, k);
}

void check_power(Order d, int j) {
  if (j < 1 || j >= to_int(d)) throw UsageError("power must satisfy 1 <= j < d");
}

}  // namespace

std::vector<LinForm> eigenspace_dims(Order d) {
  auto s = [d](std::string_view name) { return sym(d, name); };
  switch (d) {
    case Order::Two: return {s("r"), s("m")};
    case Order::Three: return {s("r"), s("m"), s("m")};
    case Order::Four: return {s("r"), s("m"), LinForm(22) - s("r") - s("m") * Rational(2), s("m")};
    case Order::Six: return {s("r"), s("m"), s("alpha"), s("beta"), s("alpha"), s("m")};
  }
  throw InternalError("bad order");
}

SymbolicCyclotomic top_lefschetz_trace(Order d, int j) {
  const int D = to_int(d);
  SymbolicCyclotomic tr = embed(CyclotomicNumber(D, Rational(2)));
  const auto dims = eigenspace_dims(d);
  for (int e = 0; e < D; ++e) tr += scale(dims[static_cast<std::size_t>(e)], zeta_pow(d, long(e) * j));
  return tr;
}

LinForm top_lefschetz_eigen(Order d, int j) {
  check_power(d, j);
  auto tr = top_lefschetz_trace(d, j);
  if (!tr.is_rational()) throw InternalError("Lefschetz trace is not rational: " + to_string(tr));
  return tr.c0();
}

Rational top_lefschetz_eigen(Order d, int j, const InvariantSet& set) {
  return top_lefschetz_eigen(d, j).eval(set.assignment());
}

LinForm top_lefschetz_fix(Order d, int j, IsolatedPoints points) {
  return fixed_locus_euler(d, j, points);
}

Rational top_lefschetz_fix(Order d, int j, const InvariantSet& set, IsolatedPoints points) {
  return top_lefschetz_fix(d, j, points).eval(set.assignment());
}

CyclotomicNumber point_term(Order d, const FixedPoint& p) {
  const int D = to_int(d);
  if (p.e1 % D == 0 || p.e2 % D == 0) {
    throw UsageError("degenerate fixed point: eigenvalue 1 in a transverse direction");
  }
  return inverse(one_minus(d, p.e1) * one_minus(d, p.e2));
}

CyclotomicNumber curve_term(Order d, const FixedCurve& c) {
  const int D = to_int(d);
  if (c.normal_exponent % D == 0) throw UsageError("degenerate fixed curve: normal eigenvalue 1");
  const CyclotomicNumber inv = inverse(one_minus(d, c.normal_exponent));
  const CyclotomicNumber z = zeta_pow(d, c.normal_exponent);
  return inv.scaled(1 - c.genus) - (z * inv * inv).scaled(c.self_intersection);
}

CyclotomicNumber hol_lefschetz_local(Order d, const std::vector<FixedPoint>& points,
                                     const std::vector<FixedCurve>& curves) {
  CyclotomicNumber sum(to_int(d));
  for (const auto& p : points) sum += point_term(d, p);
  for (const auto& c : curves) sum += curve_term(d, c);
  return sum;
}

FixedLocusShape generic_fixed_locus(Order d) {
  auto s = [d](std::string_view name) { return sym(d, name); };
  // l - 1 (resp. k - 1) rational curves plus D of genus gD:
  // sum(1 - g) = count - gD and sum C^2 = 2 gD - 2 count.
  switch (d) {
    case Order::Six:
      return {{{{2, 5}, s("p25")}, {{3, 4}, s("p34")}},
              {{s("l") - s("gD"), (s("gD") - s("l")) * Rational(2), 1}}};
    case Order::Four:
      return {{{{2, 3}, s("n1") + s("n2")}}, {{s("k") - s("gD"), (s("gD") - s("k")) * Rational(2), 1}}};
    default:
      throw UsageError("holomorphic Lefschetz data is only tabulated for orders 4 and 6");
  }
}

SymbolicCyclotomic hol_lefschetz_symbolic(Order d, const FixedLocusShape& shape) {
  const int D = to_int(d);
  SymbolicCyclotomic sum(D);
  for (const auto& p : shape.points) sum += scale(p.count, point_term(d, p.type));
  for (const auto& c : shape.curves) {
    if (c.normal_exponent % D == 0) throw UsageError("degenerate fixed curve: normal eigenvalue 1");
    const CyclotomicNumber inv = inverse(one_minus(d, c.normal_exponent));
    const CyclotomicNumber z = zeta_pow(d, c.normal_exponent);
    sum += scale(c.one_minus_genus, inv);
    sum -= scale(c.self_intersection, z * inv * inv);
  }
  return sum;
}

CyclotomicNumber hol_expected(Order d) {
  if (d != Order::Four && d != Order::Six) {
    throw UsageError("holomorphic Lefschetz number is only tabulated for orders 4 and 6");
  }
  return CyclotomicNumber(to_int(d), Rational(1)) + zeta_pow(d, to_int(d) - 1);
}

std::vector<LefschetzRelation> derive_lefschetz_relations(Order d) {
  const int D = to_int(d);
  const auto names = invariant_names(d);
  std::vector<LefschetzRelation> out;
  for (int j = 1; j < D; ++j) {
    if (D % j != 0) continue;
    LinForm f = top_lefschetz_eigen(d, j) - top_lefschetz_fix(d, j, IsolatedPoints::Omit);
    out.push_back({"top" + std::to_string(j), j, false, f.primitive(names)});
  }
  if (d == Order::Four || d == Order::Six) {
    SymbolicCyclotomic diff = hol_lefschetz_symbolic(d, generic_fixed_locus(d)) - embed(hol_expected(d));
    for (const LinForm& c : diff.coeffs()) {
      if (c.is_zero()) continue;
      LinForm f = c.primitive(names);
      bool seen = std::any_of(out.begin(), out.end(), [&](const LefschetzRelation& r) { return r.form == f; });
      if (!seen) out.push_back({"hol", 1, true, f});
    }
  }
  return out;
}

}  // namespace k3cy
