#include <algorithm>

#include "doctest.h"
#include "k3cy/lefschetz.hpp"
#include "k3cy/relations.hpp"
#include "support.hpp"

using namespace k3cy;

namespace {

CyclotomicNumber cz(int d, long a, long b = 0) { return CyclotomicNumber(d, Rational(a), Rational(b)); }
CyclotomicNumber zeta(int d, long k) { return CyclotomicNumber::root_power(d, k); }

LinForm prim(Order d, const char* text) { return form(d, text).primitive(invariant_names(d)); }

// Explicit fixed locus of alpha for a consistent set: one curve of genus gD
// and further rational curves, plus the isolated points.
void explicit_locus(const InvariantSet& s, std::vector<FixedPoint>& pts, std::vector<FixedCurve>& curves) {
  long ncurves = 0;
  if (s.order() == Order::Six) {
    for (long i = 0; i < s.get("p25"); ++i) pts.push_back({2, 5});
    for (long i = 0; i < s.get("p34"); ++i) pts.push_back({3, 4});
    ncurves = s.get("l");
  } else {
    for (long i = 0; i < s.get("n1") + s.get("n2"); ++i) pts.push_back({2, 3});
    ncurves = s.get("k");
  }
  const Rational g(s.get("gD"));
  for (long i = 0; i < ncurves; ++i) {
    const Rational genus = i == 0 ? g : Rational(0);
    curves.push_back({genus, k3_self_intersection(genus), 1});
  }
}

}  // namespace

TEST_CASE("eigenspace traces") {
  CHECK(top_lefschetz_eigen(Order::Six, 1) == form(Order::Six, "2 + r + m - alpha - beta"));
  CHECK(top_lefschetz_eigen(Order::Six, 3) == form(Order::Six, "2 + r + 2*alpha - beta - 2*m"));
  CHECK(top_lefschetz_eigen(Order::Four, 1) == form(Order::Four, "2*r + 2*m - 20"));
  CHECK(top_lefschetz_fix(Order::Six, 1) == form(Order::Six, "2*l - 2*gD + p34 + p25"));
  CHECK(top_lefschetz_fix(Order::Four, 2) == form(Order::Four, "2*N - 2*gD"));
  CHECK(top_lefschetz_fix(Order::Six, 0) == LinForm(24));
  const std::map<Order, const char*> h2 = {{Order::Two, "r + m"},
                                           {Order::Three, "r + 2*m"},
                                           {Order::Four, "22"},
                                           {Order::Six, "r + 2*m + 2*alpha + beta"}};
  for (Order d : kAllOrders) {
    LinForm total;
    for (const auto& f : eigenspace_dims(d)) total += f;
    CHECK(total == form(d, h2.at(d)));
  }
}

TEST_CASE("local holomorphic contributions") {
  CHECK(point_term(Order::Six, {3, 4}) == inverse(cz(6, 2, 2)));
  const auto one_minus = cz(6, 1) - zeta(6, 1);
  CHECK(curve_term(Order::Six, {0, -2, 1}) == (cz(6, 1) + zeta(6, 1)) / (one_minus * one_minus));
  CHECK(hol_lefschetz_local(Order::Six, {}, {}) == cz(6, 0));
  CHECK(hol_expected(Order::Six) == cz(6, 1) + zeta(6, 5));
  CHECK(hol_expected(Order::Four) == cz(4, 1) + zeta(4, 3));
  CHECK_THROWS_AS(point_term(Order::Six, {6, 1}), UsageError);
}

TEST_CASE("Lefschetz relations reproduce the printed forms") {
  auto forms = [](Order d) {
    std::vector<LinForm> out;
    for (const auto& r : derive_lefschetz_relations(d)) out.push_back(r.form);
    return out;
  };
  auto has = [](const std::vector<LinForm>& v, const LinForm& f) { return std::find(v.begin(), v.end(), f) != v.end(); };
  const auto six = forms(Order::Six);
  CHECK(has(six, prim(Order::Six, "2 + r + m - alpha - beta - 2*l + 2*gD - p34 - p25")));
  CHECK(has(six, prim(Order::Six, "-alpha + beta + r + 2 - m - 2*k + 2*gG")));
  CHECK(has(six, prim(Order::Six, "2 + r + 2*alpha - beta - 2*m - 2*N + 2*gF1 + 2*gF2")));
  CHECK(has(six, prim(Order::Six, "3 + 3*l - 3*gD - p34/2 - p25")));
  const auto four = forms(Order::Four);
  CHECK(has(four, prim(Order::Four, "-20 + 2*r + 2*m - n1 - n2 - 2*k + 2*gD")));
  CHECK(has(four, prim(Order::Four, "N - gD - 12 + 2*m")));
  CHECK(has(four, prim(Order::Four, "4 + 2*k - 2*gD - n1 - n2")));
  for (Order d : kAllOrders)
    for (const auto& f : forms(d)) CHECK(f == f.primitive(invariant_names(d)));
}

TEST_CASE("Lefschetz numbers on consistent sets") {
  for (Order d : kAllOrders) {
    const auto sets = k3cy::testing::random_consistent_sets(d, 20, 900 + to_int(d));
    REQUIRE(sets.size() == 20);
    for (const auto& s : sets) {
      for (int j = 1; j < to_int(d); ++j) {
        const Rational e = top_lefschetz_eigen(d, j, s);
        CHECK(is_integer(e));
        CHECK(e == top_lefschetz_fix(d, j, s));
      }
      if (d == Order::Six || d == Order::Four) {
        std::vector<FixedPoint> pts;
        std::vector<FixedCurve> curves;
        explicit_locus(s, pts, curves);
        if (s.get("gD") > 0 && curves.empty()) continue;
        CHECK(hol_lefschetz_local(d, pts, curves) == hol_expected(d));
      }
    }
  }
}
