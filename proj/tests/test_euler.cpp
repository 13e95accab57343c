#include "doctest.h"
#include "k3cy/euler.hpp"
#include "k3cy/linalg.hpp"
#include "k3cy/relations.hpp"
#include "support.hpp"

using namespace k3cy;

TEST_CASE("recurrence examples") {
  CHECK(euler_recurrence(Order::Two, 2) == form(Order::Two, "12*N - 12*Nprime"));
  CHECK(euler_recurrence(Order::Four, 1) == LinForm(24));
  CHECK(euler_recurrence(Order::Four, 2) ==
        form(Order::Four, "2*r + 8*k + 4*n1 + 4*n2 + 6*N - 4*a + 4 - 14*gD - 2*m"));
  std::vector<LinForm> a;
  for (int n = 1; n <= 5; ++n) a.push_back(euler_recurrence(Order::Six, n));
  CHECK(a[4] == a[3] * Rational(12) - a[2] * Rational(19) - a[1] * Rational(12) + a[0] * Rational(20));
  for (Order d : kAllOrders) CHECK(euler_recurrence(d, 1) == LinForm(24));
}

TEST_CASE("closed form examples") {
  CHECK(euler_closed_form(Order::Two, 1) == LinForm(24));
  const LinForm expect3 =
      form(Order::Three, "188 - 2*r - 6*h - 12*k + 12*gC + 2*m") * Rational(-1, 9) +
      form(Order::Three, "28 + 2*r + 6*h + 12*k - 12*gC - 2*m") * Rational(8, 9);
  CHECK(euler_closed_form(Order::Three, 2) == expect3);
  InvariantSet s(Order::Two, {{"r", 10}, {"m", 12}, {"N", 2}, {"Nprime", 0}});
  CHECK(euler_closed_form(Order::Two, 4, s) == 1824);
  CHECK(euler_recurrence(Order::Two, 4, s) == 1824);
}

TEST_CASE("closed form equals recurrence symbolically") {
  for (Order d : kAllOrders)
    for (int n = 1; n <= 10; ++n) CHECK(euler_closed_form(d, n) == euler_recurrence(d, n));
}

TEST_CASE("orbifold route: small levels") {
  for (Order d : kAllOrders) CHECK(euler_orbifold(d, 1) == LinForm(24));
  CHECK(euler_orbifold(Order::Two, 2) == form(Order::Two, "12*N - 12*Nprime"));
  CHECK_THROWS_AS(euler_orbifold(Order::Six, kMaxOrbifoldLevel + 1), ResourceError);
}

TEST_CASE("orbifold class aggregation equals all-pairs enumeration") {
  for (Order d : kAllOrders) {
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(to_int(d));
      CAPTURE(n);
      CHECK(euler_orbifold(d, n) == k3cy::testing::naive_orbifold(d, n));
    }
  }
}

TEST_CASE("orbifold class multiplicities count all pairs") {
  for (Order d : kAllOrders) {
    for (int n = 1; n <= 6; ++n) {
      Integer total = 0;
      for (const auto& c : orbifold_classes(d, n)) total += c.multiplicity;
      const Integer group = pow_int(Integer(to_int(d)), static_cast<unsigned>(n - 1));
      CHECK(total == group * group);
    }
  }
}

TEST_CASE("route names") {
  for (auto r : kAllRoutes) CHECK(route_from_name(route_name(r)) == r);
  CHECK_THROWS_AS(route_from_name("bogus"), UsageError);
}

TEST_CASE("symbolic route residual at order 6, level 2 lies in the relation span") {
  const auto rep = crosscheck_symbolic(Order::Six, 2);
  const LinForm diff = rep.residual[0][3];
  CHECK_FALSE(diff.is_zero());
  const auto names = invariant_names(Order::Six);
  LinearSpan span(std::vector<std::string>(names.begin(), names.end()));
  for (const auto& r : full_system(Order::Six).relations) span.add(r.form, r.name);
  CHECK(span.contains(diff));
}

TEST_CASE("numeric crosscheck on random consistent sets") {
  for (Order d : kAllOrders) {
    const auto sets = k3cy::testing::random_consistent_sets(d, 5, 55 + to_int(d));
    REQUIRE(sets.size() == 5);
    for (const auto& s : sets) {
      for (int n = 1; n <= 4; ++n) {
        const auto rep = crosscheck(d, n, s);
        CHECK(rep.relation_consistent);
        CHECK(rep.demanded_agreement_holds);
      }
    }
  }
}

TEST_CASE("numeric crosscheck on an inconsistent set still demands recurrence = closed form") {
  InvariantSet s(Order::Two, {{"r", 3}, {"m", 30}, {"N", 5}, {"Nprime", 0}});
  const auto rep = crosscheck(Order::Two, 3, s);
  CHECK_FALSE(rep.relation_consistent);
  CHECK(rep.agree[1][2]);
  CHECK(rep.demanded_agreement_holds);
}
