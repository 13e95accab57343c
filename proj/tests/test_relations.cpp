#include <algorithm>
#include <random>

#include "doctest.h"
#include "k3cy/euler.hpp"
#include "k3cy/linalg.hpp"
#include "k3cy/relations.hpp"
#include "support.hpp"

using namespace k3cy;

namespace {

LinForm prim(Order d, const char* text) { return form(d, text).primitive(invariant_names(d)); }

bool failed(const ValidationReport& rep, const std::string& name) {
  return std::find(rep.failed.begin(), rep.failed.end(), name) != rep.failed.end();
}

const RelationResidual* residual(const ValidationReport& rep, const std::string& name) {
  for (const auto& r : rep.residuals)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("catalogue") {
  const auto four = known_relations(Order::Four);
  CHECK(four.relations.size() == 6);
  CHECK(four.at("3").form == prim(Order::Four, "N - gD - 12 + 2*m"));
  const auto six = known_relations(Order::Six);
  CHECK(six.at("7").form == prim(Order::Six, "6 + 6*l - 6*gD - p34 - 2*p25"));
  CHECK(six.at("6").form == prim(Order::Six, "-2*alpha + 10 + N - r - gF1 - gF2"));
  CHECK(six.at("1").form.eval({{"m", 6}, {"r", 4}, {"alpha", 2}, {"beta", 2}}) == 0);
  const auto two = known_relations(Order::Two);
  CHECK(two.at("h2").form == prim(Order::Two, "r + m - 22"));
  for (Order d : kAllOrders)
    for (const auto& r : known_relations(d).relations) CHECK(r.form == r.form.primitive(invariant_names(d)));
}

TEST_CASE("validate examples") {
  InvariantSet zero(Order::Four);
  const auto rep = validate(zero);
  CHECK_FALSE(rep.pass);
  CHECK(failed(rep, "2"));
  REQUIRE(residual(rep, "2"));
  CHECK(abs(residual(rep, "2")->residual) == 20);

  const auto solved = solve_partial(Order::Six, {{"a", 2}, {"b", 2}, {"gG", 3}, {"gF1", 4}, {"gF2", 4}, {"gqG", 1},
                                                 {"gqF1", 1}, {"gqF2", 1}, {"w", 0}});
  REQUIRE(solved.completion);
  auto s = *solved.completion;
  CHECK(validate(s).pass);
  s.set("npts", s.get("npts") + 1);
  CHECK(failed(validate(s), "2"));
}

TEST_CASE("Riemann-Hurwitz screening") {
  InvariantSet s(Order::Six);
  s.set("gG", 1);
  s.set("p34", 2);
  s.set("k", 2);
  s.set("l", 1);
  s.set("gqG", 0);
  const auto rep = riemann_hurwitz_check(s);
  CHECK(failed(rep, "8-integrality"));

  InvariantSet t(Order::Six);
  const auto rep0 = riemann_hurwitz_check(t);
  REQUIRE(residual(rep0, "8"));
  CHECK(residual(rep0, "8")->residual == 0);

  t.set("gD", 1);
  const auto rep1 = riemann_hurwitz_check(t);
  REQUIRE(residual(rep1, "9"));
  CHECK(residual(rep1, "9")->skipped);
}

TEST_CASE("solve: rank and free symbols") {
  const auto s = solve_partial(Order::Four, {});
  CHECK(s.status == SolveStatus::Underdetermined);
  CHECK(s.symbol_count == 11);
  CHECK(s.free_symbols.size() == s.symbol_count - s.rank);

  // Oracle: rank of the constraint matrix from LinearSpan.
  for (Order d : kAllOrders) {
    const auto names = invariant_names(d);
    LinearSpan span(std::vector<std::string>(names.begin(), names.end()));
    for (const auto& f : full_system(d).forms()) {
      LinForm homog = f - LinForm(f.constant());
      span.add(homog, "r");
    }
    CHECK(solve_partial(d, {}).rank == span.rank());
  }
}

TEST_CASE("solve: stated example") {
  const auto s = solve_partial(Order::Four, {{"k", 1}, {"gD", 0}, {"r", 7}, {"n1", 2}, {"a", 0}});
  // The five inputs over-determine the system; the result is either a
  // completion or an explicit infeasibility, never underdetermined.
  CHECK(s.status != SolveStatus::Underdetermined);
  CHECK(is_sufficient(Order::Four, {"k", "gD", "r", "n1", "a"}));
}

TEST_CASE("solve: infeasibility certificates") {
  const auto neg = solve_partial(Order::Four, {{"a", 2}, {"gFix4", 3}, {"k", 0}, {"n2", 0}});
  CHECK(neg.status == SolveStatus::Infeasible);
  CHECK(neg.certificate == "b = -1 < 0");

  const auto frac = solve_partial(Order::Four, {{"a", 0}, {"gFix4", 0}, {"n1", 0}, {"n2", 1}});
  CHECK(frac.status == SolveStatus::Infeasible);
  CHECK(frac.certificate == "r = 5/2 is not an integer");

  CHECK(solve_partial(Order::Four, {{"b", -1}}).status == SolveStatus::Infeasible);

  const auto inconsistent = solve_partial(Order::Four, {{"N", 1}, {"k", 2}, {"a", 0}, {"gFix4", 0}});
  CHECK(inconsistent.status == SolveStatus::Infeasible);
  CHECK(inconsistent.certificate.find("reduces to 0 =") != std::string::npos);
}

TEST_CASE("solve recovers consistent sets from their free symbols") {
  for (Order d : kAllOrders) {
    const auto free = solve_partial(d, {}).free_symbols;
    for (const auto& s : k3cy::testing::random_consistent_sets(d, 30, 41 + to_int(d))) {
      Assignment g;
      for (const auto& f : free) g[f] = s.get(f);
      const auto r = solve_partial(d, g);
      REQUIRE(r.status == SolveStatus::Complete);
      CHECK(std::equal(r.completion->values().begin(), r.completion->values().end(), s.values().begin()));
      CHECK(validate(*r.completion).pass);
    }
  }
}

TEST_CASE("solve completions validate") {
  for (Order d : kAllOrders) {
    const auto free = solve_partial(d, {}).free_symbols;
    std::mt19937 rng(31 + to_int(d));
    std::uniform_int_distribution<int> v(0, 5);
    for (int i = 0; i < 200; ++i) {
      Assignment g;
      for (const auto& f : free) g[f] = v(rng);
      const auto s = solve_partial(d, g);
      CHECK(s.status != SolveStatus::Underdetermined);
      if (s.status == SolveStatus::Complete) {
        CHECK(validate(*s.completion).pass);
        for (const auto& [name, value] : g) CHECK(Rational(s.completion->get(name)) == value);
      } else {
        CHECK_FALSE(s.certificate.empty());
      }
    }
  }
}

TEST_CASE("minimal sufficient sets") {
  const auto sets = minimal_sufficient_sets(Order::Four);
  const auto base = solve_partial(Order::Four, {});
  CHECK_FALSE(sets.empty());
  for (const auto& s : sets) {
    CHECK(s.size() == base.symbol_count - base.rank);
    CHECK(is_sufficient(Order::Four, s));
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto smaller = s;
      smaller.erase(smaller.begin() + static_cast<long>(i));
      CHECK_FALSE(is_sufficient(Order::Four, smaller));
    }
  }
  for (const auto& c : check_stated_sufficiency()) CHECK(c.sufficient);
}

TEST_CASE("derived relations: membership certificates") {
  const auto d6 = derive_relations_from_euler(Order::Six, 6);
  std::vector<std::string> members;
  for (const auto& c : d6.certificates) {
    CHECK(c.verified);
    if (c.member) members.push_back(c.target);
  }
  for (const char* t : {"6", "10", "11"}) CHECK(std::find(members.begin(), members.end(), t) != members.end());

  const auto d4 = derive_relations_from_euler(Order::Four, 6);
  int four_members = 0;
  for (const auto& c : d4.certificates) four_members += c.member && c.verified;
  CHECK(four_members == 2);

  for (Order d : {Order::Two, Order::Three}) CHECK(derive_relations_from_euler(d, 6).adds_nothing);
}

TEST_CASE("certificate combinations reproduce their targets") {
  for (Order d : {Order::Four, Order::Six}) {
    const auto dv = derive_relations_from_euler(d, 6);
    std::map<std::string, LinForm> gens;
    for (std::size_t n = 0; n < dv.differences.size(); ++n) gens["D" + std::to_string(n + 1)] = dv.differences[n];
    const auto known = known_relations(d);
    for (const auto& r : known.relations) gens[r.name] = r.form.substitute(dv.hypothesis.substitution);
    int checked = 0;
    for (const auto& c : dv.certificates) {
      if (!c.member) continue;
      LinForm sum;
      bool resolved = true;
      for (const auto& [label, coeff] : c.combination) {
        auto it = gens.find(label);
        if (it == gens.end()) {
          resolved = false;
          break;
        }
        sum += it->second * coeff;
      }
      if (resolved) {
        CHECK(sum == c.form);
        ++checked;
      }
    }
    CHECK(checked >= 2);
  }
}

TEST_CASE("differences vanish on consistent sets") {
  for (Order d : kAllOrders) {
    const auto dv = derive_relations_from_euler(d, 6);
    const auto sets = k3cy::testing::random_consistent_sets(d, 10, 77 + to_int(d));
    for (const auto& s : sets)
      for (const auto& f : dv.differences) CHECK(f.eval(s.assignment()) == 0);
  }
}

TEST_CASE("derive guards") {
  CHECK_THROWS_AS(derive_relations_from_euler(Order::Two, 0), UsageError);
  CHECK_THROWS_AS(derive_relations_from_euler(Order::Two, kMaxOrbifoldLevel + 1), ResourceError);
}
