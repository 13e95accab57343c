#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3cy/invariants.hpp"
#include "k3cy/linform.hpp"

namespace k3cy {

enum class RelationTag { Known, LefschetzDerived, EulerDerived, Alias };

std::string tag_name(RelationTag tag);

/// A relation `form = 0` among the invariants of one order.
struct Relation {
  std::string name;
  LinForm form;
  RelationTag tag = RelationTag::Known;
  std::string note;
};

struct RelationSystem {
  Order order = Order::Two;
  std::vector<Relation> relations;

  const Relation& at(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::vector<LinForm> forms() const;
};

/// Catalogued relations, normalized to primitive integer forms.
///
///   d = 6: items "1".."11" plus "h2" (r + 2m + 2alpha + beta = 22, the
///          eigenspace count of H^2). Item "9" presumes gD = 0.
///   d = 4: items "1".."6".
///   d = 3, 2: "h2" and the Lefschetz identity for alpha ("lef1").
RelationSystem known_relations(Order d);

/// Identifications of auxiliary symbols adopted by this library:
/// d = 6: w = nprime; d = 4: gFix4 = gD, gqD = gD. Empty for d = 2, 3.
std::vector<Relation> alias_relations(Order d);

/// known_relations(d) followed by alias_relations(d).
RelationSystem full_system(Order d);

/// Names of the relations in known_relations(d) obtained by comparing the
/// two Euler characteristic computations (empty for d = 2, 3).
std::vector<std::string> euler_derived_names(Order d);

struct RelationResidual {
  std::string name;
  Rational residual;
  bool skipped = false;
  std::string note;
};

struct ValidationReport {
  Order order = Order::Two;
  std::vector<RelationResidual> residuals;
  std::vector<std::string> failed;
  std::vector<std::string> notices;
  bool pass = true;
};

/// Residual of every relation of full_system(set.order()) at `set`.
ValidationReport validate(const InvariantSet& set);

/// Riemann-Hurwitz relations for the quotient genera of G and F1 + F2
/// (order 6 only): residuals of items 8 and 9 together with integrality of
/// the genera they force. Item 9 is skipped unless gD = 0.
ValidationReport riemann_hurwitz_check(const InvariantSet& set);

enum class SolveStatus { Complete, Infeasible, Underdetermined };

std::string status_name(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::Underdetermined;
  std::size_t rank = 0;          // rank of full_system(d)
  std::size_t symbol_count = 0;  // size of the order-d namespace
  /// Given and forced values.
  std::map<std::string, Rational, std::less<>> determined;
  std::vector<std::string> free_symbols;
  std::string certificate;
  std::optional<InvariantSet> completion;
};

/// Exact row reduction of full_system(d) after substituting `given`.
/// Forced values must be non-negative integers, otherwise the result is
/// Infeasible with a certificate naming the offending symbol.
SolveResult solve_partial(Order d, const Assignment& given);

/// All minimal input sets that determine every invariant of order d.
/// They all have size symbol_count - rank.
std::vector<std::vector<std::string>> minimal_sufficient_sets(Order d);

/// Whether fixing `inputs` determines every order-d invariant.
bool is_sufficient(Order d, const std::vector<std::string>& inputs);

struct SufficiencyClaim {
  std::vector<std::string> inputs;
  bool sufficient = false;
  /// Inputs that can be dropped one at a time without losing sufficiency.
  std::vector<std::string> redundant;
};

/// The 8 input sets {k, gD, r|m, n1|n2, a|b} stated to suffice for d = 4.
std::vector<SufficiencyClaim> check_stated_sufficiency();

/// One hypothesis about the auxiliary symbols (see alias_relations).
struct AliasHypothesis {
  std::string name;
  std::map<std::string, LinForm, std::less<>> substitution;
};

/// d = 6: "w free", "w := nprime", "w := npts".
/// d = 4: "gFix4 free", "gFix4 := gD", "gFix4 := gqD", "gFix4 := 0",
///        "gFix4 := gD, gqD := gD".
/// d = 2, 3: "none".
std::vector<AliasHypothesis> alias_hypotheses(Order d);

/// The hypothesis encoded by alias_relations(d).
AliasHypothesis recorded_hypothesis(Order d);

struct MembershipCertificate {
  std::string target;
  LinForm form;
  bool member = false;
  /// (generator label, coefficient) with nonzero coefficients.
  std::vector<std::pair<std::string, Rational>> combination;
  /// True when sum coefficient * generator reproduces `form` exactly.
  bool verified = false;
};

struct CorollaryCheck {
  int level = 0;
  LinForm residual;        // tabulated initial value minus Hodge-route Euler
  bool identical = false;  // residual is the zero form
  bool explained = false;  // residual lies in the span of base relations and D_n
};

struct Derivation {
  Order order = Order::Two;
  int nmax = 0;
  AliasHypothesis hypothesis;
  /// D_n = (Hodge-route Euler) - (orbifold Euler), n = 1..nmax.
  std::vector<LinForm> differences;
  /// Relations used as background: known minus euler_derived_names(d).
  std::vector<std::string> base_names;
  std::size_t base_rank = 0;
  std::size_t span_rank = 0;
  /// Canonical primitive basis of span{D_n} + base.
  RelationSystem basis;
  /// Derived relations not in the base span (one per extra rank).
  std::vector<LinForm> new_relations;
  /// span_rank == base_rank.
  bool adds_nothing = false;
  /// Certificates for the euler-derived catalogue relations (d = 4, 6) or
  /// for each D_n against the known relations (d = 2, 3).
  std::vector<MembershipCertificate> certificates;
  /// Initial values of the Euler recurrence against the Hodge route.
  std::vector<CorollaryCheck> corollary;
};

/// Throws ResourceError for nmax > kMaxOrbifoldLevel, UsageError for nmax < 1.
Derivation derive_relations_from_euler(Order d, int nmax, const AliasHypothesis& hypothesis);
Derivation derive_relations_from_euler(Order d, int nmax);

}  // namespace k3cy
