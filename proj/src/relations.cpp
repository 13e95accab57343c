#include "k3cy/relations.hpp"

#include <algorithm>

#include "k3cy/euler.hpp"
#include "k3cy/linalg.hpp"

namespace k3cy {

namespace {

using Tag = RelationTag;

std::vector<std::string> names_of(Order d) {
  auto n = invariant_names(d);
  return {n.begin(), n.end()};
}

Relation rel(Order d, std::string name, const char* text, Tag tag, std::string note = {}) {
  return {std::move(name), form(d, text).primitive(invariant_names(d)), tag, std::move(note)};
}

RelationSystem build_known(Order d) {
  RelationSystem sys{d, {}};
  auto& R = sys.relations;
  switch (d) {
    case Order::Six:
      R.push_back(rel(d, "1", "2*m + r + alpha + beta - 20", Tag::Known));
      R.push_back(rel(d, "2", "npts - p25 - 2*nprime", Tag::Known));
      R.push_back(rel(d, "3", "2 + r + m - alpha - beta - 2*l + 2*gD - p25 - p34", Tag::LefschetzDerived,
                      "topological, alpha"));
      R.push_back(rel(d, "4", "-alpha + beta + r + 2 - m - 2*k + 2*gG", Tag::LefschetzDerived,
                      "topological, alpha^2"));
      R.push_back(rel(d, "5", "2 + r + 2*alpha - beta - 2*m - 2*N + 2*gF1 + 2*gF2", Tag::LefschetzDerived,
                      "topological, alpha^3"));
      R.push_back(rel(d, "6", "-2*alpha + 10 + N - r - gF1 - gF2", Tag::EulerDerived));
      R.push_back(rel(d, "7", "3 + 3*l - 3*gD - p34/2 - p25", Tag::LefschetzDerived, "holomorphic"));
      R.push_back(rel(d, "8", "-gqG + gG/2 - p34/4 + k/2 - b - l/2", Tag::Known,
                      "Riemann-Hurwitz for G -> G/alpha"));
      R.push_back(rel(d, "9", "-gqF1 - gqF2 + gF1/3 + gF2/3 - p25/3 - p34/3 + 2/3*N - 2*a - 2/3*l",
                      Tag::Known, "Riemann-Hurwitz for F1, F2; presumes gD = 0"));
      R.push_back(rel(d, "10",
                      "-m + 2 + r - 2*l - p25 - p34 + 2*gD - 2*b - w - 2*gqG + 2*gG - 2*a - gqF1 - gqF2"
                      " + gF1 + gF2",
                      Tag::EulerDerived));
      R.push_back(rel(d, "11",
                      "-nprime - 3 + 3/2*r - 6*l - 2*p25 - 3*p34 + 6*gD + 2*k - 6*b - 6*gqG + 4*gG"
                      " + 3/2*N - 6*a - 3*gqF1 - 3*gqF2 + 3/2*gF1 + 3/2*gF2",
                      Tag::EulerDerived));
      R.push_back(rel(d, "h2", "r + 2*m + 2*alpha + beta - 22", Tag::Known, "dim H^2 = 22"));
      break;
    case Order::Four:
      R.push_back(rel(d, "1", "-N + k + b + 2*a", Tag::Known));
      R.push_back(rel(d, "2", "-20 + 2*r + 2*m - n1 - n2 - 2*k + 2*gD", Tag::LefschetzDerived,
                      "topological, alpha"));
      R.push_back(rel(d, "3", "N - gD - 12 + 2*m", Tag::LefschetzDerived, "topological, alpha^2"));
      R.push_back(rel(d, "4", "4 + 2*k - 2*gD - n1 - n2", Tag::LefschetzDerived, "holomorphic"));
      R.push_back(rel(d, "5", "-b + 8 + 3*k - 3*gD + 2*n1 + 2*n2 + 2*a - 2*r", Tag::EulerDerived));
      R.push_back(rel(d, "6", "-m - 2*k + 2*gD - n1 - n2 - 2*a + r + 2", Tag::EulerDerived));
      break;
    case Order::Three:
      R.push_back(rel(d, "h2", "r + 2*m - 22", Tag::Known, "dim H^2 = 22"));
      R.push_back(rel(d, "lef1", "2 + r - m - h - 2*k + 2*gC", Tag::LefschetzDerived, "topological, alpha"));
      break;
    case Order::Two:
      R.push_back(rel(d, "h2", "r + m - 22", Tag::Known, "dim H^2 = 22"));
      R.push_back(rel(d, "lef1", "2 + r - m - 2*N + 2*Nprime", Tag::LefschetzDerived, "topological, alpha"));
      break;
  }
  return sys;
}

bool non_negative_integer(const Rational& q) { return is_integer(q) && q >= 0; }

std::string combination_text(const std::vector<std::pair<std::string, Rational>>& combo) {
  std::string out;
  for (const auto& [label, c] : combo) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")*[" + label + "]";
  }
  return out.empty() ? "0" : out;
}

MembershipCertificate certify(const LinearSpan& span, std::string target, const LinForm& f) {
  MembershipCertificate cert{std::move(target), f, false, {}, false};
  auto coeffs = span.express(f);
  if (!coeffs) return cert;
  cert.member = true;
  LinForm check;
  for (std::size_t i = 0; i < coeffs->size(); ++i) {
    const Rational& c = (*coeffs)[i];
    if (c == 0) continue;
    cert.combination.emplace_back(span.labels()[i], c);
    check += span.generators()[i] * c;
  }
  cert.verified = check == f;
  return cert;
}

}  // namespace

std::string tag_name(RelationTag tag) {
  switch (tag) {
    case Tag::Known: return "known";
    case Tag::LefschetzDerived: return "lefschetz-derived";
    case Tag::EulerDerived: return "euler-derived";
    case Tag::Alias: return "alias";
  }
  throw InternalError("bad tag");
}

const Relation& RelationSystem::at(const std::string& name) const {
  for (const auto& r : relations) {
    if (r.name == name) return r;
  }
  throw UsageError("no relation named '" + name + "'");
}

bool RelationSystem::contains(const std::string& name) const {
  return std::any_of(relations.begin(), relations.end(), [&](const Relation& r) { return r.name == name; });
}

std::vector<LinForm> RelationSystem::forms() const {
  std::vector<LinForm> out;
  for (const auto& r : relations) out.push_back(r.form);
  return out;
}

RelationSystem known_relations(Order d) { return build_known(d); }

std::vector<Relation> alias_relations(Order d) {
  switch (d) {
    case Order::Six:
      return {rel(d, "alias-w", "w - nprime", Tag::Alias, "w identified with nprime")};
    case Order::Four:
      return {rel(d, "alias-gFix4", "gFix4 - gD", Tag::Alias, "gFix4 identified with gD"),
              rel(d, "alias-gqD", "gqD - gD", Tag::Alias, "gqD identified with gD")};
    default:
      return {};
  }
}

RelationSystem full_system(Order d) {
  RelationSystem sys = known_relations(d);
  for (auto& r : alias_relations(d)) sys.relations.push_back(std::move(r));
  return sys;
}

std::vector<std::string> euler_derived_names(Order d) {
  std::vector<std::string> out;
  for (const auto& r : known_relations(d).relations) {
    if (r.tag == Tag::EulerDerived) out.push_back(r.name);
  }
  return out;
}

ValidationReport validate(const InvariantSet& set) {
  const Order d = set.order();
  ValidationReport report;
  report.order = d;
  const Assignment values = set.assignment();
  for (const auto& r : full_system(d).relations) {
    RelationResidual res{r.name, r.form.eval(values), false, r.note};
    if (d == Order::Six && r.name == "9" && set.get("gD") != 0) {
      res.skipped = true;
      report.notices.push_back("relation 9 skipped: it presumes gD = 0");
    } else if (res.residual != 0) {
      report.failed.push_back(r.name);
    }
    report.residuals.push_back(std::move(res));
  }
  if (d == Order::Six) {
    report.notices.push_back("relations 1 and h2 together force alpha = 2 (alpha = " +
                             std::to_string(set.get("alpha")) + ")");
  }
  report.pass = report.failed.empty();
  return report;
}

ValidationReport riemann_hurwitz_check(const InvariantSet& set) {
  if (set.order() != Order::Six) throw UsageError("Riemann-Hurwitz check is defined for order 6");
  const Order d = Order::Six;
  ValidationReport report;
  report.order = d;
  const Assignment values = set.assignment();
  const auto known = known_relations(d);

  const Rational gqG = form(d, "gG/2 - p34/4 + k/2 - b - l/2").eval(values);
  report.residuals.push_back({"8", known.at("8").form.eval(values), false, known.at("8").note});
  if (report.residuals.back().residual != 0) report.failed.push_back("8");
  if (!non_negative_integer(gqG)) {
    report.failed.push_back("8-integrality");
    report.notices.push_back("forced gqG = " + to_string(gqG) + " is not a non-negative integer");
  }

  if (set.get("gD") != 0) {
    report.residuals.push_back({"9", known.at("9").form.eval(values), true, known.at("9").note});
    report.notices.push_back("relation 9 skipped: it presumes gD = 0");
  } else {
    const Rational gqF =
        form(d, "gF1/3 + gF2/3 - p25/3 - p34/3 + 2/3*N - 2*a - 2/3*l").eval(values);
    report.residuals.push_back({"9", known.at("9").form.eval(values), false, known.at("9").note});
    if (report.residuals.back().residual != 0) report.failed.push_back("9");
    if (!non_negative_integer(gqF)) {
      report.failed.push_back("9-integrality");
      report.notices.push_back("forced gqF1 + gqF2 = " + to_string(gqF) +
                               " is not a non-negative integer");
    }
  }
  report.pass = report.failed.empty();
  return report;
}

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Complete: return "complete";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Underdetermined: return "underdetermined";
  }
  throw InternalError("bad status");
}

SolveResult solve_partial(Order d, const Assignment& given) {
  const auto names = names_of(d);
  const auto system = full_system(d);
  SolveResult result;
  result.symbol_count = names.size();
  {
    LinearSpan span(names);
    for (const auto& r : system.relations) span.add(r.form - LinForm(r.form.constant()), r.name);
    result.rank = span.rank();
  }
  for (const auto& [name, value] : given) {
    if (!is_invariant_name(d, name)) {
      throw UsageError("'" + name + "' is not an order-" + std::to_string(to_int(d)) + " invariant");
    }
    result.determined.emplace(name, value);
  }
  for (const auto& [name, value] : given) {
    if (value < 0 || !is_integer(value)) {
      result.status = SolveStatus::Infeasible;
      result.certificate = "given " + name + " = " + to_string(value) +
                           (value < 0 ? " < 0" : " is not an integer");
      return result;
    }
  }

  std::vector<std::string> unknown;
  for (const auto& n : names) {
    if (!given.contains(n)) unknown.push_back(n);
  }
  const LinearSpan columns(unknown);
  const std::size_t m = system.relations.size();
  std::vector<RationalRow> rows;
  std::vector<RationalRow> track;
  for (std::size_t i = 0; i < m; ++i) {
    LinForm f = system.relations[i].form;
    for (const auto& [name, value] : given) f = f.substitute(name, LinForm(value));
    rows.push_back(columns.to_row(f));
    RationalRow t(m, Rational(0));
    t[i] = 1;
    track.push_back(std::move(t));
  }
  const auto pivots = rref(rows, &track, unknown.size());

  for (std::size_t i = pivots.size(); i < rows.size(); ++i) {
    // Zero on every unknown but with a nonzero constant: 0 = c.
    std::vector<std::pair<std::string, Rational>> combo;
    for (std::size_t j = 0; j < m; ++j) {
      if (track[i][j] != 0) combo.emplace_back(system.relations[j].name, track[i][j]);
    }
    result.status = SolveStatus::Infeasible;
    result.certificate = combination_text(combo) + " reduces to 0 = " + to_string(rows[i].back());
    return result;
  }

  std::vector<bool> is_pivot(unknown.size(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < unknown.size(); ++c) {
    if (!is_pivot[c]) result.free_symbols.push_back(unknown[c]);
  }
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    bool determined = true;
    for (std::size_t c = 0; c < unknown.size(); ++c) {
      if (!is_pivot[c] && rows[i][c] != 0) determined = false;
    }
    if (!determined) continue;
    const std::string& name = unknown[pivots[i]];
    const Rational value = -rows[i].back();
    result.determined.emplace(name, value);
    if (value < 0) {
      result.status = SolveStatus::Infeasible;
      result.certificate = name + " = " + to_string(value) + " < 0";
      return result;
    }
    if (!is_integer(value)) {
      result.status = SolveStatus::Infeasible;
      result.certificate = name + " = " + to_string(value) + " is not an integer";
      return result;
    }
  }

  if (!result.free_symbols.empty() || result.determined.size() < names.size()) {
    result.status = SolveStatus::Underdetermined;
    return result;
  }
  InvariantSet set(d);
  set.set_name("completion by solve_partial");
  for (const auto& [name, value] : result.determined) set.set(name, value.get_num().get_si());
  result.status = SolveStatus::Complete;
  result.completion = std::move(set);
  return result;
}

bool is_sufficient(Order d, const std::vector<std::string>& inputs) {
  for (const auto& in : inputs) sym(d, in);
  std::vector<std::string> rest;
  for (const auto& n : names_of(d)) {
    if (std::find(inputs.begin(), inputs.end(), n) == inputs.end()) rest.push_back(n);
  }
  if (rest.empty()) return true;
  LinearSpan span(rest);
  std::vector<RationalRow> rows;
  for (const auto& r : full_system(d).relations) {
    LinForm f;
    for (const auto& [name, c] : r.form.terms()) {
      if (std::find(rest.begin(), rest.end(), name) != rest.end()) f += LinForm::symbol(name, c);
    }
    RationalRow row = span.to_row(f);
    row.pop_back();
    rows.push_back(std::move(row));
  }
  return rref(rows).size() == rest.size();
}

std::vector<std::vector<std::string>> minimal_sufficient_sets(Order d) {
  const auto names = names_of(d);
  const std::size_t n = names.size();
  LinearSpan span(names);
  std::vector<RationalRow> rows;
  for (const auto& r : full_system(d).relations) {
    RationalRow row = span.to_row(r.form);
    row.pop_back();
    rows.push_back(std::move(row));
  }
  std::vector<RationalRow> reduced = rows;
  const std::size_t rank = rref(reduced).size();
  // Minimal sufficient sets are complements of column bases.
  std::vector<std::vector<std::string>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(rank), true);
  do {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) cols.push_back(i);
    }
    if (column_rank(reduced, cols) != rank) continue;
    std::vector<std::string> inputs;
    for (std::size_t i = 0; i < n; ++i) {
      if (!pick[i]) inputs.push_back(names[i]);
    }
    out.push_back(std::move(inputs));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<SufficiencyClaim> check_stated_sufficiency() {
  const Order d = Order::Four;
  std::vector<SufficiencyClaim> out;
  for (const char* rm : {"r", "m"}) {
    for (const char* n : {"n1", "n2"}) {
      for (const char* ab : {"a", "b"}) {
        SufficiencyClaim claim;
        claim.inputs = {"k", "gD", rm, n, ab};
        claim.sufficient = is_sufficient(d, claim.inputs);
        if (claim.sufficient) {
          for (const auto& drop : claim.inputs) {
            std::vector<std::string> fewer;
            for (const auto& x : claim.inputs) {
              if (x != drop) fewer.push_back(x);
            }
            if (is_sufficient(d, fewer)) claim.redundant.push_back(drop);
          }
        }
        out.push_back(std::move(claim));
      }
    }
  }
  return out;
}

std::vector<AliasHypothesis> alias_hypotheses(Order d) {
  auto s = [d](std::string_view name) { return sym(d, name); };
  switch (d) {
    case Order::Six:
      return {{"w free", {}}, {"w := nprime", {{"w", s("nprime")}}}, {"w := npts", {{"w", s("npts")}}}};
    case Order::Four:
      return {{"gFix4 free", {}},
              {"gFix4 := gD", {{"gFix4", s("gD")}}},
              {"gFix4 := gqD", {{"gFix4", s("gqD")}}},
              {"gFix4 := 0", {{"gFix4", LinForm(0)}}},
              {"gFix4 := gD, gqD := gD", {{"gFix4", s("gD")}, {"gqD", s("gD")}}}};
    default:
      return {{"none", {}}};
  }
}

AliasHypothesis recorded_hypothesis(Order d) {
  const auto all = alias_hypotheses(d);
  switch (d) {
    case Order::Six: return all[1];
    case Order::Four: return all[4];
    default: return all[0];
  }
}

Derivation derive_relations_from_euler(Order d, int nmax, const AliasHypothesis& hypothesis) {
  if (nmax < 1) throw UsageError("nmax must be >= 1");
  if (nmax > kMaxOrbifoldLevel) throw ResourceError("level too large for orbifold enumeration");
  const auto names = names_of(d);
  const auto known = known_relations(d);
  const auto derived = euler_derived_names(d);
  auto apply = [&](const LinForm& f) { return f.substitute(hypothesis.substitution); };

  Derivation out;
  out.order = d;
  out.nmax = nmax;
  out.hypothesis = hypothesis;
  out.basis.order = d;

  LinearSpan base(names);
  for (const auto& r : known.relations) {
    if (std::find(derived.begin(), derived.end(), r.name) != derived.end()) continue;
    base.add(apply(r.form), r.name);
    out.base_names.push_back(r.name);
  }
  out.base_rank = base.rank();

  LinearSpan span = base;
  LinearSpan running = base;
  for (int n = 1; n <= nmax; ++n) {
    LinForm diff = apply(euler_hodge_symbolic(d, n) - euler_orbifold(d, n));
    out.differences.push_back(diff);
    span.add(diff, "D" + std::to_string(n));
    if (!diff.is_zero() && !running.contains(diff)) {
      running.add(diff, "D" + std::to_string(n));
      out.new_relations.push_back(diff.primitive(names));
    }
  }
  out.span_rank = span.rank();
  out.adds_nothing = out.span_rank == out.base_rank;
  const auto basis = span.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.basis.relations.push_back({"B" + std::to_string(i + 1), basis[i], Tag::EulerDerived, {}});
  }

  if (derived.empty()) {
    for (std::size_t i = 0; i < out.differences.size(); ++i) {
      out.certificates.push_back(certify(base, "D" + std::to_string(i + 1), out.differences[i]));
    }
  } else {
    for (const auto& name : derived) out.certificates.push_back(certify(span, name, apply(known.at(name).form)));
  }

  const auto& spec = recurrence_spec(d);
  for (std::size_t i = 1; i < spec.initial.size(); ++i) {
    const int level = static_cast<int>(i) + 1;
    LinForm residual = apply(spec.initial[i] - euler_hodge_symbolic(d, level));
    CorollaryCheck check{level, residual, residual.is_zero(), false};
    check.explained = check.identical || span.contains(residual);
    out.corollary.push_back(std::move(check));
  }
  return out;
}

Derivation derive_relations_from_euler(Order d, int nmax) {
  return derive_relations_from_euler(d, nmax, recorded_hypothesis(d));
}

}  // namespace k3cy
