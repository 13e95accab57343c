#include "k3cy/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "k3cy/render.hpp"

namespace k3cy {

namespace {

enum class Format { Text, Json, Latex };

struct Options {
  std::string format = "text";
  std::string input;
  int order = 0;
  int level = 0;
  bool strict = false;
  std::string route = "all";
  std::string given;
  int nmax = 6;
  std::string hypothesis = "recorded";
  bool minimal_sets = false;
};

struct Context {
  Options opt;
  Format format = Format::Text;
  std::ostream& out;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  throw UsageError("--format must be text, json or latex");
}

std::optional<Order> order_option(const Options& opt) {
  if (opt.order == 0) return std::nullopt;
  return order_from_int(opt.order);
}

Order require_order(const Options& opt) {
  auto d = order_option(opt);
  if (!d) throw UsageError("--order is required");
  return *d;
}

int require_level(const Options& opt) {
  if (opt.level < 1) throw UsageError("--level N (N >= 1) is required");
  return opt.level;
}

InvariantSet load_input(const Options& opt) {
  if (opt.input.empty()) throw UsageError("--input FILE is required");
  std::ifstream in(opt.input);
  if (!in) throw UsageError("cannot read input file '" + opt.input + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  InvariantSet set = parse_invariants(buf.str());
  if (auto d = order_option(opt); d && *d != set.order()) {
    throw UsageError("--order " + std::to_string(opt.order) + " does not match the input order " +
                     std::to_string(to_int(set.order())));
  }
  return set;
}

Assignment parse_given(Order d, const std::string& text) {
  Assignment given;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--given expects name=value pairs, got '" + item + "'");
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    sym(d, name);
    Rational q;
    if (value.empty() || q.set_str(value, 10) != 0 || q.get_den() == 0) {
      throw UsageError("bad value for " + name + ": '" + value + "'");
    }
    q.canonicalize();
    given[name] = q;
  }
  return given;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string title(const InvariantSet& set) { return set.name().empty() ? std::string("input") : set.name(); }

// ---------------------------------------------------------------- diamond

int cmd_diamond(Context& ctx) {
  const InvariantSet set = load_input(ctx.opt);
  const Order d = set.order();
  const int n = require_level(ctx.opt);
  HodgeDiamond diamond = hodge_diamond(d, n, set);
  ShapeReport shape = verify_cy_shape(diamond);
  switch (ctx.format) {
    case Format::Json: {
      Json doc = to_json(diamond, shape);
      doc["order"] = to_int(d);
      doc["level"] = n;
      ctx.out << dump(doc);
      break;
    }
    case Format::Latex: {
      ctx.out << "\\begin{array}{" << std::string(static_cast<std::size_t>(diamond.dim() + 1), 'c') << "}\n";
      for (int p = 0; p <= diamond.dim(); ++p) {
        ctx.out << "  ";
        for (int q = 0; q <= diamond.dim(); ++q) ctx.out << (q ? " & " : "") << diamond.at(p, q).get_str();
        ctx.out << (p < diamond.dim() ? " \\\\\n" : "\n");
      }
      ctx.out << "\\end{array}\n";
      break;
    }
    case Format::Text: {
      ctx.out << "Hodge diamond of Y_{" << to_int(d) << "," << n << "} (" << title(set) << "), dimension "
              << diamond.dim() << "\n\n"
              << render_diamond_text(diamond) << "\n";
      ctx.out << "Calabi-Yau shape: " << (shape.pass() ? "pass" : "FAIL") << "\n";
      for (const auto& c : shape.checks) {
        ctx.out << "  " << std::left << std::setw(16) << c.name << (c.pass ? "pass" : "FAIL");
        if (!c.pass) ctx.out << "  " << c.message;
        ctx.out << "\n";
      }
      break;
    }
  }
  return shape.pass() ? kExitOk : kExitDomain;
}

// ---------------------------------------------------------------- euler

std::vector<Route> selected_routes(const Options& opt) {
  if (opt.route == "all") return {kAllRoutes.begin(), kAllRoutes.end()};
  return {route_from_name(opt.route)};
}

int euler_symbolic(Context& ctx, Order d, int n, const std::vector<Route>& routes) {
  std::map<Route, LinForm> values;
  for (Route r : routes) {
    switch (r) {
      case Route::Diamond: values[r] = euler_hodge_symbolic(d, n); break;
      case Route::Recurrence: values[r] = euler_recurrence(d, n); break;
      case Route::ClosedForm: values[r] = euler_closed_form(d, n); break;
      case Route::Orbifold: values[r] = euler_orbifold(d, n); break;
    }
  }
  switch (ctx.format) {
    case Format::Json: {
      Json v = Json::object();
      for (const auto& [r, f] : values) v[route_name(r)] = to_json(f, d);
      ctx.out << dump(Json{{"order", to_int(d)}, {"level", n}, {"symbolic", true}, {"values", v}});
      break;
    }
    case Format::Latex: {
      std::vector<std::pair<std::string, LinForm>> rows;
      ctx.out << "\\begin{align*}\n";
      std::size_t i = 0;
      for (const auto& [r, f] : values) {
        ctx.out << "  e_{\\mathrm{" << route_name(r) << "}}(Y_{" << to_int(d) << "," << n << "}) &= " << latex(f, d)
                << (++i < values.size() ? " \\\\\n" : "\n");
      }
      ctx.out << "\\end{align*}\n";
      break;
    }
    case Format::Text:
      ctx.out << "e(Y_{" << to_int(d) << "," << n << "}), symbolic\n";
      for (const auto& [r, f] : values) {
        ctx.out << "  " << std::left << std::setw(11) << route_name(r) << f.to_string(invariant_names(d)) << "\n";
      }
      break;
  }
  return kExitOk;
}

void render_numeric_report(Context& ctx, const EulerReport& report, const InvariantSet& set) {
  const Order d = report.order;
  const int n = report.level;
  switch (ctx.format) {
    case Format::Json: ctx.out << dump(to_json(report)); break;
    case Format::Latex: {
      ctx.out << "\\begin{align*}\n";
      for (std::size_t i = 0; i < report.routes.size(); ++i) {
        const auto& rv = report.routes[i];
        ctx.out << "  e_{\\mathrm{" << route_name(rv.route) << "}}(Y_{" << to_int(d) << "," << n << "}) &= "
                << (rv.value ? to_string(*rv.value) : "\\text{n/a}")
                << (i + 1 < report.routes.size() ? " \\\\\n" : "\n");
      }
      ctx.out << "\\end{align*}\n";
      break;
    }
    case Format::Text: {
      ctx.out << "e(Y_{" << to_int(d) << "," << n << "}) for " << title(set) << "\n";
      for (const auto& rv : report.routes) {
        ctx.out << "  " << std::left << std::setw(11) << route_name(rv.route)
                << (rv.value ? to_string(*rv.value) : "error: " + rv.error) << "\n";
      }
      ctx.out << "agreement:\n";
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
          ctx.out << "  " << route_name(kAllRoutes[i]) << " = " << route_name(kAllRoutes[j]) << ": "
                  << yes_no(report.agree[i][j]) << "\n";
        }
      }
      ctx.out << "relation-consistent: " << yes_no(report.relation_consistent) << "\n"
              << "demanded agreement: " << (report.demanded_agreement_holds ? "holds" : "VIOLATED") << "\n";
      break;
    }
  }
}

int cmd_euler(Context& ctx) {
  const auto routes = selected_routes(ctx.opt);
  const int n = require_level(ctx.opt);
  if (ctx.opt.input.empty()) return euler_symbolic(ctx, require_order(ctx.opt), n, routes);

  const InvariantSet set = load_input(ctx.opt);
  const Order d = set.order();
  if (routes.size() == 1) {
    Rational v;
    switch (routes.front()) {
      case Route::Diamond: v = Rational(euler_from_diamond(hodge_diamond(d, n, set))); break;
      case Route::Recurrence: v = euler_recurrence(d, n, set); break;
      case Route::ClosedForm: v = euler_closed_form(d, n, set); break;
      case Route::Orbifold: v = euler_orbifold(d, n, set); break;
    }
    const std::string name = route_name(routes.front());
    switch (ctx.format) {
      case Format::Json:
        ctx.out << dump(Json{{"order", to_int(d)}, {"level", n}, {"route", name}, {"value", to_json(v)}});
        break;
      case Format::Latex:
        ctx.out << "e(Y_{" << to_int(d) << "," << n << "}) = " << to_string(v) << "\n";
        break;
      case Format::Text:
        ctx.out << "e(Y_{" << to_int(d) << "," << n << "}) via " << name << ": " << to_string(v) << "\n";
        break;
    }
    return kExitOk;
  }
  EulerReport report = crosscheck(d, n, set);
  render_numeric_report(ctx, report, set);
  return report.demanded_agreement_holds ? kExitOk : kExitDomain;
}

int cmd_crosscheck(Context& ctx) {
  const int n = require_level(ctx.opt);
  if (!ctx.opt.input.empty()) {
    const InvariantSet set = load_input(ctx.opt);
    EulerReport report = crosscheck(set.order(), n, set);
    render_numeric_report(ctx, report, set);
    return report.demanded_agreement_holds ? kExitOk : kExitDomain;
  }
  const Order d = require_order(ctx.opt);
  SymbolicEulerReport report = crosscheck_symbolic(d, n);
  const auto names = invariant_names(d);
  switch (ctx.format) {
    case Format::Json: ctx.out << dump(to_json(report)); break;
    case Format::Latex: {
      std::vector<std::pair<std::string, LinForm>> rows;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
          rows.emplace_back(route_name(kAllRoutes[i]) + " - " + route_name(kAllRoutes[j]),
                            report.residual[i][j]);
        }
      }
      ctx.out << latex_relations(rows, d);
      break;
    }
    case Format::Text:
      ctx.out << "e(Y_{" << to_int(d) << "," << n << "}), symbolic cross-check\n";
      for (std::size_t i = 0; i < 4; ++i) {
        ctx.out << "  " << std::left << std::setw(11) << route_name(kAllRoutes[i])
                << report.values[i].to_string(names) << "\n";
      }
      ctx.out << "residuals:\n";
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
          ctx.out << "  " << route_name(kAllRoutes[i]) << " - " << route_name(kAllRoutes[j]) << ": "
                  << report.residual[i][j].to_string(names) << "\n";
        }
      }
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- validate

void render_validation_text(std::ostream& os, const ValidationReport& report, const RelationSystem* system) {
  const auto names = invariant_names(report.order);
  for (const auto& r : report.residuals) {
    os << "  " << std::left << std::setw(12) << r.name;
    if (r.skipped) {
      os << "skipped";
    } else {
      os << (r.residual == 0 ? "ok" : "FAIL  residual " + to_string(r.residual));
    }
    if (system && system->contains(r.name)) os << "   [" << system->at(r.name).form.to_string(names) << " = 0]";
    os << "\n";
  }
  for (const auto& n : report.notices) os << "  note: " << n << "\n";
}

int cmd_validate(Context& ctx) {
  const InvariantSet set = load_input(ctx.opt);
  const Order d = set.order();
  ValidationReport report = validate(set);
  std::optional<ValidationReport> rh;
  if (d == Order::Six) rh = riemann_hurwitz_check(set);
  const bool pass = report.pass && (!rh || rh->pass);
  const RelationSystem system = full_system(d);
  switch (ctx.format) {
    case Format::Json: {
      Json doc = to_json(report);
      if (rh) doc["riemann_hurwitz"] = to_json(*rh);
      doc["pass"] = pass;
      ctx.out << dump(doc);
      break;
    }
    case Format::Latex: {
      std::vector<std::pair<std::string, LinForm>> rows;
      for (const auto& r : system.relations) rows.emplace_back(r.name, r.form);
      ctx.out << latex_relations(rows, d);
      for (const auto& r : report.residuals) {
        ctx.out << "% " << r.name << ": " << (r.skipped ? "skipped" : "residual " + to_string(r.residual)) << "\n";
      }
      break;
    }
    case Format::Text:
      ctx.out << "Relations of order " << to_int(d) << " at " << title(set) << ": "
              << (report.pass ? "pass" : "FAIL") << "\n";
      render_validation_text(ctx.out, report, &system);
      if (rh) {
        ctx.out << "Riemann-Hurwitz: " << (rh->pass ? "pass" : "FAIL") << "\n";
        render_validation_text(ctx.out, *rh, nullptr);
        for (const auto& f : rh->failed) {
          if (f.find("integrality") != std::string::npos) ctx.out << "  FAIL " << f << "\n";
        }
      }
      break;
  }
  return pass ? kExitOk : kExitDomain;
}

// ---------------------------------------------------------------- solve

int cmd_solve(Context& ctx) {
  const Order d = require_order(ctx.opt);
  const Assignment given = parse_given(d, ctx.opt.given);
  SolveResult result = solve_partial(d, given);
  std::vector<std::vector<std::string>> minimal;
  std::vector<SufficiencyClaim> claims;
  if (ctx.opt.minimal_sets) {
    minimal = minimal_sufficient_sets(d);
    if (d == Order::Four) claims = check_stated_sufficiency();
  }
  switch (ctx.format) {
    case Format::Json: {
      Json doc = to_json(result);
      doc["order"] = to_int(d);
      if (ctx.opt.minimal_sets) {
        doc["minimal_sufficient_sets"] = minimal;
        Json c = Json::array();
        for (const auto& claim : claims) {
          c.push_back(Json{{"inputs", claim.inputs}, {"sufficient", claim.sufficient}, {"redundant", claim.redundant}});
        }
        if (!claims.empty()) doc["stated_sufficiency"] = c;
      }
      ctx.out << dump(doc);
      break;
    }
    case Format::Latex: {
      ctx.out << "\\begin{align*}\n";
      std::size_t i = 0;
      for (const auto& [name, v] : result.determined) {
        ctx.out << "  " << latex_symbol(d, name) << " &= " << to_string(v)
                << (++i < result.determined.size() ? " \\\\\n" : "\n");
      }
      ctx.out << "\\end{align*}\n";
      break;
    }
    case Format::Text: {
      ctx.out << "solve, order " << to_int(d) << ": " << status_name(result.status) << "\n"
              << "  rank " << result.rank << " over " << result.symbol_count << " symbols\n";
      if (!result.certificate.empty()) ctx.out << "  certificate: " << result.certificate << "\n";
      for (const auto& name : invariant_names(d)) {
        auto it = result.determined.find(name);
        if (it != result.determined.end()) {
          ctx.out << "  " << std::left << std::setw(8) << name << to_string(it->second)
                  << (given.contains(name) ? "  (given)" : "") << "\n";
        }
      }
      if (!result.free_symbols.empty()) {
        ctx.out << "  free:";
        for (const auto& f : result.free_symbols) ctx.out << " " << f;
        ctx.out << "\n";
      }
      if (ctx.opt.minimal_sets) {
        ctx.out << "minimal sufficient input sets (" << minimal.size() << ", each of size "
                << (minimal.empty() ? 0 : minimal.front().size()) << "):\n";
        for (const auto& s : minimal) {
          ctx.out << "  {";
          for (std::size_t i = 0; i < s.size(); ++i) ctx.out << (i ? ", " : "") << s[i];
          ctx.out << "}\n";
        }
        if (!claims.empty()) ctx.out << "stated five-input sets:\n";
        for (const auto& c : claims) {
          ctx.out << "  {";
          for (std::size_t i = 0; i < c.inputs.size(); ++i) ctx.out << (i ? ", " : "") << c.inputs[i];
          ctx.out << "} sufficient: " << yes_no(c.sufficient) << "; individually redundant:";
          for (const auto& r : c.redundant) ctx.out << " " << r;
          ctx.out << "\n";
        }
      }
      break;
    }
  }
  if (result.status == SolveStatus::Infeasible) return kExitDomain;
  if (result.status == SolveStatus::Underdetermined && ctx.opt.strict) return kExitDomain;
  return kExitOk;
}

// ---------------------------------------------------------------- derive

struct HypothesisSummary {
  std::string name;
  std::vector<std::pair<std::string, bool>> membership;
  std::vector<std::pair<int, bool>> corollary_identical;
};

int cmd_derive(Context& ctx) {
  const Order d = require_order(ctx.opt);
  const int nmax = ctx.opt.nmax;
  const auto names = invariant_names(d);
  Derivation dv = derive_relations_from_euler(d, nmax);
  const auto lefschetz = derive_lefschetz_relations(d);

  std::vector<HypothesisSummary> hyps;
  if (ctx.opt.hypothesis == "all") {
    for (const auto& h : alias_hypotheses(d)) {
      Derivation alt = h.name == dv.hypothesis.name ? dv : derive_relations_from_euler(d, nmax, h);
      HypothesisSummary s{h.name, {}, {}};
      for (const auto& c : alt.certificates) s.membership.emplace_back(c.target, c.member);
      for (const auto& c : alt.corollary) s.corollary_identical.emplace_back(c.level, c.identical);
      hyps.push_back(std::move(s));
    }
  } else if (ctx.opt.hypothesis != "recorded") {
    throw UsageError("--hypothesis must be recorded or all");
  }
  std::vector<TableComparison> tables;
  if (d == Order::Four || d == Order::Six) {
    for (auto& t : compare_stringy_tables()) {
      if (t.order == d) tables.push_back(std::move(t));
    }
  }

  switch (ctx.format) {
    case Format::Json: {
      Json doc = to_json(dv);
      doc["lefschetz"] = to_json(lefschetz, d);
      Json h = Json::array();
      for (const auto& s : hyps) {
        Json mem = Json::object();
        for (const auto& [t, m] : s.membership) mem[t] = m;
        Json cor = Json::object();
        for (const auto& [lvl, ok] : s.corollary_identical) cor[std::to_string(lvl)] = ok;
        h.push_back(Json{{"name", s.name}, {"member", mem}, {"corollary_identical", cor}});
      }
      if (!hyps.empty()) doc["hypotheses"] = h;
      Json t = Json::array();
      for (const auto& c : tables) t.push_back(to_json(c));
      if (!tables.empty()) doc["published_tables"] = t;
      ctx.out << dump(doc);
      break;
    }
    case Format::Latex: {
      std::vector<std::pair<std::string, LinForm>> rows;
      for (const auto& r : lefschetz) rows.emplace_back(r.name, r.form);
      for (std::size_t i = 0; i < dv.new_relations.size(); ++i) {
        rows.emplace_back("new " + std::to_string(i + 1), dv.new_relations[i]);
      }
      for (const auto& c : dv.certificates) rows.emplace_back(c.target + (c.member ? ", in span" : ", NOT in span"), c.form);
      ctx.out << latex_relations(rows, d);
      break;
    }
    case Format::Text: {
      auto& os = ctx.out;
      os << "Relations of order " << to_int(d) << " from Euler characteristics, n = 1.." << nmax << "\n"
         << "alias hypothesis: " << dv.hypothesis.name << "\n"
         << "base relations:";
      for (const auto& b : dv.base_names) os << " " << b;
      os << "  (rank " << dv.base_rank << ")\n"
         << "rank with D_1..D_" << nmax << ": " << dv.span_rank
         << (dv.adds_nothing ? "  (no new relations)" : "") << "\n";
      for (std::size_t i = 0; i < dv.differences.size(); ++i) {
        os << "  D" << i + 1 << " = " << dv.differences[i].to_string(names) << "\n";
      }
      if (!dv.new_relations.empty()) {
        os << "new relations beyond the base:\n";
        for (const auto& f : dv.new_relations) os << "  " << f.to_string(names) << " = 0\n";
      }
      os << "membership certificates:\n";
      for (const auto& c : dv.certificates) {
        os << "  " << std::left << std::setw(4) << c.target << (c.member ? "in span" : "NOT in span");
        if (c.member) {
          os << (c.verified ? " (verified)" : " (VERIFICATION FAILED)") << ": ";
          for (std::size_t i = 0; i < c.combination.size(); ++i) {
            os << (i ? " + " : "") << "(" << to_string(c.combination[i].second) << ")*" << c.combination[i].first;
          }
        }
        os << "\n";
      }
      os << "recurrence initial values vs Hodge route:\n";
      for (const auto& c : dv.corollary) {
        os << "  n=" << c.level << ": "
           << (c.identical ? "identical" : (c.explained ? "equal modulo relations" : "UNEXPLAINED"));
        if (!c.identical) os << "  (difference " << c.residual.to_string(names) << ")";
        os << "\n";
      }
      os << "Lefschetz relations:\n";
      for (const auto& r : lefschetz) os << "  " << std::left << std::setw(5) << r.name << r.form.to_string(names) << " = 0\n";
      if (!hyps.empty()) {
        os << "alias hypotheses:\n";
        for (const auto& s : hyps) {
          os << "  " << std::left << std::setw(24) << s.name;
          for (const auto& [t, m] : s.membership) os << " " << t << (m ? ":in" : ":out");
          os << "  corollary identical at n =";
          bool any = false;
          for (const auto& [lvl, ok] : s.corollary_identical) {
            if (ok) {
              os << " " << lvl;
              any = true;
            }
          }
          if (!any) os << " none";
          os << "\n";
        }
      }
      if (!tables.empty()) {
        os << "published stringy Euler numbers vs orbifold route:\n";
        for (const auto& t : tables) {
          os << "  n=" << t.level << ": " << (t.mismatches.empty() ? "match" : "");
          for (const auto& m : t.mismatches) {
            os << "[" << (m.symbol.empty() ? "1" : m.symbol) << ": published " << to_string(m.published)
               << ", computed " << to_string(m.engine) << (m.suspected_misprint ? ", suspected misprint" : ", UNEXPLAINED")
               << "] ";
          }
          os << "\n";
        }
      }
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Hodge numbers, Euler characteristics and invariant relations of generalized Borcea-Voisin "
               "Calabi-Yau manifolds"};
  app.name("k3cy");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--input", opt.input, "invariant document (JSON)");
  app.add_option("--order", opt.order, "automorphism order 2, 3, 4 or 6");
  app.add_option("--level", opt.level, "n, so that Y_{d,n} has dimension n + 1");
  app.add_flag("--strict", opt.strict, "treat an underdetermined solve as a failure");

  auto* diamond = app.add_subcommand("diamond", "Hodge diamond of Y_{d,n}");
  auto* euler = app.add_subcommand("euler", "Euler characteristic by one or all routes");
  euler->add_option("--route", opt.route, "diamond, recurrence, closed, orbifold or all");
  auto* validate_cmd = app.add_subcommand("validate", "check an invariant set against the relation system");
  auto* solve = app.add_subcommand("solve", "complete a partial assignment using the relation system");
  solve->add_option("--given", opt.given, "comma-separated name=value pairs");
  solve->add_flag("--minimal-sets", opt.minimal_sets, "list all minimal sufficient input sets");
  auto* derive = app.add_subcommand("derive", "derive relations by comparing Euler characteristics");
  derive->add_option("--nmax", opt.nmax, "largest level compared (<= 8)");
  derive->add_option("--hypothesis", opt.hypothesis, "recorded or all");
  auto* cross = app.add_subcommand("crosscheck", "cross-check all four Euler routes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "k3cy: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Context ctx{opt, parse_format(opt.format), out};
    if (diamond->parsed()) return cmd_diamond(ctx);
    if (euler->parsed()) return cmd_euler(ctx);
    if (validate_cmd->parsed()) return cmd_validate(ctx);
    if (solve->parsed()) return cmd_solve(ctx);
    if (derive->parsed()) return cmd_derive(ctx);
    if (cross->parsed()) return cmd_crosscheck(ctx);
    err << "k3cy: no subcommand\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "k3cy: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "k3cy: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InconsistentInvariants& e) {
    err << "k3cy: inconsistent invariants at (p,q) = (" << e.p() << "," << e.q() << "): " << e.what() << "\n";
    return kExitDomain;
  } catch (const ValidationError& e) {
    err << "k3cy: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "k3cy: " << e.what() << "\n";
    return kExitDomain;
  } catch (const UnboundSymbol& e) {
    err << "k3cy: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "k3cy: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace k3cy
