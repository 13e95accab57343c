#include "k3cy/render.hpp"

#include <map>
#include <sstream>

namespace k3cy {

Json to_json(const Integer& z) {
  if (fits_int64(z)) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json to_json(const Rational& q) {
  if (is_integer(q)) return to_json(q.get_num());
  return Json{{"num", to_json(q.get_num())}, {"den", to_json(q.get_den())}};
}

Json to_json(const LinForm& f, Order d) {
  Json terms = Json::object();
  for (const auto& [name, c] : f.terms()) terms[name] = to_json(c);
  return Json{{"constant", to_json(f.constant())},
              {"terms", terms},
              {"text", f.to_string(invariant_names(d))}};
}

Json to_json(const HodgeDiamond& diamond, const ShapeReport& shape) {
  Json h = Json::array();
  for (const auto& row : diamond.grid()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    h.push_back(r);
  }
  Json checks = Json::object();
  for (const auto& c : shape.checks) {
    Json v = Json::array();
    for (const auto& [p, q] : c.violations) v.push_back(Json::array({p, q}));
    checks[c.name] = Json{{"pass", c.pass}, {"message", c.message}, {"violations", v}};
  }
  return Json{{"dim", diamond.dim()}, {"h", h}, {"checks", checks}, {"pass", shape.pass()}};
}

Json to_json(const EulerReport& report) {
  Json routes = Json::object();
  for (const auto& rv : report.routes) {
    Json entry = Json::object();
    if (rv.value) {
      entry["value"] = to_json(*rv.value);
    } else {
      entry["error"] = rv.error;
    }
    routes[route_name(rv.route)] = entry;
  }
  Json agree = Json::object();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      agree[route_name(kAllRoutes[i]) + "/" + route_name(kAllRoutes[j])] = report.agree[i][j];
    }
  }
  return Json{{"order", to_int(report.order)},
              {"level", report.level},
              {"routes", routes},
              {"agree", agree},
              {"relation_consistent", report.relation_consistent},
              {"demanded_agreement_holds", report.demanded_agreement_holds}};
}

Json to_json(const SymbolicEulerReport& report) {
  Json values = Json::object();
  Json residuals = Json::object();
  for (std::size_t i = 0; i < 4; ++i) {
    values[route_name(kAllRoutes[i])] = to_json(report.values[i], report.order);
    for (std::size_t j = i + 1; j < 4; ++j) {
      residuals[route_name(kAllRoutes[i]) + "-" + route_name(kAllRoutes[j])] =
          to_json(report.residual[i][j], report.order);
    }
  }
  return Json{{"order", to_int(report.order)},
              {"level", report.level},
              {"values", values},
              {"residuals", residuals}};
}

Json to_json(const ValidationReport& report) {
  Json residuals = Json::object();
  for (const auto& r : report.residuals) {
    residuals[r.name] = Json{{"residual", to_json(r.residual)}, {"skipped", r.skipped}};
  }
  return Json{{"order", to_int(report.order)},
              {"pass", report.pass},
              {"failed", report.failed},
              {"notices", report.notices},
              {"residuals", residuals}};
}

Json to_json(const SolveResult& result) {
  Json determined = Json::object();
  for (const auto& [name, v] : result.determined) determined[name] = to_json(v);
  Json doc{{"status", status_name(result.status)},
           {"rank", result.rank},
           {"symbol_count", result.symbol_count},
           {"determined", determined},
           {"free_symbols", result.free_symbols}};
  if (!result.certificate.empty()) doc["certificate"] = result.certificate;
  if (result.completion) doc["completion"] = Json::parse(serialize_invariants(*result.completion));
  return doc;
}

Json to_json(const Derivation& dv) {
  const Order d = dv.order;
  Json diffs = Json::array();
  for (const auto& f : dv.differences) diffs.push_back(to_json(f, d));
  Json basis = Json::array();
  for (const auto& r : dv.basis.relations) basis.push_back(to_json(r.form, d));
  Json fresh = Json::array();
  for (const auto& f : dv.new_relations) fresh.push_back(to_json(f, d));
  Json certs = Json::array();
  for (const auto& c : dv.certificates) {
    Json combo = Json::object();
    for (const auto& [label, coeff] : c.combination) combo[label] = to_json(coeff);
    certs.push_back(Json{{"target", c.target},
                         {"form", to_json(c.form, d)},
                         {"member", c.member},
                         {"verified", c.verified},
                         {"combination", combo}});
  }
  Json corollary = Json::array();
  for (const auto& c : dv.corollary) {
    corollary.push_back(Json{{"level", c.level},
                             {"residual", to_json(c.residual, d)},
                             {"identical", c.identical},
                             {"explained", c.explained}});
  }
  Json hyp = Json::object();
  for (const auto& [name, f] : dv.hypothesis.substitution) hyp[name] = f.to_string(invariant_names(d));
  return Json{{"order", to_int(d)},
              {"nmax", dv.nmax},
              {"hypothesis", Json{{"name", dv.hypothesis.name}, {"substitution", hyp}}},
              {"differences", diffs},
              {"base", dv.base_names},
              {"base_rank", dv.base_rank},
              {"span_rank", dv.span_rank},
              {"adds_nothing", dv.adds_nothing},
              {"basis", basis},
              {"new_relations", fresh},
              {"certificates", certs},
              {"corollary", corollary}};
}

Json to_json(const std::vector<LefschetzRelation>& relations, Order d) {
  Json out = Json::array();
  for (const auto& r : relations) {
    out.push_back(Json{{"name", r.name},
                       {"power", r.power},
                       {"holomorphic", r.holomorphic},
                       {"form", to_json(r.form, d)}});
  }
  return out;
}

Json to_json(const TableComparison& cmp) {
  Json mism = Json::array();
  for (const auto& m : cmp.mismatches) {
    mism.push_back(Json{{"symbol", m.symbol.empty() ? "1" : m.symbol},
                        {"published", to_json(m.published)},
                        {"engine", to_json(m.engine)},
                        {"kind", m.suspected_misprint ? "suspected misprint" : "unexplained"}});
  }
  return Json{{"order", to_int(cmp.order)},
              {"level", cmp.level},
              {"published", to_json(cmp.published, cmp.order)},
              {"engine", to_json(cmp.engine, cmp.order)},
              {"mismatches", mism}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string latex_symbol(Order d, const std::string& name) {
  static const std::map<std::string, std::string> common = {
      {"alpha", "\\alpha"}, {"beta", "\\beta"},     {"l", "\\ell"},
      {"p25", "p_{(2,5)}"}, {"p34", "p_{(3,4)}"},   {"npts", "n"},
      {"nprime", "n'"},     {"Nprime", "N'"},       {"gD", "g(D)"},
      {"gG", "g(G)"},       {"gF1", "g(F_1)"},      {"gF2", "g(F_2)"},
      {"gC", "g(C)"},       {"n1", "n_1"},          {"n2", "n_2"},
      {"gqG", "g(G/\\alpha)"}, {"gqF1", "g(F_1/\\alpha)"}, {"gqF2", "g(F_2/\\alpha)"},
      {"gqD", "g(D/\\alpha)"}};
  if (d == Order::Four && name == "gFix4") return "g(G)";
  auto it = common.find(name);
  return it == common.end() ? name : it->second;
}

std::string latex(const LinForm& f, Order d) {
  auto coefficient = [](const Rational& c) -> std::string {
    Rational a = abs(c);
    if (a == 1) return "";
    if (is_integer(a)) return a.get_num().get_str() + " ";
    return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  };
  std::string out;
  for (const auto& name : ordered_symbols(f, invariant_names(d))) {
    const Rational c = f.coeff(name);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += coefficient(c) + latex_symbol(d, name);
  }
  const Rational& c0 = f.constant();
  if (c0 != 0 || out.empty()) {
    if (out.empty()) {
      out = to_string(c0);
    } else {
      Rational a = abs(c0);
      std::string v = is_integer(a) ? a.get_num().get_str()
                                    : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
      out += (c0 < 0 ? " - " : " + ") + v;
    }
  }
  return out;
}

std::string latex_relations(const std::vector<std::pair<std::string, LinForm>>& relations, Order d) {
  std::ostringstream os;
  os << "\\begin{align*}\n";
  for (std::size_t i = 0; i < relations.size(); ++i) {
    os << "  &" << latex(relations[i].second, d) << " = 0 && \\text{(" << relations[i].first << ")}";
    os << (i + 1 < relations.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{align*}\n";
  return os.str();
}

std::string render_diamond_text(const HodgeDiamond& diamond) {
  // Rows of constant p + q, centered, as the diamond is usually drawn.
  const int dim = diamond.dim();
  std::size_t width = 1;
  for (const auto& row : diamond.grid()) {
    for (const auto& v : row) width = std::max(width, v.get_str().size());
  }
  std::ostringstream os;
  for (int s = 2 * dim; s >= 0; --s) {
    std::vector<std::string> cells;
    for (int p = std::min(s, dim); p >= std::max(0, s - dim); --p) cells.push_back(diamond.at(p, s - p).get_str());
    const std::size_t pad = static_cast<std::size_t>(dim + 1 - static_cast<int>(cells.size())) * (width + 1) / 2;
    os << std::string(pad, ' ');
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ' ';
      os << std::string(width - cells[i].size(), ' ') << cells[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace k3cy
