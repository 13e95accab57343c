#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "k3cy/euler.hpp"
#include "k3cy/hodge.hpp"
#include "k3cy/lefschetz.hpp"
#include "k3cy/reference_tables.hpp"
#include "k3cy/relations.hpp"

namespace k3cy {

using Json = nlohmann::json;

/// Integers as JSON numbers (strings when they exceed 64 bits), other
/// rationals as {"den": ..., "num": ...}.
Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const LinForm& f, Order d);

Json to_json(const HodgeDiamond& diamond, const ShapeReport& shape);
Json to_json(const EulerReport& report);
Json to_json(const SymbolicEulerReport& report);
Json to_json(const ValidationReport& report);
Json to_json(const SolveResult& result);
Json to_json(const Derivation& derivation);
Json to_json(const std::vector<LefschetzRelation>& relations, Order d);
Json to_json(const TableComparison& cmp);

/// Canonical text of a JSON document: sorted keys, two-space indent.
std::string dump(const Json& doc);

/// Display form of an invariant symbol, e.g. gqG -> g(G/\alpha).
std::string latex_symbol(Order d, const std::string& name);
std::string latex(const LinForm& f, Order d);

/// "&<form> = 0" lines of an align* environment.
std::string latex_relations(const std::vector<std::pair<std::string, LinForm>>& relations, Order d);

std::string render_diamond_text(const HodgeDiamond& diamond);

}  // namespace k3cy
