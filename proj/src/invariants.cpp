#include "k3cy/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace k3cy {

namespace {

const std::vector<std::string> kNames2 = {"r", "m", "N", "Nprime"};
const std::vector<std::string> kNames3 = {"r", "m", "h", "k", "gC"};
const std::vector<std::string> kNames4 = {"r", "m", "N", "k", "b", "a", "gD", "gqD", "gFix4", "n1", "n2"};
const std::vector<std::string> kNames6 = {"r",   "m",   "alpha", "beta",   "l",   "k",    "N",
                                          "p25", "p34", "npts",  "nprime", "a",   "b",    "gD",
                                          "gG",  "gF1", "gF2",   "gqG",    "gqF1", "gqF2", "w"};

}  // namespace

Order order_from_int(long d) {
  switch (d) {
    case 2: return Order::Two;
    case 3: return Order::Three;
    case 4: return Order::Four;
    case 6: return Order::Six;
    default: throw UsageError("order must be one of 2,3,4,6 (got " + std::to_string(d) + ")");
  }
}

std::span<const std::string> invariant_names(Order d) {
  switch (d) {
    case Order::Two: return kNames2;
    case Order::Three: return kNames3;
    case Order::Four: return kNames4;
    case Order::Six: return kNames6;
  }
  throw InternalError("bad order");
}

bool is_invariant_name(Order d, std::string_view name) {
  auto names = invariant_names(d);
  return std::find(names.begin(), names.end(), name) != names.end();
}

LinForm sym(Order d, std::string_view name, const Rational& coeff) {
  if (!is_invariant_name(d, name)) {
    throw UsageError("'" + std::string(name) + "' is not an order-" + std::to_string(to_int(d)) +
                     " invariant");
  }
  return LinForm::symbol(name, coeff);
}

LinForm form(Order d, std::string_view text) {
  LinForm f = parse_linform(text);
  for (const auto& [name, c] : f.terms()) sym(d, name);
  return f;
}

InvariantSet::InvariantSet(Order d) : order_(d), values_(invariant_names(d).size(), 0) {}

InvariantSet::InvariantSet(Order d, const std::map<std::string, long, std::less<>>& values)
    : InvariantSet(d) {
  for (const auto& [k, v] : values) set(k, v);
}

std::size_t InvariantSet::index_of(std::string_view symbol) const {
  auto names = invariant_names(order_);
  auto it = std::find(names.begin(), names.end(), symbol);
  if (it == names.end()) {
    throw UsageError("unknown order-" + std::to_string(to_int(order_)) + " invariant '" +
                     std::string(symbol) + "'");
  }
  return static_cast<std::size_t>(it - names.begin());
}

long InvariantSet::get(std::string_view symbol) const { return values_[index_of(symbol)]; }

void InvariantSet::set(std::string_view symbol, long value) {
  if (value < 0) throw ValidationError(std::string(symbol) + " must be >= 0");
  values_[index_of(symbol)] = value;
}

Assignment InvariantSet::assignment() const {
  Assignment a;
  auto names = invariant_names(order_);
  for (std::size_t i = 0; i < names.size(); ++i) a.emplace(names[i], Rational(values_[i]));
  return a;
}

InvariantSet parse_invariants(std::string_view document) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed invariant document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("invariant document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "order" && key != "name" && key != "invariants") {
      throw ValidationError("unknown top-level key '" + key + "'");
    }
  }
  if (!doc.contains("order") || !doc["order"].is_number_integer()) {
    throw ParseError("\"order\" must be an integer");
  }
  Order d;
  try {
    d = order_from_int(doc["order"].get<long>());
  } catch (const UsageError& e) {
    throw ValidationError(e.what());
  }
  if (!doc.contains("invariants") || !doc["invariants"].is_object()) {
    throw ParseError("\"invariants\" must be an object");
  }
  InvariantSet set(d);
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    set.set_name(doc["name"].get<std::string>());
  }
  std::vector<std::string> seen;
  for (const auto& [key, value] : doc["invariants"].items()) {
    if (!is_invariant_name(d, key)) {
      throw ValidationError("unknown invariant '" + key + "' for order " + std::to_string(to_int(d)));
    }
    if (!value.is_number_integer()) throw ParseError("invariant '" + key + "' must be an integer");
    set.set(key, value.get<long>());
    seen.push_back(key);
  }
  std::vector<std::string> missing;
  for (const auto& name : invariant_names(d)) {
    if (std::find(seen.begin(), seen.end(), name) == seen.end()) missing.push_back(name);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw ValidationError("missing invariants: " + list);
  }
  return set;
}

std::string serialize_invariants(const InvariantSet& set) {
  nlohmann::json doc;
  doc["order"] = to_int(set.order());
  if (!set.name().empty()) doc["name"] = set.name();
  nlohmann::json inv = nlohmann::json::object();
  auto names = invariant_names(set.order());
  for (std::size_t i = 0; i < names.size(); ++i) inv[names[i]] = set.values()[i];
  doc["invariants"] = inv;
  return doc.dump(2) + "\n";
}

int elliptic_fixed_count(Order d, int j) {
  const int n = to_int(d);
  if (j < 0 || j >= n) throw UsageError("power must satisfy 0 <= j < d");
  const int c = std::gcd(j, n);
  if (c == n) return 0;
  switch (d) {
    case Order::Two: return 4;
    case Order::Three: return 3;
    case Order::Four: return c == 1 ? 2 : 4;
    case Order::Six: return c == 1 ? 1 : (c == 2 ? 3 : 4);
  }
  throw InternalError("bad order");
}

LinForm fixed_locus_euler(Order d, int j, IsolatedPoints points) {
  const int n = to_int(d);
  if (j < 0 || j >= n) throw UsageError("power must satisfy 0 <= j < d");
  const int c = std::gcd(j, n);
  if (c == n) return LinForm(24);
  auto s = [d](std::string_view name, long k = 1) { return sym(d, name, Rational(k)); };
  switch (d) {
    case Order::Two:
      return s("N", 2) - s("Nprime", 2);
    case Order::Three:
      return s("h") + s("k", 2) - s("gC", 2);
    case Order::Four:
      if (c == 1) return s("n1") + s("n2") + s("k", 2) - s("gD", 2);
      return s("N", 2) - s("gD", 2);
    case Order::Six:
      if (c == 1) return s("l", 2) - s("gD", 2) + s("p34") + s("p25");
      if (c == 2) {
        LinForm f = s("k", 2) - s("gG", 2);
        if (points == IsolatedPoints::Include) f += s("npts");
        return f;
      }
      return s("N", 2) - s("gF1", 2) - s("gF2", 2);
  }
  throw InternalError("bad order");
}

}  // namespace k3cy
