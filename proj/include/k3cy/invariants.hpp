#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "k3cy/linform.hpp"
#include "k3cy/rational.hpp"

namespace k3cy {

/// Order of the purely non-symplectic automorphism.
enum class Order : int { Two = 2, Three = 3, Four = 4, Six = 6 };

inline constexpr Order kAllOrders[] = {Order::Two, Order::Three, Order::Four, Order::Six};

inline int to_int(Order d) { return static_cast<int>(d); }

/// Throws UsageError for anything but 2, 3, 4, 6.
Order order_from_int(long d);

/// Symbol names of the invariants attached to an order-d K3 surface, in
/// their canonical display order.
///
///   d = 6: r m alpha beta l k N p25 p34 npts nprime a b gD gG gF1 gF2
///          gqG gqF1 gqF2 w
///   d = 4: r m N k b a gD gqD gFix4 n1 n2
///   d = 3: r m h k gC
///   d = 2: r m N Nprime
std::span<const std::string> invariant_names(Order d);

bool is_invariant_name(Order d, std::string_view name);

/// Convenience: LinForm::symbol for a name that must belong to order d.
LinForm sym(Order d, std::string_view name, const Rational& coeff = 1);

/// parse_linform restricted to the order-d namespace (UsageError otherwise).
LinForm form(Order d, std::string_view text);

/// Non-negative integer invariants of one K3 surface with an order-d
/// purely non-symplectic automorphism. Values are stored in the order of
/// invariant_names(d).
class InvariantSet {
 public:
  /// All-zero set.
  explicit InvariantSet(Order d);
  InvariantSet(Order d, const std::map<std::string, long, std::less<>>& values);

  Order order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  long get(std::string_view symbol) const;
  void set(std::string_view symbol, long value);
  std::span<const long> values() const noexcept { return values_; }

  Assignment assignment() const;

  friend bool operator==(const InvariantSet&, const InvariantSet&) = default;

 private:
  std::size_t index_of(std::string_view symbol) const;

  Order order_;
  std::string name_;
  std::vector<long> values_;
};

/// Parse the JSON invariant document
///   {"order": d, "name": "...", "invariants": {"r": 10, ...}}.
/// Throws ParseError for malformed JSON or structure, ValidationError for
/// unknown/missing symbols, negative values and unsupported orders.
InvariantSet parse_invariants(std::string_view document);

/// Canonical JSON (sorted keys, two-space indent).
std::string serialize_invariants(const InvariantSet& set);

/// e(Fix(alpha_E^j)) on the order-d elliptic curve; 0 for j = 0 mod d.
int elliptic_fixed_count(Order d, int j);

/// Whether e(Fix(alpha^2)) for d = 6 counts the isolated points npts.
enum class IsolatedPoints { Include, Omit };

/// Symbolic e(Fix(alpha_S^j)) over the order-d namespace; depends only on
/// gcd(j, d). j = 0 gives 24. `points` affects only (6, 2) and (6, 4).
LinForm fixed_locus_euler(Order d, int j, IsolatedPoints points = IsolatedPoints::Include);

}  // namespace k3cy
