#include "k3cy/hodge.hpp"

#include <map>
#include <mutex>

namespace k3cy {

namespace {

using SPoly = FracPoly<LinForm>;
using QPoly = FracPoly<Rational>;

class Builder {
 public:
  explicit Builder(Order d) : d_(d), D_(to_int(d)) {}

  LinForm s(std::string_view name) const { return sym(d_, name); }

  SPoly one() const { return SPoly::constant(D_, LinForm(1)); }

  /// c * X^x Y^y t^k, t = (XY)^{1/D}.
  SPoly mono(int x, int y, int k, const LinForm& c) const { return SPoly::monomial(D_, x, y, k, c); }

  /// t^k * (c + xy*XY + xpy*(X + Y)).
  SPoly block(int k, const LinForm& c, const LinForm& xy, const LinForm& xpy) const {
    return mono(0, 0, k, c) + mono(1, 1, k, xy) + mono(1, 0, k, xpy) + mono(0, 1, k, xpy);
  }

  /// (XY)^2 + r*XY + 1
  SPoly k3_core() const { return mono(2, 2, 0, LinForm(1)) + mono(1, 1, 0, s("r")) + one(); }

  /// (X^2 + (m-1)XY) X^{n-1} + (Y^2 + (m-1)XY) Y^{n-1}
  SPoly edge_terms(int n) const {
    LinForm m1 = s("m") - LinForm(1);
    return mono(n + 1, 0, 0, LinForm(1)) + mono(n, 1, 0, m1) + mono(0, n + 1, 0, LinForm(1)) +
           mono(1, n, 0, m1);
  }

 private:
  Order d_;
  int D_;
};

QPoly qmono(int D, int x, int y, int k, long c) { return QPoly::monomial(D, x, y, k, Rational(c)); }

SPoly build6(int n) {
  Builder B(Order::Six);
  auto s = [&](std::string_view name) { return B.s(name); };
  const LinForm kb = s("k") - s("b");
  const LinForm Na = s("N") - s("a") * Rational(2);
  SPoly main = B.k3_core() +
               B.block(1, s("l"), s("p25") + s("p34") + s("l"), s("gD")) +
               B.block(2, kb, s("nprime") + s("p25") + kb, s("gqG")) +
               B.block(3, Na, Na, s("gqF1") + s("gqF2")) +
               B.block(4, kb + s("nprime") + s("p25"), kb, s("gqG")) +
               B.block(5, s("l") + s("p25") + s("p34"), s("l"), s("gD"));
  const unsigned e = static_cast<unsigned>(n - 1);
  SPoly out = poly_mul(main, poly_pow(hodge_multiplier(Order::Six), e));
  out += B.edge_terms(n);

  const LinForm half_genus = (s("gF1") + s("gF2") - s("gqF1") - s("gqF2")) * Rational(1, 2);
  SPoly a_part = B.mono(1, 1, 0, s("alpha")) + B.block(3, s("a"), s("a"), half_genus);
  QPoly a_mult = poly_pow(qmono(6, 0, 0, 3, 1), e);
  // The alpha block enters twice (zeta^2 and zeta^4 eigenspaces).
  out += poly_mul(a_part, a_mult);
  out += poly_mul(a_part, a_mult);

  const LinForm gdiff = s("gG") - s("gqG");
  SPoly b_part = B.mono(1, 1, 0, s("beta")) +
                 B.block(2, s("b"), s("nprime") + s("b"), gdiff) +
                 B.block(4, s("b") + s("nprime"), s("b"), gdiff);
  out += poly_mul(b_part, poly_pow(qmono(6, 0, 0, 2, 1) + qmono(6, 0, 0, 4, 1), e));
  return out;
}

SPoly build4(int n) {
  Builder B(Order::Four);
  auto s = [&](std::string_view name) { return B.s(name); };
  const LinForm pts = s("n1") + s("n2");
  const LinForm Na = s("N") - s("a");
  SPoly main = B.k3_core() + B.block(1, s("k"), pts + s("k"), s("gFix4")) +
               B.block(2, Na, Na, s("gqD")) + B.block(3, s("k") + pts, s("k"), s("gFix4"));
  const unsigned e = static_cast<unsigned>(n - 1);
  SPoly out = poly_mul(main, poly_pow(hodge_multiplier(Order::Four), e));
  out += B.edge_terms(n);
  const LinForm rest = LinForm(22) - s("r") - s("m") * Rational(2);
  SPoly tw = B.mono(1, 1, 0, rest) + B.block(2, s("a"), s("a"), s("gD") - s("gqD"));
  out += poly_mul(tw, poly_pow(qmono(4, 0, 0, 2, 1), e));
  return out;
}

SPoly build3(int n) {
  Builder B(Order::Three);
  auto s = [&](std::string_view name) { return B.s(name); };
  SPoly main = B.k3_core() + B.block(1, s("k"), s("h") + s("k"), s("gC")) +
               B.block(2, s("k") + s("h"), s("k"), s("gC"));
  SPoly out = poly_mul(main, poly_pow(hodge_multiplier(Order::Three), static_cast<unsigned>(n - 1)));
  out += B.edge_terms(n);
  return out;
}

SPoly build2(int n) {
  Builder B(Order::Two);
  auto s = [&](std::string_view name) { return B.s(name); };
  SPoly main = B.k3_core() + B.mono(0, 0, 1, s("N")) + B.mono(1, 0, 1, s("Nprime")) +
               B.mono(0, 1, 1, s("Nprime")) + B.mono(1, 1, 1, s("N"));
  const unsigned e = static_cast<unsigned>(n - 1);
  SPoly out = poly_mul(main, poly_pow(hodge_multiplier(Order::Two), e));
  SPoly edge = B.mono(2, 0, 0, LinForm(1)) + B.mono(0, 2, 0, LinForm(1)) +
               B.mono(1, 1, 0, s("m") - LinForm(2));
  out += poly_mul(edge, poly_pow(qmono(2, 1, 0, 0, 1) + qmono(2, 0, 1, 0, 1), e));
  return out;
}

}  // namespace

FracPoly<Rational> hodge_multiplier(Order d) {
  const int D = to_int(d);
  QPoly m = qmono(D, 0, 0, 0, 1) + qmono(D, 1, 1, 0, 1);
  switch (d) {
    case Order::Two:
      return m + qmono(D, 0, 0, 1, 4);
    case Order::Three:
      return m + qmono(D, 0, 0, 1, 3) + qmono(D, 0, 0, 2, 3);
    case Order::Four:
      return m + qmono(D, 0, 0, 1, 2) + qmono(D, 0, 0, 2, 3) + qmono(D, 0, 0, 3, 2);
    case Order::Six:
      return m + qmono(D, 0, 0, 1, 1) + qmono(D, 0, 0, 2, 2) + qmono(D, 0, 0, 3, 2) +
             qmono(D, 0, 0, 4, 2) + qmono(D, 0, 0, 5, 1);
  }
  throw InternalError("bad order");
}

FracPoly<LinForm> build_hodge_poly(Order d, int n) {
  if (n < 1) throw UsageError("level n must be >= 1");
  // Expansions are reused across invariant sets.
  static std::mutex mutex;
  static std::map<std::pair<Order, int>, SPoly> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({d, n});
    if (it != cache.end()) return it->second;
  }
  SPoly poly(to_int(d));
  switch (d) {
    case Order::Two: poly = build2(n); break;
    case Order::Three: poly = build3(n); break;
    case Order::Four: poly = build4(n); break;
    case Order::Six: poly = build6(n); break;
  }
  std::lock_guard lock(mutex);
  cache.emplace(std::pair{d, n}, poly);
  return poly;
}

FracPoly<Rational> build_hodge_poly(Order d, int n, const InvariantSet& set) {
  if (set.order() != d) throw UsageError("invariant set order does not match");
  return evaluate(build_hodge_poly(d, n), set.assignment());
}

HodgeDiamond::HodgeDiamond(int dim)
    : dim_(dim), h_(static_cast<std::size_t>(dim + 1), std::vector<Integer>(dim + 1, Integer(0))) {
  if (dim < 0) throw UsageError("negative dimension");
}

HodgeDiamond::HodgeDiamond(int dim, std::vector<std::vector<Integer>> h) : dim_(dim), h_(std::move(h)) {
  if (h_.size() != static_cast<std::size_t>(dim + 1)) throw UsageError("diamond grid has wrong size");
  for (const auto& row : h_)
    if (row.size() != static_cast<std::size_t>(dim + 1)) throw UsageError("diamond grid has wrong size");
}

HodgeDiamond HodgeDiamond::k3() {
  HodgeDiamond k(2);
  k.set(0, 0, 1);
  k.set(2, 0, 1);
  k.set(0, 2, 1);
  k.set(1, 1, 20);
  k.set(2, 2, 1);
  return k;
}

HodgeDiamond hodge_diamond(Order d, int n, const InvariantSet& set) {
  if (set.order() != d) throw UsageError("invariant set order does not match");
  const FracPoly<LinForm> poly = build_hodge_poly(d, n);
  const Assignment values = set.assignment();
  HodgeDiamond out(n + 1);
  for (int p = 0; p <= n + 1; ++p) {
    for (int q = 0; q <= n + 1; ++q) {
      Rational c = poly_coeff_int(poly, p, q).eval(values);
      if (!is_integer(c) || c < 0) {
        throw InconsistentInvariants(p, q,
                                     "inconsistent invariants: h^{" + std::to_string(p) + "," +
                                         std::to_string(q) + "} = " + c.get_str());
      }
      out.set(p, q, c.get_num());
    }
  }
  return out;
}

bool ShapeReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ShapeReport verify_cy_shape(const HodgeDiamond& diamond) {
  const int dim = diamond.dim();
  ShapeReport report;
  auto add = [&](std::string name, std::string message, auto&& violated) {
    ShapeCheck check{std::move(name), true, std::move(message), {}};
    for (int p = 0; p <= dim; ++p)
      for (int q = 0; q <= dim; ++q)
        if (violated(p, q)) check.violations.emplace_back(p, q);
    check.pass = check.violations.empty();
    report.checks.push_back(std::move(check));
  };
  add("nonnegative", "h^{p,q} must be >= 0", [&](int p, int q) { return diamond.at(p, q) < 0; });
  add("h00", "h^{0,0} must be 1", [&](int p, int q) { return p == 0 && q == 0 && diamond.at(0, 0) != 1; });
  add("hodge_symmetry", "h^{p,q} must equal h^{q,p}",
      [&](int p, int q) { return p < q && diamond.at(p, q) != diamond.at(q, p); });
  add("serre_duality", "h^{p,q} must equal h^{dim-p,dim-q}", [&](int p, int q) {
    return (p * (dim + 1) + q) < ((dim - p) * (dim + 1) + (dim - q)) &&
           diamond.at(p, q) != diamond.at(dim - p, dim - q);
  });
  add("hp0_vanishing", "h^{p,0} must vanish for 0<p<dim",
      [&](int p, int q) { return q == 0 && p > 0 && p < dim && diamond.at(p, 0) != 0; });
  add("hdim0", "h^{dim,0} must be 1",
      [&](int p, int q) { return p == dim && q == 0 && diamond.at(dim, 0) != 1; });
  return report;
}

}  // namespace k3cy
