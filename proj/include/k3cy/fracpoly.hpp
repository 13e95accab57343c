#pragma once

#include <map>
#include <string>
#include <utility>

#include "k3cy/linform.hpp"
#include "k3cy/rational.hpp"

namespace k3cy {

/// Exponent pair (a, b) standing for X^{a/D} Y^{b/D}.
using Exponent = std::pair<int, int>;

/// Sparse bivariate polynomial in X, Y with exponents in (1/D)Z>=0.
/// Exponents are kept pre-multiplied by the scale D, so X^{1/2} at D = 2 is
/// stored as (1, 0). Coefficients are Rational or LinForm; zero
/// coefficients are pruned after every operation.
template <class Coeff>
class FracPoly {
 public:
  using Terms = std::map<Exponent, Coeff>;

  explicit FracPoly(int scale = 1) : scale_(scale) {
    if (scale < 1) throw UsageError("FracPoly scale must be positive");
  }

  static FracPoly constant(int scale, const Coeff& c) {
    FracPoly p(scale);
    p.add_term({0, 0}, c);
    return p;
  }

  /// c * X^{x} Y^{y} (XY)^{t/D} for integer x, y and 0 <= t.
  static FracPoly monomial(int scale, int x, int y, int t, const Coeff& c) {
    FracPoly p(scale);
    p.add_term({x * scale + t, y * scale + t}, c);
    return p;
  }

  int scale() const noexcept { return scale_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Exponent e, const Coeff& c) {
    if (e.first < 0 || e.second < 0) throw UsageError("negative FracPoly exponent");
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == Coeff(0)) terms_.erase(it);
  }

  Coeff coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Coefficient of X^p Y^q for integer p, q.
  Coeff coeff_int(int p, int q) const {
    if (p < 0 || q < 0) throw UsageError("negative bidegree");
    return coeff({p * scale_, q * scale_});
  }

  bool is_integer_exponent(Exponent e) const {
    return e.first % scale_ == 0 && e.second % scale_ == 0;
  }

  FracPoly& operator+=(const FracPoly& rhs) {
    check_scale(rhs.scale_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  FracPoly& operator-=(const FracPoly& rhs) {
    check_scale(rhs.scale_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, Coeff(0) - c);
    return *this;
  }
  friend FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
  friend FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
  friend bool operator==(const FracPoly& a, const FracPoly& b) {
    return a.scale_ == b.scale_ && a.terms_ == b.terms_;
  }

  /// X <-> Y.
  FracPoly swapped() const {
    FracPoly out(scale_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.second, e.first}, c);
    return out;
  }

  template <class F>
  auto map_coeffs(F&& f) const -> FracPoly<decltype(f(std::declval<const Coeff&>()))> {
    using Out = decltype(f(std::declval<const Coeff&>()));
    FracPoly<Out> out(scale_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  void check_scale(int other) const {
    if (other != scale_) {
      throw UsageError("FracPoly scale mismatch: " + std::to_string(scale_) + " vs " +
                       std::to_string(other));
    }
  }

 private:
  int scale_;
  Terms terms_;
};

/// Distributive product. The right factor's coefficients must scale the
/// left's (Rational * Rational, LinForm * Rational).
template <class C1, class C2>
FracPoly<C1> poly_mul(const FracPoly<C1>& p, const FracPoly<C2>& q) {
  p.check_scale(q.scale());
  FracPoly<C1> out(p.scale());
  for (const auto& [e1, c1] : p.terms()) {
    for (const auto& [e2, c2] : q.terms()) {
      out.add_term({e1.first + e2.first, e1.second + e2.second}, C1(c1 * c2));
    }
  }
  return out;
}

template <class C>
FracPoly<C> operator*(const FracPoly<C>& p, const FracPoly<C>& q) {
  return poly_mul(p, q);
}

/// p^e by binary powering; p^0 = 1.
template <class C>
FracPoly<C> poly_pow(const FracPoly<C>& p, unsigned e) {
  FracPoly<C> result = FracPoly<C>::constant(p.scale(), C(1));
  FracPoly<C> base = p;
  while (e > 0) {
    if (e & 1U) result = poly_mul(result, base);
    e >>= 1U;
    if (e > 0) base = poly_mul(base, base);
  }
  return result;
}

/// Coefficient at integer bidegree (p, q); fractional bidegrees never match.
template <class C>
C poly_coeff_int(const FracPoly<C>& p, int pdeg, int qdeg) {
  return p.coeff_int(pdeg, qdeg);
}

/// Substitute numeric values for every symbol in the coefficients.
inline FracPoly<Rational> evaluate(const FracPoly<LinForm>& p, const Assignment& values) {
  return p.map_coeffs([&](const LinForm& f) { return f.eval(values); });
}

inline FracPoly<LinForm> embed(const FracPoly<Rational>& p) {
  return p.map_coeffs([](const Rational& c) { return LinForm(c); });
}

}  // namespace k3cy
