#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "k3cy/rational.hpp"

namespace k3cy {

using Assignment = std::map<std::string, Rational, std::less<>>;

/// Affine-linear form  c + sum_i a_i * x_i  over named symbols with exact
/// rational coefficients. Zero coefficients are never stored, so two forms
/// are equal iff their representations are.
class LinForm {
 public:
  using Terms = std::map<std::string, Rational, std::less<>>;

  LinForm() = default;
  LinForm(const Rational& constant) : constant_(constant) {}  // NOLINT: implicit embedding
  LinForm(long constant) : constant_(constant) {}             // NOLINT
  LinForm(int constant) : constant_(constant) {}              // NOLINT

  static LinForm symbol(std::string_view name, const Rational& coeff = 1);

  const Rational& constant() const noexcept { return constant_; }
  const Terms& terms() const noexcept { return terms_; }
  Rational coeff(std::string_view name) const;

  bool is_zero() const noexcept { return constant_ == 0 && terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty(); }
  std::vector<std::string> symbols() const;

  LinForm& operator+=(const LinForm& rhs);
  LinForm& operator-=(const LinForm& rhs);
  LinForm& operator*=(const Rational& s);
  LinForm& operator/=(const Rational& s);
  LinForm operator-() const;

  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator*(LinForm a, const Rational& s) { return a *= s; }
  friend LinForm operator*(const Rational& s, LinForm a) { return a *= s; }
  friend LinForm operator/(LinForm a, const Rational& s) { return a /= s; }
  friend bool operator==(const LinForm& a, const LinForm& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }

  /// constant + sum coeff * value. Throws UnboundSymbol for the first
  /// symbol without a value.
  Rational eval(const Assignment& values) const;

  /// Replace every occurrence of `name` by `replacement`.
  LinForm substitute(std::string_view name, const LinForm& replacement) const;
  LinForm substitute(const std::map<std::string, LinForm, std::less<>>& replacements) const;

  /// Scale to coprime integer coefficients with a positive leading
  /// coefficient. The leading coefficient is the first nonzero one in
  /// `order`, then remaining symbols by name, then the constant.
  LinForm primitive(std::span<const std::string> order = {}) const;

  /// "2*m + r + alpha + beta - 20" with symbols in `order` (then by name).
  std::string to_string(std::span<const std::string> order = {}) const;

 private:
  void add_term(std::string_view name, const Rational& c);

  Rational constant_{0};
  Terms terms_;
};

/// Parse sums of terms such as "46 - r + 2*m - 3/2*gF1 + w/2". A term is
/// an optional rational factor, an optional symbol, and an optional
/// trailing "/den". Throws ParseError.
LinForm parse_linform(std::string_view text);

/// Symbols of `f` sorted by their position in `order`, unknown ones last by name.
std::vector<std::string> ordered_symbols(const LinForm& f, std::span<const std::string> order);

}  // namespace k3cy
