#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <string>

#include "k3cy/linform.hpp"
#include "k3cy/rational.hpp"

namespace k3cy {

inline bool is_supported_cyclotomic_order(int d) {
  return d == 1 || d == 2 || d == 3 || d == 4 || d == 6;
}

/// Euler totient for the supported orders.
inline int cyclotomic_degree(int d) { return d <= 2 ? 1 : 2; }

/// Element of Q(zeta_d), d in {1,2,3,4,6}, stored as c0 + c1*zeta reduced
/// modulo the d-th cyclotomic polynomial (c1 is always 0 when phi(d) = 1).
///
/// The coefficient type is Rational for field elements; LinForm gives
/// symbolic elements that are affine-linear in invariant symbols. Symbolic
/// elements can be added and scaled by field elements but not multiplied
/// together.
template <class Coeff>
class Cyclotomic {
 public:
  explicit Cyclotomic(int order = 1, Coeff c0 = Coeff(0), Coeff c1 = Coeff(0))
      : order_(order), c_{std::move(c0), std::move(c1)} {
    if (!is_supported_cyclotomic_order(order)) {
      throw UsageError("unsupported cyclotomic order " + std::to_string(order));
    }
    if (cyclotomic_degree(order_) == 1 && !(c_[1] == Coeff(0))) {
      throw UsageError("order " + std::to_string(order) + " element has a zeta coefficient");
    }
  }

  /// zeta_d^k for any integer k.
  static Cyclotomic root_power(int order, long k);

  int order() const noexcept { return order_; }
  const Coeff& c0() const noexcept { return c_[0]; }
  const Coeff& c1() const noexcept { return c_[1]; }
  const std::array<Coeff, 2>& coeffs() const noexcept { return c_; }
  bool is_zero() const { return c_[0] == Coeff(0) && c_[1] == Coeff(0); }
  bool is_rational() const { return c_[1] == Coeff(0); }

  Cyclotomic& operator+=(const Cyclotomic& rhs) {
    check_order(rhs.order_);
    c_[0] += rhs.c_[0];
    c_[1] += rhs.c_[1];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& rhs) {
    check_order(rhs.order_);
    c_[0] -= rhs.c_[0];
    c_[1] -= rhs.c_[1];
    return *this;
  }
  Cyclotomic operator-() const { return Cyclotomic(order_, Coeff(0) - c_[0], Coeff(0) - c_[1]); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1];
  }

  /// Product with a field element; reduces zeta^2 = s0 + s1*zeta.
  Cyclotomic times(const Cyclotomic<Rational>& y) const {
    check_order(y.order());
    auto [s0, s1] = zeta_squared(order_);
    const Coeff& a0 = c_[0];
    const Coeff& a1 = c_[1];
    const Rational& b0 = y.c0();
    const Rational& b1 = y.c1();
    Coeff top = a1 * b1;
    Coeff r0 = a0 * b0 + top * s0;
    Coeff r1 = a0 * b1 + a1 * b0 + top * s1;
    return Cyclotomic(order_, std::move(r0), std::move(r1));
  }

  Cyclotomic scaled(const Rational& s) const { return Cyclotomic(order_, c_[0] * s, c_[1] * s); }

  void check_order(int other) const {
    if (other != order_) {
      throw UsageError("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                       std::to_string(other));
    }
  }

  /// zeta^2 expressed in the power basis {1, zeta}.
  static std::array<Rational, 2> zeta_squared(int d) {
    switch (d) {
      case 1: return {Rational(1), Rational(0)};
      case 2: return {Rational(1), Rational(0)};
      case 3: return {Rational(-1), Rational(-1)};  // z^2 + z + 1
      case 4: return {Rational(-1), Rational(0)};   // z^2 + 1
      case 6: return {Rational(-1), Rational(1)};   // z^2 - z + 1
      default: throw UsageError("unsupported cyclotomic order " + std::to_string(d));
    }
  }

 private:
  int order_;
  std::array<Coeff, 2> c_;
};

using CyclotomicNumber = Cyclotomic<Rational>;
using SymbolicCyclotomic = Cyclotomic<LinForm>;

template <class Coeff>
Cyclotomic<Coeff> Cyclotomic<Coeff>::root_power(int order, long k) {
  if (!is_supported_cyclotomic_order(order)) {
    throw UsageError("unsupported cyclotomic order " + std::to_string(order));
  }
  long e = ((k % order) + order) % order;
  if (order <= 2) return Cyclotomic(order, Coeff(e == 0 ? 1 : -1));
  Cyclotomic<Rational> z(order, Rational(0), Rational(1));
  Cyclotomic<Rational> acc(order, Rational(1));
  for (long i = 0; i < e; ++i) acc = acc.times(z);
  if constexpr (std::is_same_v<Coeff, Rational>) {
    return acc;
  } else {
    return Cyclotomic(order, Coeff(acc.c0()), Coeff(acc.c1()));
  }
}

inline CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  return x.times(y);
}

inline SymbolicCyclotomic operator*(const SymbolicCyclotomic& x, const CyclotomicNumber& y) {
  return x.times(y);
}

inline SymbolicCyclotomic embed(const CyclotomicNumber& x) {
  return SymbolicCyclotomic(x.order(), LinForm(x.c0()), LinForm(x.c1()));
}

/// Symbolic multiple  f * x.
inline SymbolicCyclotomic scale(const LinForm& f, const CyclotomicNumber& x) {
  return SymbolicCyclotomic(x.order(), f * x.c0(), f * x.c1());
}

/// Complex conjugate: zeta -> zeta^{d-1}.
inline CyclotomicNumber conjugate(const CyclotomicNumber& x) {
  if (cyclotomic_degree(x.order()) == 1) return x;
  return CyclotomicNumber(x.order(), x.c0()) +
         CyclotomicNumber::root_power(x.order(), x.order() - 1) *
             CyclotomicNumber(x.order(), x.c1());
}

/// Multiplicative inverse via the norm x * conj(x) in Q. Throws DivisionByZero.
inline CyclotomicNumber inverse(const CyclotomicNumber& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(x.order()) + ")");
  CyclotomicNumber bar = conjugate(x);
  CyclotomicNumber norm = x * bar;
  if (!norm.is_rational()) throw InternalError("cyclotomic norm is not rational");
  return bar.scaled(Rational(1) / norm.c0());
}

inline CyclotomicNumber operator/(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  return x * inverse(y);
}

/// Value at zeta = exp(2*pi*i/d). Debug/sanity use only.
inline std::complex<double> to_complex(const CyclotomicNumber& x) {
  const double angle = 2.0 * std::numbers::pi / x.order();
  std::complex<double> z(std::cos(angle), std::sin(angle));
  return x.c0().get_d() + x.c1().get_d() * z;
}

template <class Coeff>
std::string to_string(const Cyclotomic<Coeff>& x) {
  auto str = [](const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, Rational>) {
      return c.get_str();
    } else {
      return c.to_string();
    }
  };
  std::string z = "z" + std::to_string(x.order());
  if (x.c1() == Coeff(0)) return str(x.c0());
  if (x.c0() == Coeff(0)) return "(" + str(x.c1()) + ")*" + z;
  return str(x.c0()) + " + (" + str(x.c1()) + ")*" + z;
}

}  // namespace k3cy
