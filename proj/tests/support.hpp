#pragma once

// Test-only oracles and generators. Nothing here is used by the library.

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "k3cy/cyclotomic.hpp"
#include "k3cy/euler.hpp"
#include "k3cy/fracpoly.hpp"
#include "k3cy/hodge.hpp"
#include "k3cy/linalg.hpp"
#include "k3cy/relations.hpp"

namespace k3cy::testing {

/// Coefficients of the d-th cyclotomic polynomial, lowest degree first.
inline std::vector<Rational> cyclotomic_poly(int d) {
  switch (d) {
    case 1: return {-1, 1};
    case 2: return {1, 1};
    case 3: return {1, 1, 1};
    case 4: return {1, 0, 1};
    case 6: return {1, -1, 1};
  }
  throw std::invalid_argument("order");
}

/// Schoolbook product of coefficient vectors followed by long division by
/// Phi_d. Independent of the library's zeta^2 table.
inline CyclotomicNumber naive_cyclo_mul(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  const int d = x.order();
  std::vector<Rational> a = {x.c0(), x.c1()};
  std::vector<Rational> b = {y.c0(), y.c1()};
  std::vector<Rational> prod(3, Rational(0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) prod[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  const auto phi = cyclotomic_poly(d);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(prod.size()) - 1; k >= deg; --k) {
    Rational lead = prod[static_cast<std::size_t>(k)] / phi.back();
    if (lead == 0) continue;
    for (int i = 0; i <= deg; ++i) prod[static_cast<std::size_t>(k - deg + i)] -= lead * phi[static_cast<std::size_t>(i)];
  }
  return CyclotomicNumber(d, prod[0], deg >= 2 ? prod[1] : Rational(0));
}

/// Term-list convolution without sparse-map accumulation.
template <class C>
std::map<Exponent, C> naive_convolution(const FracPoly<C>& p, const FracPoly<C>& q) {
  std::vector<std::pair<Exponent, C>> all;
  for (const auto& [e1, c1] : p.terms())
    for (const auto& [e2, c2] : q.terms()) all.push_back({{e1.first + e2.first, e1.second + e2.second}, c1 * c2});
  std::map<Exponent, C> sum;
  for (const auto& [e, c] : all) sum[e] += c;
  for (auto it = sum.begin(); it != sum.end();) it = it->second == 0 ? sum.erase(it) : std::next(it);
  return sum;
}

/// Number of fixed points of z -> zeta^j z on C / Z[zeta] (any lattice for
/// d = 2), as the index |det| of multiplication by 1 - zeta^j on the
/// lattice, computed in floating point from a basis {1, tau}.
inline int lattice_fixed_points(int d, int j) {
  const double pi = std::acos(-1.0);
  const std::complex<double> zeta = std::polar(1.0, 2 * pi * j / d);
  const std::complex<double> tau = (d == 3 || d == 6) ? std::polar(1.0, 2 * pi / 3) : std::complex<double>(0, 1);
  const std::complex<double> mu = 1.0 - zeta;
  // Coordinates of w in the basis {1, tau}.
  auto coords = [&](std::complex<double> w) {
    const double b = w.imag() / tau.imag();
    return std::pair<double, double>{w.real() - b * tau.real(), b};
  };
  auto [a11, a21] = coords(mu);
  auto [a12, a22] = coords(mu * tau);
  return static_cast<int>(std::lround(std::abs(a11 * a22 - a12 * a21)));
}

/// Orbifold Euler number by direct enumeration of all pairs (g, h) of the
/// group {m in Z_d^n : sum m = 0}.
inline LinForm naive_orbifold(Order d, int n) {
  const int D = to_int(d);
  const int free = n - 1;
  long size = 1;
  for (int i = 0; i < free; ++i) size *= D;
  auto element = [&](long code) {
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    int sum = 0;
    for (int i = 1; i < n; ++i) {
      m[static_cast<std::size_t>(i)] = static_cast<int>(code % D);
      sum += m[static_cast<std::size_t>(i)];
      code /= D;
    }
    m[0] = ((-sum) % D + D) % D;
    return m;
  };
  LinForm total;
  for (long gi = 0; gi < size; ++gi) {
    const auto g = element(gi);
    for (long hi = 0; hi < size; ++hi) {
      const auto h = element(hi);
      const int c0 = std::gcd(std::gcd(g[0], h[0]), D);
      LinForm term = fixed_locus_euler(d, c0 == D ? 0 : c0);
      long factor = 1;
      for (int i = 1; i < n; ++i) {
        const int c = std::gcd(std::gcd(g[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(i)]), D);
        factor *= c == D ? 0 : elliptic_fixed_count(d, c);
      }
      total += term * Rational(factor);
    }
  }
  return total / Rational(size);
}

/// Affine integer parametrization of the solutions of full_system(d):
/// value(symbol) = offset + sum coeff[f] * free_f. Found by trying column
/// orders until row reduction leaves only integer entries, so that any
/// integer choice of the free symbols gives integer invariants.
struct Parametrization {
  std::vector<std::string> free;
  std::map<std::string, std::pair<Rational, std::vector<Rational>>> pivots;
};

inline Parametrization integer_parametrization(Order d, unsigned seed = 1) {
  const auto names = invariant_names(d);
  const auto forms = full_system(d).forms();
  std::vector<std::string> cols(names.begin(), names.end());
  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    if (attempt) std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<RationalRow> rows;
    for (const auto& f : forms) {
      RationalRow row;
      for (const auto& c : cols) row.push_back(f.coeff(c));
      row.push_back(f.constant());
      rows.push_back(row);
    }
    const auto piv = rref(rows, nullptr, cols.size());
    bool integral = true;
    for (const auto& row : rows)
      for (const auto& x : row) integral = integral && is_integer(x);
    if (!integral) continue;
    Parametrization p;
    std::vector<bool> is_pivot(cols.size(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::size_t> free_idx;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!is_pivot[c]) {
        free_idx.push_back(c);
        p.free.push_back(cols[c]);
      }
    for (std::size_t i = 0; i < piv.size(); ++i) {
      std::vector<Rational> coeff;
      for (auto c : free_idx) coeff.push_back(-rows[i][c]);
      p.pivots[cols[piv[i]]] = {-rows[i].back(), coeff};
    }
    return p;
  }
  throw std::runtime_error("no integral parametrization found");
}

/// Random relation-consistent invariant sets: random non-negative integer
/// values for the free symbols of an integral parametrization, kept when
/// every invariant is non-negative and m >= 1 (the 2-form spans H^{2,0}
/// inside the zeta-eigenspace, so that eigenspace is never empty).
inline std::vector<InvariantSet> random_consistent_sets(Order d, std::size_t count, unsigned seed, int limit = 6) {
  const auto param = integer_parametrization(d);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(0, limit);
  std::vector<InvariantSet> out;
  for (int attempt = 0; attempt < 5000000 && out.size() < count; ++attempt) {
    InvariantSet s(d);
    std::vector<Rational> f;
    for (const auto& name : param.free) {
      f.push_back(dist(rng));
      s.set(name, f.back().get_num().get_si());
    }
    bool ok = true;
    for (const auto& [name, expr] : param.pivots) {
      Rational v = expr.first;
      for (std::size_t i = 0; i < f.size(); ++i) v += expr.second[i] * f[i];
      if (v < 0) {
        ok = false;
        break;
      }
      s.set(name, v.get_num().get_si());
    }
    if (ok && s.get("m") >= 1) out.push_back(s);
  }
  return out;
}

inline CyclotomicNumber random_cyclo(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Rational c0(num(rng), den(rng));
  Rational c1(num(rng), den(rng));
  c0.canonicalize();
  c1.canonicalize();
  return CyclotomicNumber(d, c0, cyclotomic_degree(d) == 2 ? c1 : Rational(0));
}

}  // namespace k3cy::testing
