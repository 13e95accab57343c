#pragma once

#include <string>
#include <vector>

#include "k3cy/fracpoly.hpp"
#include "k3cy/invariants.hpp"

namespace k3cy {

/// Generating polynomial of the Hodge numbers of Y_{d,n}, expanded, with
/// LinForm coefficients over the order-d namespace and scale D = d.
///
/// For d = 4 the multiplier factor is 1 + XY + 2t + 3t^2 + 2t^3 with
/// t = (XY)^{1/4}. At X = Y = 1 the factor must equal 9, the dominant
/// root of the order-4 Euler recurrence, which pins the t^2 coefficient.
FracPoly<LinForm> build_hodge_poly(Order d, int n);

/// Same polynomial with the invariants of `set` substituted.
FracPoly<Rational> build_hodge_poly(Order d, int n, const InvariantSet& set);

/// The d-independent multiplier raised to n - 1 (exposed for tests).
FracPoly<Rational> hodge_multiplier(Order d);

/// Hodge numbers h^{p,q}, 0 <= p, q <= dim, of an (n+1)-fold.
class HodgeDiamond {
 public:
  explicit HodgeDiamond(int dim);
  HodgeDiamond(int dim, std::vector<std::vector<Integer>> h);

  int dim() const noexcept { return dim_; }
  const Integer& at(int p, int q) const { return h_.at(p).at(q); }
  void set(int p, int q, Integer v) { h_.at(p).at(q) = std::move(v); }
  const std::vector<std::vector<Integer>>& grid() const noexcept { return h_; }

  /// The K3 diamond (dim 2, h^{1,1} = 20).
  static HodgeDiamond k3();

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

 private:
  int dim_;
  std::vector<std::vector<Integer>> h_;
};

/// Reads h^{p,q} off build_hodge_poly at integer bidegrees. Throws
/// InconsistentInvariants naming the first (p, q) whose coefficient is
/// negative or fractional.
HodgeDiamond hodge_diamond(Order d, int n, const InvariantSet& set);

struct ShapeCheck {
  std::string name;
  bool pass = true;
  std::string message;
  std::vector<std::pair<int, int>> violations;
};

struct ShapeReport {
  std::vector<ShapeCheck> checks;
  bool pass() const;
};

/// Calabi-Yau shape of a diamond: h^{0,0} = 1, Hodge symmetry, Serre
/// duality, h^{p,0} = 0 for 0 < p < dim, h^{dim,0} = 1, no negative entries.
ShapeReport verify_cy_shape(const HodgeDiamond& diamond);

}  // namespace k3cy
