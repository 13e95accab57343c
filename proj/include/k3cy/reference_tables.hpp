#pragma once

#include <string>
#include <vector>

#include "k3cy/invariants.hpp"

namespace k3cy {

/// Published stringy Euler numbers e_s(Y_{d,n}), d in {4, 6}, n = 1..6,
/// transcribed as printed (including the suspected misprints).
struct PublishedEuler {
  Order order;
  int level;
  LinForm value;
};

const std::vector<PublishedEuler>& published_stringy_euler();

/// Substitution used to compare against the published tables, which are
/// written without npts (d = 6) and without N (d = 4):
/// npts := p25 + 2 nprime, N := k + b + 2a.
LinForm table_normal_form(Order d, const LinForm& f);

struct CoefficientMismatch {
  std::string symbol;  // "" for the constant term
  Rational published;
  Rational engine;
  /// One of the known suspected misprints: the bare k at (6, 2) and the
  /// repeated gF1 at (6, 6).
  bool suspected_misprint = false;
};

struct TableComparison {
  Order order;
  int level;
  LinForm published;
  LinForm engine;  // orbifold route in table normal form
  std::vector<CoefficientMismatch> mismatches;

  bool only_suspected_misprints() const;
};

std::vector<TableComparison> compare_stringy_tables();

}  // namespace k3cy
