#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3cy/linform.hpp"

namespace k3cy {

using RationalRow = std::vector<Rational>;

/// Exact reduced row echelon form over Q. Returns pivot column indices;
/// `rows` is reduced in place and zero rows are dropped. When `track` is
/// non-null it must hold one row per input row and receives the same row
/// operations (so it records each output row as a combination of inputs).
std::vector<std::size_t> rref(std::vector<RationalRow>& rows, std::vector<RationalRow>* track = nullptr,
                              std::size_t ncols_limit = static_cast<std::size_t>(-1));

/// Rank of the submatrix formed by the given columns.
std::size_t column_rank(const std::vector<RationalRow>& rows, const std::vector<std::size_t>& columns);

/// Span of a list of affine forms, viewed as vectors over the columns
/// (symbols..., constant). Columns are fixed up front so that the echelon
/// basis is canonical regardless of the order generators are added in.
class LinearSpan {
 public:
  explicit LinearSpan(std::vector<std::string> symbols);

  /// Throws UsageError for a symbol outside the column set.
  void add(const LinForm& f, std::string label);

  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<LinForm>& generators() const noexcept { return generators_; }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  std::size_t rank() const;

  /// Reduced echelon basis, each row scaled to a primitive integer form.
  std::vector<LinForm> basis() const;

  /// Coefficients c with sum c_i * generator_i == f, if f is in the span.
  std::optional<std::vector<Rational>> express(const LinForm& f) const;
  bool contains(const LinForm& f) const { return express(f).has_value(); }

  RationalRow to_row(const LinForm& f) const;
  LinForm from_row(const RationalRow& row) const;

 private:
  std::vector<std::string> symbols_;
  std::vector<LinForm> generators_;
  std::vector<std::string> labels_;
};

}  // namespace k3cy
