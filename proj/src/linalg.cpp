#include "k3cy/linalg.hpp"

#include <algorithm>

namespace k3cy {

std::vector<std::size_t> rref(std::vector<RationalRow>& rows, std::vector<RationalRow>* track,
                              std::size_t ncols_limit) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = std::min(rows.front().size(), ncols_limit);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    if (track) std::swap((*track)[r], (*track)[p]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    if (track)
      for (auto& x : (*track)[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
      if (track)
        for (std::size_t j = 0; j < (*track)[i].size(); ++j) (*track)[i][j] -= f * (*track)[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  // Zero rows (over the reduced columns) are kept only if a later column is
  // nonzero, so that callers can detect inconsistent constant columns.
  std::vector<RationalRow> kept;
  std::vector<RationalRow> kept_track;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool zero = std::all_of(rows[i].begin(), rows[i].end(), [](const Rational& x) { return x == 0; });
    if (zero) continue;
    kept.push_back(std::move(rows[i]));
    if (track) kept_track.push_back(std::move((*track)[i]));
  }
  rows = std::move(kept);
  if (track) *track = std::move(kept_track);
  return pivots;
}

std::size_t column_rank(const std::vector<RationalRow>& rows, const std::vector<std::size_t>& columns) {
  std::vector<RationalRow> sub;
  sub.reserve(rows.size());
  for (const auto& row : rows) {
    RationalRow s;
    s.reserve(columns.size());
    for (auto c : columns) s.push_back(row[c]);
    sub.push_back(std::move(s));
  }
  return rref(sub).size();
}

LinearSpan::LinearSpan(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {}

RationalRow LinearSpan::to_row(const LinForm& f) const {
  RationalRow row(symbols_.size() + 1, Rational(0));
  for (const auto& [name, c] : f.terms()) {
    auto it = std::find(symbols_.begin(), symbols_.end(), name);
    if (it == symbols_.end()) throw UsageError("symbol '" + name + "' outside the span's columns");
    row[static_cast<std::size_t>(it - symbols_.begin())] = c;
  }
  row.back() = f.constant();
  return row;
}

LinForm LinearSpan::from_row(const RationalRow& row) const {
  LinForm f(row.back());
  for (std::size_t i = 0; i < symbols_.size(); ++i) f += LinForm::symbol(symbols_[i], row[i]);
  return f;
}

void LinearSpan::add(const LinForm& f, std::string label) {
  to_row(f);  // column check
  generators_.push_back(f);
  labels_.push_back(std::move(label));
}

std::size_t LinearSpan::rank() const {
  std::vector<RationalRow> rows;
  for (const auto& g : generators_) rows.push_back(to_row(g));
  return rref(rows).size();
}

std::vector<LinForm> LinearSpan::basis() const {
  std::vector<RationalRow> rows;
  for (const auto& g : generators_) rows.push_back(to_row(g));
  rref(rows);
  std::vector<LinForm> out;
  for (const auto& row : rows) out.push_back(from_row(row).primitive(symbols_));
  return out;
}

std::optional<std::vector<Rational>> LinearSpan::express(const LinForm& f) const {
  const std::size_t m = generators_.size();
  std::vector<RationalRow> rows;
  std::vector<RationalRow> track;
  for (std::size_t i = 0; i < m; ++i) {
    rows.push_back(to_row(generators_[i]));
    RationalRow t(m, Rational(0));
    t[i] = 1;
    track.push_back(std::move(t));
  }
  auto pivots = rref(rows, &track);
  RationalRow target = to_row(f);
  std::vector<Rational> combo(m, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Rational coeff = target[pivots[i]];
    if (coeff == 0) continue;
    for (std::size_t j = 0; j < target.size(); ++j) target[j] -= coeff * rows[i][j];
    for (std::size_t j = 0; j < m; ++j) combo[j] += coeff * track[i][j];
  }
  if (!std::all_of(target.begin(), target.end(), [](const Rational& x) { return x == 0; })) {
    return std::nullopt;
  }
  return combo;
}

}  // namespace k3cy
