#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "schurplan/numeric.hpp"
#include "schurplan/partition.hpp"

namespace schurplan {

struct BasisTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One entry per box of the shape, row-major, entries in [1, alphabet].
class Filling {
 public:
  Filling(YoungDiagram shape, std::vector<int> entries, int alphabet)
      : shape_(std::move(shape)), entries_(std::move(entries)), alphabet_(alphabet) {
    if (static_cast<long>(entries_.size()) != shape_.size()) {
      throw std::invalid_argument("Filling: entry count does not match shape");
    }
    if (alphabet_ < 1) throw std::invalid_argument("Filling: alphabet must be positive");
    for (int e : entries_) {
      if (e < 1 || e > alphabet_) throw std::invalid_argument("Filling: entry out of range");
    }
  }

  const YoungDiagram& shape() const { return shape_; }
  int alphabet() const { return alphabet_; }

  int at(std::size_t row, std::size_t col) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < row; ++i) off += static_cast<std::size_t>(shape_.row(i));
    return entries_[off + col];
  }

  /// Entries grouped by column, top to bottom.
  std::vector<std::vector<int>> columns() const {
    const auto conj = shape_.conjugate();
    std::vector<std::vector<int>> cols(conj.size());
    for (std::size_t j = 0; j < conj.size(); ++j) cols[j].reserve(static_cast<std::size_t>(conj[j]));
    std::size_t off = 0;
    for (std::size_t i = 0; i < shape_.rows(); ++i) {
      for (long j = 0; j < shape_.row(i); ++j) {
        cols[static_cast<std::size_t>(j)].push_back(entries_[off++]);
      }
    }
    return cols;
  }

  /// Column reading word: each column bottom-to-top, columns left-to-right.
  std::vector<int> column_word() const {
    std::vector<int> word;
    word.reserve(entries_.size());
    for (const auto& col : columns()) {
      for (auto it = col.rbegin(); it != col.rend(); ++it) word.push_back(*it);
    }
    return word;
  }

  bool operator==(const Filling& o) const {
    return shape_ == o.shape_ && entries_ == o.entries_ && alphabet_ == o.alphabet_;
  }

 private:
  YoungDiagram shape_;
  std::vector<int> entries_;
  int alphabet_;
};

inline Filling filling_from_columns(const YoungDiagram& shape,
                                    const std::vector<std::vector<int>>& cols, int alphabet) {
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(shape.size()));
  for (std::size_t i = 0; i < shape.rows(); ++i) {
    for (long j = 0; j < shape.row(i); ++j) {
      entries.push_back(cols[static_cast<std::size_t>(j)][i]);
    }
  }
  return Filling(shape, std::move(entries), alphabet);
}

/// Rows weakly increasing, columns strictly increasing.
inline bool is_semistandard(const Filling& f) {
  const auto& shape = f.shape();
  for (std::size_t i = 0; i < shape.rows(); ++i) {
    for (long j = 1; j < shape.row(i); ++j) {
      if (f.at(i, static_cast<std::size_t>(j - 1)) > f.at(i, static_cast<std::size_t>(j))) return false;
    }
  }
  for (std::size_t i = 1; i < shape.rows(); ++i) {
    for (long j = 0; j < shape.row(i); ++j) {
      if (f.at(i - 1, static_cast<std::size_t>(j)) >= f.at(i, static_cast<std::size_t>(j))) return false;
    }
  }
  return true;
}

/// Exact SSYT count by the hook-content formula, prod (n + content) / hook.
/// Returns 0 when the shape has more than n rows.
inline Int ssyt_count(const YoungDiagram& lambda, long n) {
  if (n < 1) throw std::invalid_argument("ssyt_count: alphabet must be positive");
  const auto conj = lambda.conjugate();
  Int num = 1;
  Int den = 1;
  for (std::size_t i = 0; i < lambda.rows(); ++i) {
    for (long j = 0; j < lambda.row(i); ++j) {
      long factor = n + YoungDiagram::content(i, static_cast<std::size_t>(j));
      if (factor <= 0) return 0;
      num *= factor;
      den *= lambda.hook(i, static_cast<std::size_t>(j), conj);
    }
  }
  return num / den;  // exact: the hook-content product is an integer
}

namespace detail {

inline void ssyt_backtrack(const YoungDiagram& shape, const std::vector<long>& conj, long n,
                           std::vector<std::vector<int>>& cols, std::size_t col, std::size_t row,
                           std::vector<Filling>& out) {
  if (col == conj.size()) {
    out.push_back(filling_from_columns(shape, cols, static_cast<int>(n)));
    return;
  }
  if (row == static_cast<std::size_t>(conj[col])) {
    ssyt_backtrack(shape, conj, n, cols, col + 1, 0, out);
    return;
  }
  int lo = 1;
  if (row > 0) lo = std::max(lo, cols[col][row - 1] + 1);     // strict down the column
  if (col > 0) lo = std::max(lo, cols[col - 1][row]);          // weak along the row
  for (int v = lo; v <= n; ++v) {
    cols[col][row] = v;
    ssyt_backtrack(shape, conj, n, cols, col, row + 1, out);
  }
}

}  // namespace detail

/// All SSYT of the shape with entries <= n, sorted lexicographically by
/// column reading word. Refuses when the count exceeds `limit`.
inline std::vector<Filling> ssyt_enumerate(const YoungDiagram& lambda, long n,
                                           std::size_t limit = 100000) {
  Int count = ssyt_count(lambda, n);
  if (count > limit) throw BasisTooLarge("basis too large: " + count.str() + " tableaux");
  const auto conj = lambda.conjugate();
  std::vector<std::vector<int>> cols(conj.size());
  for (std::size_t j = 0; j < conj.size(); ++j) cols[j].assign(static_cast<std::size_t>(conj[j]), 0);
  std::vector<Filling> out;
  if (static_cast<long>(lambda.rows()) <= n) {
    detail::ssyt_backtrack(lambda, conj, n, cols, 0, 0, out);
  }
  std::sort(out.begin(), out.end(), [](const Filling& a, const Filling& b) {
    return a.column_word() < b.column_word();
  });
  if (Int(out.size()) != count) {
    throw std::logic_error("ssyt_enumerate: enumeration disagrees with hook-content count");
  }
  return out;
}

}  // namespace schurplan
