#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurplan/ring.hpp"

namespace schurplan {

/// Dense row-major matrix over a coefficient ring.
template <Ring R>
class RingMatrix {
 public:
  using Elem = typename R::Element;

  RingMatrix(std::size_t rows, std::size_t cols, Elem fill)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static RingMatrix zero(const R& ring, std::size_t rows, std::size_t cols) {
    return RingMatrix(rows, cols, ring.zero());
  }

  static RingMatrix identity(const R& ring, std::size_t n) {
    RingMatrix m(n, n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

template <Ring R>
RingMatrix<R> mat_mul(const R& ring, const RingMatrix<R>& a, const RingMatrix<R>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  RingMatrix<R> c = RingMatrix<R>::zero(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.at(i, j) = ring.add(c.at(i, j), ring.mul(a.at(i, k), b.at(k, j)));
      }
    }
  }
  return c;
}

template <Ring R>
bool mat_eq(const R& ring, const RingMatrix<R>& a, const RingMatrix<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!ring.eq(a.at(i, j), b.at(i, j))) return false;
    }
  }
  return true;
}

template <Ring R>
RingMatrix<R> scalar_matrix(const R& ring, std::size_t n, const typename R::Element& x) {
  RingMatrix<R> m = RingMatrix<R>::zero(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = x;
  return m;
}

/// Determinant by Laplace expansion along the first column; division-free,
/// intended for the small minors the Schur construction needs.
template <Ring R>
typename R::Element det(const R& ring, const RingMatrix<R>& m) {
  if (!m.square()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return ring.one();
  if (n == 1) return m.at(0, 0);
  typename R::Element acc = ring.zero();
  for (std::size_t i = 0; i < n; ++i) {
    RingMatrix<R> sub = RingMatrix<R>::zero(ring, n - 1, n - 1);
    for (std::size_t r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 1; c < n; ++c) sub.at(rr, c - 1) = m.at(r, c);
      ++rr;
    }
    typename R::Element term = ring.mul(m.at(i, 0), det(ring, sub));
    acc = ring.add(acc, (i % 2 == 0) ? term : ring.neg(term));
  }
  return acc;
}

/// Parses the CLI matrix text format: one row per line, whitespace-separated
/// ring elements.
template <Ring R>
RingMatrix<R> parse_matrix(const R& ring, const std::string& text) {
  std::vector<std::vector<typename R::Element>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<typename R::Element> row;
    std::string tok;
    while (fields >> tok) row.push_back(ring.parse(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("parse_matrix: no rows");
  const std::size_t cols = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("parse_matrix: ragged rows");
  }
  RingMatrix<R> m = RingMatrix<R>::zero(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

template <Ring R>
std::string format_matrix(const R& ring, const RingMatrix<R>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += ring.str(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace schurplan
