#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schurplan/matrix.hpp"
#include "schurplan/numeric.hpp"
#include "schurplan/partition.hpp"
#include "schurplan/ring.hpp"
#include "schurplan/tableaux.hpp"

namespace schurplan {

/// Sparse element of the Schur module in the canonical SSYT basis:
/// basis index -> coefficient. Zero coefficients are never stored.
template <Ring R>
using TableauCombination = std::map<std::size_t, typename R::Element>;

/// Rewrites column-strict fillings as integer combinations of semistandard
/// tableaux, using column antisymmetry and the adjacent-column exchange
/// relations. Coefficient arithmetic is over Z; results push forward to any
/// ring. Memoized per instance; instances are not thread-safe, create one
/// per concurrent computation.
class Straightener {
 public:
  using Cols = std::vector<std::vector<int>>;

  /// Sorts each column ascending, tracking the sign of the permutation.
  /// Returns nullopt when some column has a repeated entry.
  static std::optional<std::pair<Cols, int>> canonicalize(Cols cols) {
    int sign = 1;
    for (auto& col : cols) {
      for (std::size_t i = 1; i < col.size(); ++i) {
        int v = col[i];
        std::size_t j = i;
        while (j > 0 && col[j - 1] > v) {
          col[j] = col[j - 1];
          --j;
          sign = -sign;
        }
        col[j] = v;
      }
      for (std::size_t i = 1; i < col.size(); ++i) {
        if (col[i] == col[i - 1]) return std::nullopt;
      }
    }
    return std::make_pair(std::move(cols), sign);
  }

  /// Input columns must each be strictly increasing.
  const std::map<Cols, Int>& straighten_sorted(const Cols& cols) {
    auto it = memo_.find(cols);
    if (it != memo_.end()) return it->second;
    if (++steps_ > kStepLimit) throw std::runtime_error("straighten: step limit exceeded");

    std::map<Cols, Int> result;
    auto violation = find_violation(cols);
    if (!violation) {
      result.emplace(cols, 1);
      return memo_.emplace(cols, std::move(result)).first->second;
    }
    const auto [j, k] = *violation;
    const std::vector<int>& a = cols[j];
    const std::vector<int>& b = cols[j + 1];
    const std::size_t t = k + 1;  // exchange the top t entries of the right column

    std::vector<std::size_t> pick(t);
    for (std::size_t i = 0; i < t; ++i) pick[i] = i;
    while (true) {
      Cols next = cols;
      std::vector<int>& na = next[j];
      std::vector<int>& nb = next[j + 1];
      for (std::size_t i = 0; i < t; ++i) {
        na[pick[i]] = b[i];
        nb[i] = a[pick[i]];
      }
      if (auto canon = canonicalize(std::move(next))) {
        for (const auto& [scols, c] : straighten_sorted(canon->first)) {
          Int& acc = result[scols];
          acc += canon->second * c;
          if (acc == 0) result.erase(scols);
        }
      }
      // next t-combination of positions in the left column
      std::size_t i = t;
      while (i-- > 0) {
        if (pick[i] + (t - i) <= a.size() - 1) {
          ++pick[i];
          for (std::size_t q = i + 1; q < t; ++q) pick[q] = pick[q - 1] + 1;
          break;
        }
        if (i == 0) {
          return memo_.emplace(cols, std::move(result)).first->second;
        }
      }
    }
  }

 private:
  static std::optional<std::pair<std::size_t, std::size_t>> find_violation(const Cols& cols) {
    for (std::size_t j = 0; j + 1 < cols.size(); ++j) {
      for (std::size_t k = 0; k < cols[j + 1].size(); ++k) {
        if (cols[j][k] > cols[j + 1][k]) return std::make_pair(j, k);
      }
    }
    return std::nullopt;
  }

  static constexpr std::size_t kStepLimit = 10000000;
  std::size_t steps_ = 0;
  std::map<Cols, std::map<Cols, Int>> memo_;
};

namespace detail {

inline std::map<Straightener::Cols, std::size_t> basis_index(const std::vector<Filling>& basis) {
  std::map<Straightener::Cols, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i].columns(), i);
  return idx;
}

}  // namespace detail

/// Class of the column-wedge element of `f` in the Schur module, expressed
/// in the canonical SSYT basis. Zero when a column repeats an entry;
/// identity on tableaux that are already semistandard.
template <Ring R>
TableauCombination<R> straighten(const R& ring, const Filling& f, std::size_t basis_limit = 100000) {
  TableauCombination<R> out;
  auto canon = Straightener::canonicalize(f.columns());
  if (!canon) return out;
  const auto basis = ssyt_enumerate(f.shape(), f.alphabet(), basis_limit);
  const auto idx = detail::basis_index(basis);
  Straightener st;
  for (const auto& [cols, c] : st.straighten_sorted(canon->first)) {
    out.emplace(idx.at(cols), ring.from_integer(Int(canon->second) * c));
  }
  return out;
}

/// Matrix of the induced action of g on the Schur module V^lambda in the
/// canonical SSYT basis. Accepts any square matrix; multiplicativity holds
/// for all g, h since the construction is functorial in End(V).
template <Ring R>
RingMatrix<R> schur_matrix(const R& ring, const RingMatrix<R>& g, const YoungDiagram& lambda,
                           std::size_t basis_limit = 100000) {
  if (!g.square()) throw std::invalid_argument("schur_matrix: matrix not square");
  const long n = static_cast<long>(g.rows());
  const Int count = ssyt_count(lambda, n == 0 ? 1 : n);
  if (n == 0 || count == 0) return RingMatrix<R>::zero(ring, 0, 0);
  if (count > basis_limit) throw BasisTooLarge("basis too large: " + count.str() + " tableaux");

  const auto basis = ssyt_enumerate(lambda, n, basis_limit);
  const auto idx = detail::basis_index(basis);
  const std::size_t N = basis.size();
  RingMatrix<R> out = RingMatrix<R>::zero(ring, N, N);
  Straightener st;

  using Elem = typename R::Element;
  for (std::size_t bcol = 0; bcol < N; ++bcol) {
    const auto tcols = basis[bcol].columns();
    // wedge image of each column: sum over row subsets U of minors det g[U, entries]
    std::vector<std::vector<std::pair<std::vector<int>, Elem>>> column_terms;
    for (const auto& col : tcols) {
      const std::size_t d = col.size();
      std::vector<std::pair<std::vector<int>, Elem>> terms;
      std::vector<int> u(d);
      for (std::size_t i = 0; i < d; ++i) u[i] = static_cast<int>(i) + 1;
      while (true) {
        RingMatrix<R> sub = RingMatrix<R>::zero(ring, d, d);
        for (std::size_t r = 0; r < d; ++r) {
          for (std::size_t c = 0; c < d; ++c) {
            sub.at(r, c) = g.at(static_cast<std::size_t>(u[r] - 1),
                                static_cast<std::size_t>(col[c] - 1));
          }
        }
        Elem minor = det(ring, sub);
        if (!ring.eq(minor, ring.zero())) terms.emplace_back(u, std::move(minor));
        std::size_t i = d;
        bool advanced = false;
        while (i-- > 0) {
          if (u[i] + static_cast<int>(d - i) <= static_cast<int>(n)) {
            ++u[i];
            for (std::size_t q = i + 1; q < d; ++q) u[q] = u[q - 1] + 1;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
      column_terms.push_back(std::move(terms));
    }

    // a column with no nonzero minors annihilates the whole image
    bool dead_column = false;
    for (const auto& terms : column_terms) {
      if (terms.empty()) dead_column = true;
    }
    if (dead_column) continue;

    // cartesian product over columns, straighten each resulting filling
    std::vector<std::size_t> choice(column_terms.size(), 0);
    while (true) {
      Elem coeff = ring.one();
      Straightener::Cols cols(column_terms.size());
      for (std::size_t c = 0; c < column_terms.size(); ++c) {
        const auto& [u, minor] = column_terms[c][choice[c]];
        coeff = ring.mul(coeff, minor);
        cols[c] = u;
      }
      for (const auto& [scols, sc] : st.straighten_sorted(cols)) {
        const std::size_t row = idx.at(scols);
        out.at(row, bcol) = ring.add(out.at(row, bcol), ring.mul(coeff, ring.from_integer(sc)));
      }
      std::size_t c = column_terms.size();
      bool advanced = false;
      while (c-- > 0) {
        if (++choice[c] < column_terms[c].size()) {
          advanced = true;
          break;
        }
        choice[c] = 0;
      }
      if (!advanced) break;
    }
  }
  return out;
}

/// phi_lambda(x I_n) = x^{|lambda|} I_N.
template <Ring R>
bool scalar_law_check(const R& ring, const typename R::Element& x, const YoungDiagram& lambda,
                      std::size_t n, std::size_t basis_limit = 100000) {
  const RingMatrix<R> phi = schur_matrix(ring, scalar_matrix(ring, n, x), lambda, basis_limit);
  const RingMatrix<R> expected =
      scalar_matrix(ring, phi.rows(), ring_pow(ring, x, lambda.size()));
  return mat_eq(ring, phi, expected);
}

/// Checks functoriality in the coefficient ring: reducing mod q commutes
/// with taking the Schur matrix.
inline bool reduction_compatibility_check(const RingMatrix<IntegerRing>& g,
                                          const YoungDiagram& lambda, const Int& q,
                                          std::size_t basis_limit = 100000) {
  IntegerRing zz;
  ModularRing zq(q);
  const RingMatrix<IntegerRing> over_z = schur_matrix(zz, g, lambda, basis_limit);
  RingMatrix<ModularRing> reduced_after = RingMatrix<ModularRing>::zero(zq, over_z.rows(), over_z.cols());
  for (std::size_t i = 0; i < over_z.rows(); ++i) {
    for (std::size_t j = 0; j < over_z.cols(); ++j) {
      reduced_after.at(i, j) = zq.from_integer(over_z.at(i, j));
    }
  }
  RingMatrix<ModularRing> g_mod = RingMatrix<ModularRing>::zero(zq, g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) g_mod.at(i, j) = zq.from_integer(g.at(i, j));
  }
  const RingMatrix<ModularRing> reduced_before = schur_matrix(zq, g_mod, lambda, basis_limit);
  return mat_eq(zq, reduced_after, reduced_before);
}

}  // namespace schurplan
