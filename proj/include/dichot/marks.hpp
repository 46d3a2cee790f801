#pragma once

// Table of marks over a subgroup traversal and its exact inverse.
//
// Row i, column j holds (1/|G_j|) * #{s in G : s G_i s^-1 <= G_j}.  With the
// traversal in descending order the matrix is lower triangular.

#include <cstdint>
#include <string>
#include <vector>

#include "dichot/errors.hpp"
#include "dichot/lattice.hpp"
#include "dichot/parallel.hpp"
#include "dichot/polynomial.hpp"

namespace dichot {

template <typename T>
class LowerTriangular {
 public:
  LowerTriangular() = default;
  explicit LowerTriangular(std::size_t n) : rows_(n) {
    for (std::size_t i = 0; i < n; ++i) rows_[i].assign(i + 1, T(0));
  }

  std::size_t size() const { return rows_.size(); }
  /// Entry (i, j); zero above the diagonal.
  T at(std::size_t i, std::size_t j) const { return j <= i ? rows_[i][j] : T(0); }
  T& ref(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const std::vector<T>& row(std::size_t i) const { return rows_[i]; }

  bool operator==(const LowerTriangular&) const = default;

 private:
  std::vector<std::vector<T>> rows_;
};

using MarksMatrix = LowerTriangular<std::int64_t>;
using InverseMarks = LowerTriangular<Rational>;

inline MarksMatrix table_of_marks([[maybe_unused]] const FiniteGroup& G,
                                  const SubgroupClassTraversal& T,
                                  unsigned threads = 0) {
  const std::size_t N = T.size();
  MarksMatrix M(N);
  parallel_for(
      N,
      [&](std::size_t i) {
        const auto& gi = T[i];
        const std::size_t oi = gi.representative.order;
        for (std::size_t j = 0; j <= i; ++j) {
          const auto& gj = T[j].representative;
          if (gj.order % oi != 0) continue;
          std::int64_t contained = 0;
          for (const auto& c : gi.conjugates)
            if (c.is_subset_of(gj.members)) ++contained;
          const std::int64_t total = contained * static_cast<std::int64_t>(gi.normalizer_order);
          ensure(total % static_cast<std::int64_t>(gj.order) == 0,
                 "table of marks: inexact division at (" + std::to_string(i) + ", " +
                     std::to_string(j) + ")");
          M.ref(i, j) = total / static_cast<std::int64_t>(gj.order);
        }
        ensure(M.at(i, i) > 0, "table of marks: zero diagonal");
      },
      threads);
  return M;
}

/// Column indices with a nonzero entry left of the diagonal, per row.
inline std::vector<std::vector<std::size_t>> strict_lower_support(const MarksMatrix& M) {
  std::vector<std::vector<std::size_t>> out(M.size());
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (M.at(i, j) != 0) out[i].push_back(j);
  return out;
}

/// Exact inverse by forward substitution; the product is checked before return.
inline InverseMarks invert_marks(const MarksMatrix& M) {
  const std::size_t N = M.size();
  for (std::size_t i = 0; i < N; ++i)
    if (M.at(i, i) == 0) throw InvariantError("invert_marks: zero on the diagonal");
  const auto support = strict_lower_support(M);
  InverseMarks B(N);
  for (std::size_t j = 0; j < N; ++j) {
    B.ref(j, j) = Rational(1, M.at(j, j));
    B.ref(j, j).canonicalize();
    for (std::size_t i = j + 1; i < N; ++i) {
      Rational acc = 0;
      for (std::size_t l : support[i])
        if (l >= j) acc += M.at(i, l) * B.at(l, j);
      if (sgn(acc) != 0) {
        acc /= M.at(i, i);
        B.ref(i, j) = -acc;
      }
    }
  }
  return B;
}

/// M * B == I, exactly.
inline bool is_inverse(const MarksMatrix& M, const InverseMarks& B) {
  const std::size_t N = M.size();
  if (B.size() != N) return false;
  const auto support = strict_lower_support(M);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rational acc = M.at(i, i) * B.at(i, j);
      for (std::size_t l : support[i])
        if (l >= j) acc += M.at(i, l) * B.at(l, j);
      if (acc != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

inline InverseMarks checked_inverse(const MarksMatrix& M) {
  auto B = invert_marks(M);
  ensure(is_inverse(M, B), "invert_marks: M * B != I");
  return B;
}

/// Solves M * X = rhs by forward substitution; X = B * rhs without forming B.
template <typename V>
std::vector<V> solve_lower(const MarksMatrix& M, const std::vector<V>& rhs) {
  const std::size_t N = M.size();
  ensure(rhs.size() == N, "solve_lower: size mismatch");
  const auto support = strict_lower_support(M);
  std::vector<V> x(N);
  for (std::size_t i = 0; i < N; ++i) {
    V acc = rhs[i];
    for (std::size_t l : support[i]) acc -= x[l] * Rational(M.at(i, l));
    acc *= Rational(1, M.at(i, i));
    x[i] = std::move(acc);
  }
  return x;
}

/// Denominators of B dividing |G|: observed on all tested groups, not a theorem.
inline bool denominators_divide(const InverseMarks& B, std::size_t group_order) {
  for (std::size_t i = 0; i < B.size(); ++i)
    for (const auto& b : B.row(i))
      if (group_order % b.get_den().get_ui() != 0) return false;
  return true;
}

}  // namespace dichot
