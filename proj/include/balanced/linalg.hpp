#pragma once

#include <cstddef>
#include <vector>

#include "balanced/matrix.hpp"

namespace balanced {

/// Rank over Q of an arbitrary rational matrix (exact Gaussian elimination).
std::size_t rank(const RationalMatrix& m);

/// Rank of a symmetric matrix. Throws InputError if `g` is not square and
/// symmetric.
std::size_t gram_rank(const RationalMatrix& g);

/// P·G·Pᵀ = L·D·Lᵀ with L unit lower triangular and D diagonal.
///
/// `permutation[k]` is the row of G placed at position k. Pivots are chosen
/// as the first remaining nonzero diagonal entry, so the identity
/// permutation is used whenever no zero pivot is met.
struct LdlDecomposition {
  RationalMatrix lower;
  std::vector<Rational> pivots;
  std::vector<std::size_t> permutation;

  /// Number of nonzero pivots.
  [[nodiscard]] std::size_t rank() const;
  /// True iff every pivot is >= 0.
  [[nodiscard]] bool nonnegative() const;
};

/// Symmetric LDLᵀ with diagonal pivoting.
///
/// Throws InputError on non-symmetric input. Throws std::domain_error when
/// the remaining block has an all-zero diagonal but a nonzero off-diagonal
/// entry: such a matrix is indefinite and admits no LDLᵀ with 1×1 pivots.
LdlDecomposition ldl_decompose(const RationalMatrix& g);

/// Exact positive-semidefiniteness test built on ldl_decompose.
bool is_positive_semidefinite(const RationalMatrix& g);

/// Exact positive-definiteness test built on ldl_decompose.
bool is_positive_definite(const RationalMatrix& g);

bool is_symmetric(const RationalMatrix& g);

}  // namespace balanced
