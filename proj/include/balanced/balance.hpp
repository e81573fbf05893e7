#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "balanced/configuration.hpp"

namespace balanced {

/// Points at one exact inner product from the base point.
struct Shell {
  Rational value;
  std::vector<std::size_t> members;
};

/// Partition of all other points by inner product with `base`, ascending.
struct ShellDecomposition {
  std::size_t base = 0;
  std::vector<Shell> shells;
};

struct ShellViolation {
  std::size_t point = 0;
  /// Inner product (spherical) or squared distance (Euclidean) of the shell.
  Rational shell_value;
  /// Spherical: ⟨S_u(x) − c·x, x_m⟩ for every point m, c = ⟨S_u(x), x⟩.
  /// Euclidean: Σ (y − x) over the shell, one entry per coordinate.
  std::vector<Rational> deviation;
};

struct BalanceReport {
  bool balanced = true;
  std::vector<ShellViolation> violations;
};

/// Throws std::out_of_range if `i` is not a point index.
ShellDecomposition shell_decomposition(const Configuration& c, std::size_t i);

/// Exact shell-sum test on the Gram matrix. Violations are reported in
/// point order, then ascending shell value. `threads` > 1 evaluates points
/// concurrently; the result does not depend on it.
BalanceReport check_balanced(const Configuration& c, unsigned threads = 1);

/// A finite point set in Rⁿ, or a periodic one given by a motif of
/// translation-class representatives plus a lattice basis (rows).
struct EuclideanPointSet {
  std::vector<std::vector<Rational>> points;
  std::optional<RationalMatrix> period;
  /// Only distances up to `cutoff` are checked. Required when periodic.
  std::optional<Rational> cutoff;
};

/// Centroid test: every nonempty distance shell around every point must
/// have that point as its centroid. Throws InputError on malformed input or
/// when the cutoff leaves no shell at all.
BalanceReport check_balanced_euclidean(const EuclideanPointSet& input);

}  // namespace balanced
