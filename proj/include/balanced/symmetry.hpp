#pragma once

#include <cstddef>
#include <vector>

#include "balanced/automorphism.hpp"
#include "balanced/configuration.hpp"
#include "balanced/permutation_group.hpp"

namespace balanced {

/// Isometry group of a configuration: its Gram-preserving permutations.
PermutationGroup symmetry_group(const Configuration& c);

/// True iff `p` maps the Gram matrix to itself.
bool preserves_gram(const Configuration& c, const Permutation& p);

/// Dimension of the subspace of span(C) fixed by `h`: rank of B·G·Bᵀ with B
/// the orbit-indicator matrix of h. Throws InputError if some generator of
/// `h` does not preserve the Gram matrix.
std::size_t fixed_subspace_dim(const Configuration& c, const PermutationGroup& h);

struct GroupBalanceReport {
  bool group_balanced = true;
  /// Points whose stabilizer fixes more than the line through them.
  std::vector<std::size_t> witnesses;
  /// Fixed-subspace dimension of the stabilizer of every point.
  std::vector<std::size_t> fixed_dims;
};

/// Evaluates one stabilizer per orbit of `group` (the full isometry group)
/// and spreads the dimension over the orbit.
GroupBalanceReport check_group_balanced(const Configuration& c, const PermutationGroup& group);
GroupBalanceReport check_group_balanced(const Configuration& c);

}  // namespace balanced
