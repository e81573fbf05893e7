#include "balanced/symmetry.hpp"

#include "balanced/errors.hpp"
#include "balanced/linalg.hpp"

namespace balanced {

PermutationGroup symmetry_group(const Configuration& c) {
  PermutationGroup group = automorphism_group(colored_graph_from_config(c));
  for (const auto& g : group.generators()) {
    if (!preserves_gram(c, g)) throw ConsistencyError("symmetry generator does not preserve the Gram matrix");
  }
  return group;
}

bool preserves_gram(const Configuration& c, const Permutation& p) {
  if (p.degree() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c.inner(p[i], p[j]) != c.inner(i, j)) return false;
    }
  }
  return true;
}

std::size_t fixed_subspace_dim(const Configuration& c, const PermutationGroup& h) {
  if (h.degree() != c.size()) throw InputError("group degree does not match configuration size");
  for (const auto& g : h.generators()) {
    if (!preserves_gram(c, g)) throw InputError("group does not preserve the Gram matrix");
  }
  // Orbit sums span the fixed space; their Gram matrix is B·G·Bᵀ.
  const auto orbit_list = orbits(h);
  const std::size_t k = orbit_list.size();
  RationalMatrix m(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      Rational s;
      for (std::size_t i : orbit_list[a]) {
        for (std::size_t j : orbit_list[b]) s += c.inner(i, j);
      }
      m(a, b) = s;
      m(b, a) = s;
    }
  }
  return gram_rank(m);
}

GroupBalanceReport check_group_balanced(const Configuration& c, const PermutationGroup& group) {
  GroupBalanceReport out;
  out.fixed_dims.assign(c.size(), 0);
  for (const auto& orbit : orbits(group)) {
    const std::size_t dim = fixed_subspace_dim(c, point_stabilizer(group, orbit.front()));
    for (std::size_t i : orbit) out.fixed_dims[i] = dim;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (out.fixed_dims[i] > 1) out.witnesses.push_back(i);
  }
  out.group_balanced = out.witnesses.empty();
  return out;
}

GroupBalanceReport check_group_balanced(const Configuration& c) {
  return check_group_balanced(c, symmetry_group(c));
}

}  // namespace balanced
