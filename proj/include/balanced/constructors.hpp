#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "balanced/configuration.hpp"
#include "balanced/matrix.hpp"

namespace balanced {

using AdjacencyMatrix = Matrix<int>;

struct SrgParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;
  /// Complete multipartite graph (mu = k) or a disjoint union of cliques
  /// (mu = 0). Their spectral embeddings are excluded.
  bool degenerate = false;
};

/// Reads off (n, k, lambda, mu). Throws InputError if the matrix is not a
/// 0/1 symmetric adjacency matrix, or if the graph is not strongly regular
/// (the message names the first offending vertex or pair).
SrgParams srg_params(const AdjacencyMatrix& a);

/// Non-principal eigenvalue to project onto.
enum class Eigenspace { larger, smaller };

/// Normalized projection of the standard basis onto one non-principal
/// eigenspace. Throws InputError when the eigenvalues are irrational, the
/// graph is degenerate, or the eigenspace has dimension < 2.
Configuration srg_spectral_embedding(const AdjacencyMatrix& a, Eigenspace choice = Eigenspace::larger);

/// The 25-vertex (25,12,5,6) graph with trivial automorphism group.
AdjacencyMatrix paulus_asymmetric_graph();
AdjacencyMatrix complement(const AdjacencyMatrix& a);
AdjacencyMatrix petersen_graph();
AdjacencyMatrix cycle_graph(std::size_t n);

/// Edge midpoints of a regular n-simplex on Sⁿ⁻¹, labelled by vertex pairs
/// of {1..n+1} in lexicographic order. Requires n >= 3.
Configuration simplex_midpoints(unsigned n);

/// Replaces four points with pairwise inner product -1/3 by their
/// antipodes. Throws InputError if the four indices do not form such a
/// tetrahedron.
Configuration invert_tetrahedron(const Configuration& c, const std::array<std::size_t, 4>& tetra);

/// simplex_midpoints(7) with the tetrahedron {12, 34, 56, 78} inverted.
Configuration c7_prime();
/// Indices of 12, 34, 56, 78 in simplex_midpoints(7).
std::array<std::size_t, 4> c7_distinguished_points();

/// Number of 4-point subsets containing i with all pairwise inner
/// products -1/3.
std::size_t count_tetrahedra(const Configuration& c, std::size_t i);

/// C ∪ -C. Throws InputError if C already contains an antipodal pair.
Configuration antipodal_union(const Configuration& c);

Configuration cube();
Configuration cross_polytope(unsigned n);
/// Regular simplex of n+1 points in Rⁿ.
Configuration regular_simplex(unsigned n);

/// "cube", "cross-polytope" (uses n) or "simplex" (uses n). Throws
/// InputError for other names.
Configuration standard_polytope(std::string_view name, unsigned n = 3);

}  // namespace balanced
