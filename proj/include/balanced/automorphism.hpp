#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "balanced/configuration.hpp"
#include "balanced/matrix.hpp"
#include "balanced/permutation_group.hpp"

namespace balanced {

/// Complete graph with colored edges (and optionally colored vertices).
///
/// For a configuration, edge colors index the distinct off-diagonal Gram
/// values in ascending order, so automorphisms are exactly the
/// Gram-preserving permutations.
class ColoredGraph {
 public:
  /// `edge_colors` is n×n and symmetric; its diagonal is ignored.
  ColoredGraph(Matrix<std::uint32_t> edge_colors, std::vector<std::uint32_t> vertex_colors = {});

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::uint32_t color(std::size_t i, std::size_t j) const { return colors_[i * n_ + j]; }
  [[nodiscard]] std::uint32_t vertex_color(std::size_t i) const { return vertex_colors_[i]; }
  /// Number of distinct off-diagonal colors (dense 0..count-1).
  [[nodiscard]] std::size_t color_count() const { return color_count_; }

  /// True iff `p` preserves every edge and vertex color.
  [[nodiscard]] bool is_automorphism(const Permutation& p) const;

 private:
  std::size_t n_ = 0;
  std::size_t color_count_ = 0;
  // Diagonal entries hold color_count_, a color no edge uses.
  std::vector<std::uint32_t> colors_;
  std::vector<std::uint32_t> vertex_colors_;
};

ColoredGraph colored_graph_from_config(const Configuration& c);

/// Two edge colors: 0 for non-edges, 1 for edges. Throws InputError unless
/// the matrix is square, symmetric, 0/1 with zero diagonal.
ColoredGraph colored_graph_from_adjacency(const Matrix<int>& adjacency);

struct AutomorphismSearchStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  /// Orbit sizes of the first-path vertices, deepest level last.
  std::vector<std::size_t> level_orbits;
};

/// Full automorphism group by individualization-refinement.
///
/// Refinement is to the coarsest equitable partition; the target cell is
/// the first smallest non-singleton cell; branches are taken in ascending
/// vertex order. Generators found at leaves prune later branches by orbit.
/// The group order from the search is cross-checked against Schreier-Sims.
PermutationGroup automorphism_group(const ColoredGraph& g, AutomorphismSearchStats* stats = nullptr);

}  // namespace balanced
