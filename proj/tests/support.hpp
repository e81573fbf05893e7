#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The
// oracles deliberately avoid the library's own algorithms.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "balanced/constructors.hpp"
#include "balanced/io.hpp"
#include "balanced/lattice.hpp"

namespace testing {

using balanced::Configuration;

struct Named {
  std::string name;
  Configuration config;
};

/// Every exact configuration the project ships or constructs. `heavy`
/// adds the 756-point K12 kissing configuration.
inline std::vector<Named> bundled_configurations(bool heavy = false) {
  using namespace balanced;
  std::vector<Named> out;
  out.push_back({"cube", cube()});
  out.push_back({"cross-polytope 3", cross_polytope(3)});
  out.push_back({"cross-polytope 4", cross_polytope(4)});
  out.push_back({"simplex 3", regular_simplex(3)});
  out.push_back({"simplex 5", regular_simplex(5)});
  for (unsigned n = 3; n <= 8; ++n) out.push_back({"C" + std::to_string(n), simplex_midpoints(n)});
  out.push_back({"C'7", c7_prime()});
  out.push_back({"C7 u -C7", antipodal_union(simplex_midpoints(7))});
  const AdjacencyMatrix fig1 = load_graph("figure1");
  out.push_back({"figure1 r", srg_spectral_embedding(fig1, Eigenspace::larger)});
  out.push_back({"figure1 s", srg_spectral_embedding(fig1, Eigenspace::smaller)});
  out.push_back({"figure1 complement r", srg_spectral_embedding(complement(fig1), Eigenspace::larger)});
  out.push_back({"figure1 complement s", srg_spectral_embedding(complement(fig1), Eigenspace::smaller)});
  out.push_back({"petersen r", srg_spectral_embedding(petersen_graph(), Eigenspace::larger)});
  out.push_back({"petersen s", srg_spectral_embedding(petersen_graph(), Eigenspace::smaller)});
  out.push_back({"D4 kissing", kissing_configuration(load_lattice("d4"))});
  out.push_back({"E8 kissing", kissing_configuration(load_lattice("e8"))});
  if (heavy) out.push_back({"K12 kissing", kissing_configuration(load_lattice("k12"))});
  return out;
}

/// Rank by Gauss-Jordan on raw mpq_class, choosing the largest pivot.
inline std::size_t oracle_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < rows; ++r) {
      if (abs(m[r][col]) > abs(m[best][col])) best = r;
    }
    if (m[best][col] == 0) continue;
    std::swap(m[rank], m[best]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const mpq_class f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<mpq_class>> to_mpq(const balanced::RationalMatrix& g) {
  std::vector<std::vector<mpq_class>> out(g.rows(), std::vector<mpq_class>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out[i][j] = g(i, j).raw();
  }
  return out;
}

using Perm = std::vector<std::size_t>;

/// All elements of the group generated by `gens`, by breadth-first closure.
inline std::set<Perm> group_elements(std::size_t degree, const std::vector<Perm>& gens) {
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        Perm q(degree);
        for (std::size_t i = 0; i < degree; ++i) q[i] = g[p[i]];
        if (seen.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// All permutations of {0..n-1} accepted by `keep` (n <= 9).
inline std::vector<Perm> brute_force_permutations(std::size_t n, const std::function<bool(const Perm&)>& keep) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<Perm> out;
  do {
    if (keep(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every coefficient vector in [-b, b]^d with norm m.
inline std::vector<balanced::IntVector> box_brute_force(const balanced::LatticeGram& g, std::int64_t m, std::int64_t b) {
  const std::size_t d = g.dim();
  std::vector<balanced::IntVector> out;
  balanced::IntVector v(d, -b);
  while (true) {
    if (g.norm(v) == m) out.push_back(v);
    std::size_t k = 0;
    while (k < d && v[k] == b) {
      v[k] = -b;
      ++k;
    }
    if (k == d) break;
    ++v[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Box half-width from the dual basis: |x_i| <= sqrt(m · (G⁻¹)_ii).
inline std::int64_t dual_bound(const balanced::LatticeGram& g, std::int64_t m) {
  const std::size_t d = g.dim();
  std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = static_cast<long>(g.entries()(i, j));
    a[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    const mpq_class f = a[c][c];
    for (auto& x : a[c]) x /= f;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c) continue;
      const mpq_class h = a[r][c];
      for (std::size_t k = 0; k < 2 * d; ++k) a[r][k] -= h * a[c][k];
    }
  }
  double worst = 0;
  for (std::size_t i = 0; i < d; ++i) worst = std::max(worst, a[i][d + i].get_d());
  return static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(m) * worst) + 1e-9));
}

}  // namespace testing
