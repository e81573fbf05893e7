#include "balanced/constructors.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "balanced/errors.hpp"
#include "balanced/linalg.hpp"

namespace balanced {

namespace {

std::string pair_name(std::size_t a, std::size_t b) {
  return a < 10 && b < 10 ? std::to_string(a) + std::to_string(b) : std::to_string(a) + "," + std::to_string(b);
}

void check_adjacency(const AdjacencyMatrix& a) {
  if (!a.is_square()) throw InputError("adjacency matrix is not square");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) throw InputError("adjacency matrix has a loop at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0 && a(i, j) != 1) throw InputError("adjacency entries must be 0 or 1");
      if (a(i, j) != a(j, i)) {
        throw InputError("adjacency matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

// Exact integer square root, if there is one.
std::optional<long> isqrt(long v) {
  if (v < 0) return std::nullopt;
  long r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? std::optional<long>(r) : std::nullopt;
}

}  // namespace

SrgParams srg_params(const AdjacencyMatrix& a) {
  check_adjacency(a);
  const std::size_t n = a.rows();
  if (n < 2) throw InputError("graph has fewer than two vertices");
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) degree[i] += static_cast<std::size_t>(a(i, j));
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (degree[i] != degree[0]) {
      throw InputError("not strongly regular: vertex " + std::to_string(i) + " has degree " + std::to_string(degree[i]) +
                       " but vertex 0 has degree " + std::to_string(degree[0]));
    }
  }
  const std::size_t k = degree[0];
  if (k == 0 || k == n - 1) throw InputError("complete and edgeless graphs are not treated as strongly regular");
  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t common = 0;
      for (std::size_t m = 0; m < n; ++m) common += static_cast<std::size_t>(a(i, m) & a(j, m));
      auto& slot = a(i, j) == 1 ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        throw InputError(std::string("not strongly regular: ") + (a(i, j) == 1 ? "adjacent" : "non-adjacent") + " pair (" +
                         std::to_string(i) + ", " + std::to_string(j) + ") has " + std::to_string(common) +
                         " common neighbours, expected " + std::to_string(*slot));
      }
    }
  }
  SrgParams p{n, k, *lambda, *mu, false};
  p.degenerate = p.mu == p.k || p.mu == 0;
  if (k * (k - p.lambda - 1) != (n - k - 1) * p.mu) throw ConsistencyError("SRG feasibility identity fails");
  return p;
}

Configuration srg_spectral_embedding(const AdjacencyMatrix& a, Eigenspace choice) {
  const SrgParams p = srg_params(a);
  if (p.degenerate) throw InputError("complete multipartite graphs and unions of cliques are excluded");
  const long n = static_cast<long>(p.n);
  const long k = static_cast<long>(p.k);
  const long lm = static_cast<long>(p.lambda) - static_cast<long>(p.mu);
  const long disc = lm * lm + 4 * (k - static_cast<long>(p.mu));
  const auto root = isqrt(disc);
  if (!root) throw InputError("irrational eigenvalues: the exact pipeline needs integer SRG eigenvalues");
  // r, s are the roots of z² - (λ-μ)z - (k-μ); the discriminant parity matches λ-μ.
  const long r = (lm + *root) / 2;
  const long s = (lm - *root) / 2;
  const long twice_mult_r = (n - 1) - (2 * k + (n - 1) * lm) / *root;
  if ((2 * k + (n - 1) * lm) % *root != 0 || twice_mult_r % 2 != 0) throw ConsistencyError("non-integral eigenvalue multiplicity");
  const long mult_r = twice_mult_r / 2;
  const long mult_s = n - 1 - mult_r;
  const long chosen = choice == Eigenspace::larger ? r : s;
  const long other = choice == Eigenspace::larger ? s : r;
  const long mult = choice == Eigenspace::larger ? mult_r : mult_s;
  if (mult < 2) throw InputError("chosen eigenspace has dimension " + std::to_string(mult) + " (< 2)");

  // P = (A - other·I - ((k - other)/n)·J) / (chosen - other)
  const std::size_t size = p.n;
  RationalMatrix proj(size, size);
  const Rational denom(chosen - other);
  const Rational flat(k - other, n);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      Rational v(a(i, j));
      if (i == j) v -= Rational(other);
      v -= flat;
      proj(i, j) = v / denom;
    }
  }
  const Rational diag = proj(0, 0);
  for (std::size_t i = 0; i < size; ++i) {
    if (proj(i, i) != diag) throw ConsistencyError("projection diagonal is not constant");
  }
  if (diag != Rational(mult, n)) throw ConsistencyError("projection diagonal disagrees with the multiplicity");
  if (gram_rank(proj) != static_cast<std::size_t>(mult)) throw ConsistencyError("projection rank disagrees with the multiplicity");
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) proj(i, j) /= diag;
  }
  const std::string label = "SRG(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + "," +
                            std::to_string(p.mu) + ") eigenvalue " + std::to_string(chosen);
  auto c = Configuration::from_gram(std::move(proj), label);
  if (c.ambient_dim() != static_cast<std::size_t>(mult)) throw ConsistencyError("embedding dimension mismatch");
  return c;
}

AdjacencyMatrix paulus_asymmetric_graph() {
  static constexpr std::array<std::string_view, 25> rows = {
      "0111111111111000000000000", "1011111000000111111000000", "1101111000000000000111111",
      "1110000111000111000111000", "1110000100110100110100110", "1110000010101010101010101",
      "1110000001011001011001011", "1001100011100101001000111", "1001010101010010110001101",
      "1001001110001000111110010", "1000110100011110001011010", "1000101010101011010101100",
      "1000011001110101100110001", "0101100100101001110011001", "0101010010110001101101010",
      "0101001100011110001100101", "0100110011001110010100011", "0100101011010100101011100",
      "0100011101100011010010110", "0011100001011011100010110", "0011010001101100011101100",
      "0011001010110110010010011", "0010110110010001011110001", "0010101101100010101101001",
      "0010011110001101100001110",
  };
  AdjacencyMatrix a(25, 25, 0);
  for (std::size_t i = 0; i < 25; ++i) {
    for (std::size_t j = 0; j < 25; ++j) a(i, j) = rows[i][j] - '0';
  }
  return a;
}

AdjacencyMatrix complement(const AdjacencyMatrix& a) {
  AdjacencyMatrix c(a.rows(), a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = i == j ? 0 : 1 - a(i, j);
  }
  return c;
}

AdjacencyMatrix petersen_graph() {
  // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
  AdjacencyMatrix a(10, 10, 0);
  const auto edge = [&](std::size_t i, std::size_t j) { a(i, j) = a(j, i) = 1; };
  for (std::size_t i = 0; i < 5; ++i) {
    edge(i, (i + 1) % 5);
    edge(i, i + 5);
    edge(i + 5, (i + 2) % 5 + 5);
  }
  return a;
}

AdjacencyMatrix cycle_graph(std::size_t n) {
  AdjacencyMatrix a(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, (i + 1) % n) = 1;
    a((i + 1) % n, i) = 1;
  }
  return a;
}

Configuration simplex_midpoints(unsigned n) {
  if (n < 3) throw std::domain_error("simplex_midpoints: n must be at least 3");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= n + 1; ++i) {
    for (std::size_t j = i + 1; j <= n + 1; ++j) pairs.emplace_back(i, j);
  }
  const Rational touching(static_cast<long>(n) - 3, 2 * static_cast<long>(n) - 2);
  const Rational disjoint(-2, static_cast<long>(n) - 1);
  const std::size_t size = pairs.size();
  RationalMatrix g(size, size);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < size; ++a) {
    labels.push_back(pair_name(pairs[a].first, pairs[a].second));
    for (std::size_t b = 0; b < size; ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      const int shared = static_cast<int>(i == k) + static_cast<int>(i == l) + static_cast<int>(j == k) + static_cast<int>(j == l);
      g(a, b) = shared == 2 ? Rational(1) : (shared == 1 ? touching : disjoint);
    }
  }
  return Configuration::from_gram(std::move(g), "C" + std::to_string(n), std::move(labels));
}

Configuration invert_tetrahedron(const Configuration& c, const std::array<std::size_t, 4>& tetra) {
  const Rational third(-1, 3);
  std::vector<bool> inside(c.size(), false);
  for (std::size_t a = 0; a < 4; ++a) {
    if (tetra[a] >= c.size()) throw InputError("tetrahedron index out of range");
    inside[tetra[a]] = true;
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (tetra[a] == tetra[b] || c.inner(tetra[a], tetra[b]) != third) {
        throw InputError("points " + std::to_string(tetra[a]) + " and " + std::to_string(tetra[b]) +
                         " are not at inner product -1/3; not a regular tetrahedron");
      }
    }
  }
  RationalMatrix g = c.gram();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (inside[i] != inside[j]) g(i, j) = -g(i, j);
    }
  }
  return Configuration::from_gram(std::move(g), c.label() + " with inverted tetrahedron", c.point_labels());
}

std::array<std::size_t, 4> c7_distinguished_points() {
  const auto c7 = simplex_midpoints(7);
  std::array<std::size_t, 4> out{};
  const std::array<std::string_view, 4> names = {"12", "34", "56", "78"};
  for (std::size_t t = 0; t < 4; ++t) {
    const auto& labels = c7.point_labels();
    out[t] = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), names[t]) - labels.begin());
  }
  return out;
}

Configuration c7_prime() {
  const auto c = invert_tetrahedron(simplex_midpoints(7), c7_distinguished_points());
  return Configuration::from_gram(c.gram(), "C'7", c.point_labels());
}

std::size_t count_tetrahedra(const Configuration& c, std::size_t i) {
  if (i >= c.size()) throw std::out_of_range("point index out of range");
  const Rational third(-1, 3);
  std::vector<std::size_t> near;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j != i && c.inner(i, j) == third) near.push_back(j);
  }
  std::size_t count = 0;
  for (std::size_t a = 0; a < near.size(); ++a) {
    for (std::size_t b = a + 1; b < near.size(); ++b) {
      if (c.inner(near[a], near[b]) != third) continue;
      for (std::size_t d = b + 1; d < near.size(); ++d) {
        if (c.inner(near[a], near[d]) == third && c.inner(near[b], near[d]) == third) ++count;
      }
    }
  }
  return count;
}

Configuration antipodal_union(const Configuration& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c.inner(i, j) == Rational(-1)) {
        throw InputError("points " + std::to_string(i) + " and " + std::to_string(j) + " are already antipodal");
      }
    }
  }
  RationalMatrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = c.inner(i, j);
      g(i + n, j + n) = c.inner(i, j);
      g(i, j + n) = -c.inner(i, j);
      g(i + n, j) = -c.inner(i, j);
    }
  }
  std::vector<std::string> labels;
  if (!c.point_labels().empty()) {
    labels = c.point_labels();
    for (const auto& l : c.point_labels()) labels.push_back("-" + l);
  }
  return Configuration::from_gram(std::move(g), c.label().empty() ? "antipodal union" : c.label() + " ∪ -" + c.label(),
                                  std::move(labels));
}

Configuration cube() {
  // Vertices (±1, ±1, ±1)/√3, bit b of the index selects the sign of coordinate b.
  RationalMatrix g(8, 8);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < 8; ++a) {
    std::string name;
    for (int b = 0; b < 3; ++b) name += ((a >> b) & 1U) ? '-' : '+';
    labels.push_back(name);
    for (std::size_t c = 0; c < 8; ++c) {
      long dot = 0;
      for (int b = 0; b < 3; ++b) dot += (((a ^ c) >> b) & 1U) ? -1 : 1;
      g(a, c) = Rational(dot, 3);
    }
  }
  return Configuration::from_gram(std::move(g), "cube", std::move(labels));
}

Configuration cross_polytope(unsigned n) {
  if (n < 1) throw std::domain_error("cross_polytope: n must be positive");
  // Points +e_1..+e_n, then -e_1..-e_n.
  RationalMatrix g(2 * n, 2 * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < 2 * n; ++a) {
    labels.push_back((a < n ? "+e" : "-e") + std::to_string(a % n + 1));
    for (std::size_t b = 0; b < 2 * n; ++b) {
      if (a % n != b % n) continue;
      g(a, b) = (a < n) == (b < n) ? Rational(1) : Rational(-1);
    }
  }
  return Configuration::from_gram(std::move(g), "cross polytope " + std::to_string(n), std::move(labels));
}

Configuration regular_simplex(unsigned n) {
  if (n < 1) throw std::domain_error("regular_simplex: n must be positive");
  RationalMatrix g(n + 1, n + 1, Rational(-1, static_cast<long>(n)));
  for (std::size_t i = 0; i <= n; ++i) g(i, i) = 1;
  return Configuration::from_gram(std::move(g), "simplex " + std::to_string(n));
}

Configuration standard_polytope(std::string_view name, unsigned n) {
  if (name == "cube") return cube();
  if (name == "cross-polytope") return cross_polytope(n);
  if (name == "simplex") return regular_simplex(n);
  throw InputError("unknown polytope '" + std::string(name) + "'");
}

}  // namespace balanced
