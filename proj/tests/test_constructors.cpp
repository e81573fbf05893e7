#include <doctest.h>

#include "balanced/constructors.hpp"
#include "balanced/designs.hpp"
#include "balanced/errors.hpp"
#include "balanced/linalg.hpp"
#include "support.hpp"

using namespace balanced;

namespace {

AdjacencyMatrix path3() {
  AdjacencyMatrix a(3, 3, 0);
  a(0, 1) = a(1, 0) = 1;
  a(1, 2) = a(2, 1) = 1;
  return a;
}

// Common neighbours by direct counting.
std::size_t common(const AdjacencyMatrix& a, std::size_t i, std::size_t j) {
  std::size_t c = 0;
  for (std::size_t k = 0; k < a.rows(); ++k) c += (a(i, k) != 0 && a(j, k) != 0) ? 1 : 0;
  return c;
}

// Brute-force tetrahedron count over all triples.
std::size_t brute_tetrahedra(const Configuration& c, std::size_t i) {
  const Rational t(-1, 3);
  std::size_t count = 0;
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      for (std::size_t d = b + 1; d < c.size(); ++d) {
        if (a == i || b == i || d == i) continue;
        if (c.inner(i, a) == t && c.inner(i, b) == t && c.inner(i, d) == t && c.inner(a, b) == t && c.inner(a, d) == t &&
            c.inner(b, d) == t) {
          ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("srg parameters") {
  const AdjacencyMatrix fig1 = load_graph("figure1");
  const SrgParams p = srg_params(fig1);
  CHECK(p.n == 25);
  CHECK(p.k == 12);
  CHECK(p.lambda == 5);
  CHECK(p.mu == 6);
  CHECK_FALSE(p.degenerate);
  CHECK(p.k * (p.k - p.lambda - 1) == (p.n - p.k - 1) * p.mu);
  // Oracle: common-neighbour counts directly.
  for (std::size_t i = 0; i < 25; ++i) {
    for (std::size_t j = i + 1; j < 25; ++j) CHECK(common(fig1, i, j) == (fig1(i, j) != 0 ? 5U : 6U));
  }
  const SrgParams c = srg_params(complement(fig1));
  CHECK(c.n == 25);
  CHECK(c.k == 12);
  CHECK(c.lambda == 5);
  CHECK(c.mu == 6);
  const SrgParams pet = srg_params(petersen_graph());
  CHECK(pet.n == 10);
  CHECK(pet.k == 3);
  CHECK(pet.lambda == 0);
  CHECK(pet.mu == 1);
  CHECK_THROWS_AS(srg_params(path3()), InputError);
}

TEST_CASE("srg_params rejects non-adjacency input") {
  AdjacencyMatrix a = petersen_graph();
  a(0, 0) = 1;
  CHECK_THROWS_AS(srg_params(a), InputError);
  AdjacencyMatrix b = petersen_graph();
  b(0, 1) = 2;
  b(1, 0) = 2;
  CHECK_THROWS_AS(srg_params(b), InputError);
  AdjacencyMatrix c = petersen_graph();
  c(0, 1) = 1 - c(0, 1);
  CHECK_THROWS_AS(srg_params(c), InputError);
}

TEST_CASE("bundled (25,12,5,6) graph embeddings") {
  const AdjacencyMatrix fig1 = load_graph("figure1");
  const Configuration r = srg_spectral_embedding(fig1, Eigenspace::larger);
  CHECK(r.size() == 25);
  CHECK(r.ambient_dim() == 12);
  CHECK(inner_product_spectrum(r).size() == 2);
  CHECK(design_strength(r, 3).strength == 2);
  const Configuration s = srg_spectral_embedding(fig1, Eigenspace::smaller);
  CHECK(s.ambient_dim() == 12);
  // Both embeddings: adjacent pairs share one inner product value.
  for (const Configuration* c : {&r, &s}) {
    const Rational adj = c->inner(0, [&] {
      for (std::size_t j = 1; j < 25; ++j) {
        if (fig1(0, j) != 0) return j;
      }
      return std::size_t{0};
    }());
    for (std::size_t i = 0; i < 25; ++i) {
      for (std::size_t j = 0; j < 25; ++j) {
        if (i != j && fig1(i, j) != 0) CHECK(c->inner(i, j) == adj);
      }
    }
  }
}

TEST_CASE("spectral embedding is the normalized eigenspace projection") {
  // Oracle: P = (A − sI − ((k−s)/N)J)/(r−s) satisfies P² = P and AP = rP.
  const AdjacencyMatrix a = petersen_graph();
  const Configuration c = srg_spectral_embedding(a, Eigenspace::larger);
  const std::size_t n = 10;
  // Rescale to the projection: diagonal of P is multiplicity / N = 5/10.
  RationalMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p(i, j) = c.inner(i, j) * Rational(1, 2);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational pp;
      Rational ap;
      for (std::size_t k = 0; k < n; ++k) {
        pp += p(i, k) * p(k, j);
        ap += Rational(a(i, k)) * p(k, j);
      }
      CHECK(pp == p(i, j));
      CHECK(ap == p(i, j));
    }
  }
  CHECK(c.ambient_dim() == 5);
  CHECK(srg_spectral_embedding(a, Eigenspace::smaller).ambient_dim() == 4);
}

TEST_CASE("spectral embedding rejects unsuitable graphs") {
  CHECK_THROWS_WITH_AS(srg_spectral_embedding(cycle_graph(5)), doctest::Contains("irrational"), InputError);
  CHECK_THROWS_AS(srg_spectral_embedding(path3()), InputError);
  // Complete bipartite K_{3,3} is complete multipartite: degenerate.
  AdjacencyMatrix k33(6, 6, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 3; j < 6; ++j) k33(i, j) = k33(j, i) = 1;
  }
  CHECK(srg_params(k33).degenerate);
  CHECK_THROWS_AS(srg_spectral_embedding(k33), InputError);
}

TEST_CASE("simplex midpoints") {
  for (unsigned n = 3; n <= 9; ++n) {
    const Configuration c = simplex_midpoints(n);
    CHECK(c.size() == n * (n + 1) / 2);
    const Rational meet(static_cast<long>(n) - 3, 2 * static_cast<long>(n) - 2);
    const Rational apart(-2, static_cast<long>(n) - 1);
    std::vector<Rational> expected{apart, meet};
    if (meet < apart) std::swap(expected[0], expected[1]);
    CHECK(inner_product_spectrum(c) == expected);
    CHECK(c.ambient_dim() == n);
  }
  CHECK(inner_product_spectrum(simplex_midpoints(3)) == std::vector<Rational>{Rational(-1), Rational(0)});
  CHECK(inner_product_spectrum(simplex_midpoints(4)) == std::vector<Rational>{Rational(-2, 3), Rational(1, 6)});
  CHECK(inner_product_spectrum(simplex_midpoints(7)) == std::vector<Rational>{Rational(-1, 3), Rational(1, 3)});
  const Configuration c7 = simplex_midpoints(7);
  CHECK(c7.point_labels().front() == "12");
  CHECK(c7.point_labels().back() == "78");
  CHECK_THROWS_AS(simplex_midpoints(2), std::domain_error);
}

TEST_CASE("C'7 and tetrahedron counts") {
  const Configuration c7 = simplex_midpoints(7);
  const Configuration c7p = c7_prime();
  CHECK(c7p.size() == 28);
  CHECK(inner_product_spectrum(c7p) == std::vector<Rational>{Rational(-1, 3), Rational(1, 3)});
  const auto d = c7_distinguished_points();
  for (std::size_t k = 0; k < 4; ++k) CHECK(c7.point_labels()[d[k]] == std::string{char('1' + 2 * k), char('2' + 2 * k)});
  for (std::size_t i = 0; i < 28; ++i) {
    CHECK(count_tetrahedra(c7, i) == 15);
    const bool special = std::find(d.begin(), d.end(), i) != d.end();
    CHECK(count_tetrahedra(c7p, i) == (special ? 7U : 11U));
    CHECK(count_tetrahedra(c7p, i) == brute_tetrahedra(c7p, i));
  }
  for (std::size_t i = 0; i < 28; ++i) {
    for (std::size_t j = 0; j < 28; ++j) {
      const bool flip = (std::find(d.begin(), d.end(), i) != d.end()) != (std::find(d.begin(), d.end(), j) != d.end());
      CHECK(c7p.inner(i, j) == (flip ? -c7.inner(i, j) : c7.inner(i, j)));
    }
  }
  CHECK(design_strength(c7, 3).strength >= 2);
  CHECK(design_strength(c7p, 3).strength >= 2);
  // "12" and "13" share vertex 1 and therefore sit at +1/3.
  CHECK_THROWS_AS(invert_tetrahedron(c7, {0, 1, 27, 20}), InputError);
}

TEST_CASE("any -1/3 tetrahedron gives an equivalent configuration") {
  const Configuration c7 = simplex_midpoints(7);
  // Edges 18, 27, 36, 45.
  const auto index = [&](const std::string& label) {
    const auto& l = c7.point_labels();
    return static_cast<std::size_t>(std::find(l.begin(), l.end(), label) - l.begin());
  };
  const Configuration other = invert_tetrahedron(c7, {index("18"), index("27"), index("36"), index("45")});
  CHECK(inner_product_spectrum(other) == inner_product_spectrum(c7_prime()));
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < 28; ++i) counts.push_back(count_tetrahedra(other, i));
  CHECK(std::count(counts.begin(), counts.end(), 7) == 4);
  CHECK(std::count(counts.begin(), counts.end(), 11) == 24);
}

TEST_CASE("antipodal union") {
  const Configuration c7 = simplex_midpoints(7);
  const Configuration u = antipodal_union(c7);
  CHECK(u.size() == 56);
  CHECK(inner_product_spectrum(u) == std::vector<Rational>{Rational(-1), Rational(-1, 3), Rational(1, 3)});
  for (std::size_t i = 0; i < 28; ++i) {
    for (std::size_t j = 0; j < 28; ++j) {
      CHECK(u.inner(i, j + 28) == -c7.inner(i, j));
      CHECK(u.inner(i + 28, j + 28) == c7.inner(i, j));
    }
  }
  const DesignVerdict v = design_strength(u, 7);
  for (unsigned k = 1; k <= 7; k += 2) CHECK(v.moments[k - 1].is_zero());
  const Configuration one = antipodal_union(Configuration::from_gram(RationalMatrix::identity(1)));
  CHECK(one.size() == 2);
  CHECK(inner_product_spectrum(one) == std::vector<Rational>{Rational(-1)});
  CHECK_THROWS_AS(antipodal_union(cube()), InputError);
}

TEST_CASE("standard polytopes") {
  CHECK(inner_product_spectrum(cube()) == std::vector<Rational>{Rational(-1), Rational(-1, 3), Rational(1, 3)});
  for (unsigned n = 2; n <= 6; ++n) {
    CHECK(inner_product_spectrum(cross_polytope(n)) == std::vector<Rational>{Rational(-1), Rational(0)});
    CHECK(inner_product_spectrum(regular_simplex(n)) == std::vector<Rational>{Rational(-1, static_cast<long>(n))});
  }
  CHECK(standard_polytope("cube").size() == 8);
  CHECK(standard_polytope("cross-polytope", 5).size() == 10);
  CHECK(standard_polytope("simplex", 5).size() == 6);
  CHECK_THROWS_AS(standard_polytope("dodecahedron"), InputError);
}
