#include <doctest.h>

#include <random>

#include "balanced/configuration.hpp"
#include "balanced/constructors.hpp"
#include "balanced/errors.hpp"
#include "balanced/linalg.hpp"
#include "support.hpp"

using namespace balanced;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix product_ldlt(const LdlDecomposition& ldl) {
  const std::size_t n = ldl.pivots.size();
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out(i, j) += ldl.lower(i, k) * ldl.pivots[k] * ldl.lower(j, k);
    }
  }
  return out;
}

RationalMatrix permuted(const RationalMatrix& g, const std::vector<std::size_t>& perm) {
  RationalMatrix out(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = g(perm[i], perm[j]);
  }
  return out;
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  const Rational a(6, -8);
  CHECK(a.str() == "-3/4");
  CHECK(a.denominator() == 4);
  CHECK((a + Rational(3, 4)).is_zero());
  CHECK(Rational(1, 3) * Rational(3) == Rational(1));
  CHECK(Rational(-1, 3) < Rational(1, 3));
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(abs(Rational(-5, 2)) == Rational(5, 2));
  CHECK(Rational(4, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing accepts integers and fractions only") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-2/6") == Rational(-1, 3));
  CHECK(Rational::parse("+5/10") == Rational(1, 2));
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  for (const char* bad : {"", "1/0", "0.5", "1/", "/2", "a", "1//2", "- 1", "1e3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), InputError);
  }
}

TEST_CASE("rational hashing agrees with equality") {
  CHECK(Rational(2, 4).hash() == Rational(1, 2).hash());
  CHECK(std::hash<Rational>{}(Rational(-3)) == Rational::parse("-6/2").hash());
}

TEST_CASE("gram_rank on small matrices") {
  CHECK(gram_rank(RationalMatrix::identity(3)) == 3);
  CHECK(gram_rank(RationalMatrix(3, 3, Rational(1))) == 1);
  CHECK(gram_rank(RationalMatrix(2, 2)) == 0);
  CHECK_THROWS_AS(gram_rank(from_rows({{1, 2}, {0, 1}})), InputError);
}

TEST_CASE("rank of the C'7 Gram matrix matches an explicit-coordinate oracle") {
  // Midpoints e_i + e_j of the simplex on {e_1..e_8}, projected off the
  // all-ones direction, with the tetrahedron 12, 34, 56, 78 negated.
  std::vector<std::vector<mpq_class>> coords;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      std::vector<mpq_class> x(8, mpq_class(-1, 4));
      x[i] += 1;
      x[j] += 1;
      const bool flip = (i % 2 == 0) && j == i + 1;
      if (flip) {
        for (auto& v : x) v = -v;
      }
      coords.push_back(x);
    }
  }
  CHECK(testing::oracle_rank(coords) == 7);
  CHECK(gram_rank(c7_prime().gram()) == 7);
  CHECK(c7_prime().ambient_dim() == 7);
}

TEST_CASE("ldl_decompose reproduces P·G·Pᵀ exactly") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 5;
    // G = BᵀB for a random integer B with fewer rows than columns, so
    // singular PSD matrices occur.
    const std::size_t r = 1 + trial % n;
    std::vector<std::vector<int>> b(r, std::vector<int>(n));
    for (auto& row : b) {
      for (auto& v : row) v = entry(rng);
    }
    RationalMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long s = 0;
        for (std::size_t k = 0; k < r; ++k) s += b[k][i] * b[k][j];
        g(i, j) = s;
      }
    }
    const LdlDecomposition ldl = ldl_decompose(g);
    CHECK(product_ldlt(ldl) == permuted(g, ldl.permutation));
    CHECK(ldl.nonnegative());
    CHECK(ldl.rank() == testing::oracle_rank(testing::to_mpq(g)));
    CHECK(ldl.rank() == rank(g));
    for (std::size_t i = 0; i < n; ++i) CHECK(ldl.lower(i, i) == Rational(1));
  }
}

TEST_CASE("ldl_decompose detects indefinite matrices") {
  const RationalMatrix indefinite = from_rows({{1, 2}, {2, 1}});
  CHECK_FALSE(is_positive_semidefinite(indefinite));
  CHECK_FALSE(ldl_decompose(indefinite).nonnegative());
  const RationalMatrix hyperbolic = from_rows({{0, 1}, {1, 0}});
  CHECK_THROWS_AS(ldl_decompose(hyperbolic), std::domain_error);
  CHECK_FALSE(is_positive_semidefinite(hyperbolic));
  CHECK(is_positive_definite(RationalMatrix::identity(4)));
  CHECK_FALSE(is_positive_definite(RationalMatrix(2, 2, Rational(1))));
}

TEST_CASE("identity pivoting when no zero pivot occurs") {
  const LdlDecomposition ldl = ldl_decompose(from_rows({{2, 1}, {1, 2}}));
  CHECK(ldl.permutation == std::vector<std::size_t>{0, 1});
  CHECK(ldl.pivots[0] == Rational(2));
  CHECK(ldl.pivots[1] == Rational(3, 2));
}

TEST_CASE("Configuration validation names the violation") {
  CHECK_THROWS_WITH_AS(Configuration::from_gram(from_rows({{1, 0}, {0, 2}})), doctest::Contains("expected 1"), InputError);
  CHECK_THROWS_WITH_AS(Configuration::from_gram(from_rows({{1, Rational(1, 2)}, {0, 1}})), doctest::Contains("symmetric"),
                       InputError);
  CHECK_THROWS_WITH_AS(Configuration::from_gram(from_rows({{1, 1}, {1, 1}})), doctest::Contains("coincide"), InputError);
  const Rational m(-2, 3);
  CHECK_THROWS_WITH_AS(Configuration::from_gram(from_rows({{1, m, m}, {m, 1, m}, {m, m, 1}})),
                       doctest::Contains("semidefinite"), InputError);
  CHECK_THROWS_AS(Configuration::from_gram(RationalMatrix(0, 0)), InputError);
  CHECK_THROWS_AS(Configuration::from_gram(RationalMatrix::identity(2), "x", {"a"}), InputError);
}

TEST_CASE("ambient dimension is the Gram rank") {
  CHECK(regular_simplex(4).ambient_dim() == 4);
  CHECK(cube().ambient_dim() == 3);
  CHECK(Configuration::from_gram(RationalMatrix::identity(1)).ambient_dim() == 1);
  const Configuration pair = Configuration::from_gram(from_rows({{1, -1}, {-1, 1}}));
  CHECK(pair.ambient_dim() == 1);
  CHECK(inner_product_spectrum(pair) == std::vector<Rational>{-1});
}

TEST_CASE("relabeling permutes the Gram matrix") {
  const Configuration c = simplex_midpoints(4);
  std::vector<std::size_t> order(c.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  const Configuration r = c.relabeled(order);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) CHECK(r.inner(i, j) == c.inner(order[i], order[j]));
  }
  CHECK(r.point_labels().front() == c.point_labels().back());
  const std::vector<std::size_t> bad{0, 0, 1, 2, 3, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS((void)c.relabeled(bad), std::invalid_argument);
}
