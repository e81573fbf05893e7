#include "balanced/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "balanced/errors.hpp"

namespace balanced {

bool is_symmetric(const RationalMatrix& g) {
  if (!g.is_square()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i + 1; j < g.cols(); ++j) {
      if (g(i, j) != g(j, i)) return false;
    }
  }
  return true;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    }
    const Rational inv = Rational(1) / a(r, col);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      const Rational f = a(i, col) * inv;
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    ++r;
  }
  return r;
}

std::size_t gram_rank(const RationalMatrix& g) {
  if (!is_symmetric(g)) throw InputError("gram_rank: matrix is not square and symmetric");
  return rank(g);
}

std::size_t LdlDecomposition::rank() const {
  return static_cast<std::size_t>(std::count_if(pivots.begin(), pivots.end(), [](const Rational& d) { return !d.is_zero(); }));
}

bool LdlDecomposition::nonnegative() const {
  return std::all_of(pivots.begin(), pivots.end(), [](const Rational& d) { return d.sign() >= 0; });
}

LdlDecomposition ldl_decompose(const RationalMatrix& g) {
  if (!is_symmetric(g)) throw InputError("ldl_decompose: matrix is not square and symmetric");
  const std::size_t n = g.rows();
  RationalMatrix a = g;
  LdlDecomposition out{RationalMatrix::identity(n), std::vector<Rational>(n), {}};
  out.permutation.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.permutation[i] = i;

  const auto swap_symmetric = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
    for (std::size_t j = 0; j < x; ++j) std::swap(out.lower(x, j), out.lower(y, j));
    std::swap(out.permutation[x], out.permutation[y]);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      // Zero diagonal on the trailing block: either it is the zero block,
      // or the matrix is indefinite.
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (!a(i, j).is_zero()) {
            throw std::domain_error("ldl_decompose: indefinite matrix needs a 2x2 pivot");
          }
        }
      }
      break;
    }
    if (p != k) swap_symmetric(k, p);
    const Rational d = a(k, k);
    out.pivots[k] = d;
    const Rational inv = Rational(1) / d;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      out.lower(i, k) = a(i, k) * inv;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) * inv;
      for (std::size_t j = k + 1; j <= i; ++j) {
        if (a(k, j).is_zero()) continue;
        a(i, j) -= f * a(k, j);
        if (j != i) a(j, i) = a(i, j);
      }
    }
  }
  return out;
}

bool is_positive_semidefinite(const RationalMatrix& g) {
  try {
    return ldl_decompose(g).nonnegative();
  } catch (const std::domain_error&) {
    return false;
  }
}

bool is_positive_definite(const RationalMatrix& g) {
  try {
    const auto ldl = ldl_decompose(g);
    return std::all_of(ldl.pivots.begin(), ldl.pivots.end(), [](const Rational& d) { return d.sign() > 0; });
  } catch (const std::domain_error&) {
    return false;
  }
}

}  // namespace balanced
