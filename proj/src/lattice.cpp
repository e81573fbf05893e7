#include "balanced/lattice.hpp"

#include <algorithm>
#include <limits>

#include "balanced/errors.hpp"
#include "balanced/linalg.hpp"

namespace balanced {

LatticeGram LatticeGram::from_matrix(Matrix<std::int64_t> entries, std::string label) {
  if (!entries.is_square() || entries.rows() == 0) throw InputError("lattice Gram must be a nonempty square matrix");
  RationalMatrix q(entries.rows(), entries.cols());
  for (std::size_t i = 0; i < entries.rows(); ++i) {
    for (std::size_t j = 0; j < entries.cols(); ++j) {
      if (entries(i, j) != entries(j, i)) throw InputError("lattice Gram is not symmetric");
      q(i, j) = Rational(static_cast<long>(entries(i, j)));
    }
  }
  if (!is_positive_definite(q)) throw InputError("lattice Gram is not positive definite");
  return {std::move(entries), std::move(label)};
}

LatticeGram LatticeGram::integer_lattice(std::size_t d) {
  Matrix<std::int64_t> m = Matrix<std::int64_t>::identity(d);
  return from_matrix(std::move(m), "Z" + std::to_string(d));
}

std::int64_t LatticeGram::inner(const IntVector& v, const IntVector& w) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < dim(); ++j) row += entries_(i, j) * w[j];
    s += v[i] * row;
  }
  return s;
}

namespace {

// Depth-first Fincke-Pohst over coordinates d-1, ..., 0 using
// Q(x) = Σ_i D_i (x_i + Σ_{j>i} L_ji x_j)².
class Enumerator {
 public:
  Enumerator(const LatticeGram& g, std::int64_t bound,
             const std::function<void(const IntVector&, std::int64_t)>& visit)
      : g_(g), bound_(static_cast<long>(bound)), visit_(visit), x_(g.dim(), 0) {
    RationalMatrix q(g.dim(), g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
      for (std::size_t j = 0; j < g.dim(); ++j) q(i, j) = Rational(static_cast<long>(g.entries()(i, j)));
    }
    ldl_ = ldl_decompose(q);
    for (std::size_t k = 0; k < g.dim(); ++k) {
      if (ldl_.permutation[k] != k) throw ConsistencyError("unexpected pivoting on a positive-definite Gram");
    }
  }

  void run() { descend(g_.dim(), bound_); }

 private:
  void descend(std::size_t level, const Rational& budget) {
    if (level == 0) {
      if (std::all_of(x_.begin(), x_.end(), [](std::int64_t v) { return v == 0; })) return;
      const std::int64_t norm = g_.norm(x_);
      if (norm <= bound_.numerator().get_si()) visit_(x_, norm);
      return;
    }
    const std::size_t i = level - 1;
    Rational centre;
    for (std::size_t j = i + 1; j < g_.dim(); ++j) {
      if (x_[j] != 0) centre -= ldl_.lower(j, i) * Rational(static_cast<long>(x_[j]));
    }
    const Rational& pivot = ldl_.pivots[i];
    const auto cost = [&](long v) {
      const Rational t = Rational(v) - centre;
      return pivot * t * t;
    };
    // Walk outward from floor(centre) in both directions.
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), centre.raw().get_num_mpz_t(), centre.raw().get_den_mpz_t());
    const long start = fl.get_si();
    for (long v = start;; --v) {
      const Rational c = cost(v);
      if (c > budget) break;
      x_[i] = v;
      descend(i, budget - c);
    }
    for (long v = start + 1;; ++v) {
      const Rational c = cost(v);
      if (c > budget) break;
      x_[i] = v;
      descend(i, budget - c);
    }
    x_[i] = 0;
  }

  const LatticeGram& g_;
  Rational bound_;
  const std::function<void(const IntVector&, std::int64_t)>& visit_;
  IntVector x_;
  LdlDecomposition ldl_;
};

}  // namespace

void enumerate_lattice_vectors(const LatticeGram& g, std::int64_t bound,
                               const std::function<void(const IntVector&, std::int64_t)>& visit) {
  if (bound < 0) return;
  Enumerator(g, bound, visit).run();
}

std::int64_t minimal_norm(const LatticeGram& g) {
  std::int64_t bound = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < g.dim(); ++i) bound = std::min(bound, g.entries()(i, i));
  std::int64_t best = bound;
  enumerate_lattice_vectors(g, bound, [&](const IntVector&, std::int64_t norm) { best = std::min(best, norm); });
  return best;
}

ShortVectorSet short_vectors(const LatticeGram& g, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("short_vectors: norm must be positive");
  ShortVectorSet out{m, {}};
  enumerate_lattice_vectors(g, m, [&](const IntVector& v, std::int64_t norm) {
    if (norm == m) out.vectors.push_back(v);
  });
  std::sort(out.vectors.begin(), out.vectors.end());
  return out;
}

ShortVectorSet minimal_vectors(const LatticeGram& g, std::size_t max_count) {
  std::int64_t bound = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < g.dim(); ++i) bound = std::min(bound, g.entries()(i, i));
  ShortVectorSet out{bound, {}};
  // A longer list may be discarded later, so overflow is only final at the end.
  bool overflow = false;
  enumerate_lattice_vectors(g, bound, [&](const IntVector& v, std::int64_t norm) {
    if (norm > out.norm) return;
    if (norm < out.norm) {
      out.norm = norm;
      out.vectors.clear();
      overflow = false;
    }
    if (out.vectors.size() == max_count) overflow = true;
    if (!overflow) out.vectors.push_back(v);
  });
  if (overflow) throw ResourceLimitError("more than " + std::to_string(max_count) + " minimal vectors");
  std::sort(out.vectors.begin(), out.vectors.end());
  return out;
}

Configuration kissing_configuration(const LatticeGram& g, std::size_t max_points) {
  const auto shortest = minimal_vectors(g, max_points);
  const std::int64_t m = shortest.norm;
  const std::size_t n = shortest.vectors.size();
  const std::size_t d = g.dim();
  std::vector<IntVector> images(n, IntVector(d, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) images[a][i] += g.entries()(i, j) * shortest.vectors[a][j];
    }
  }
  RationalMatrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::int64_t dot = 0;
      for (std::size_t i = 0; i < d; ++i) dot += shortest.vectors[a][i] * images[b][i];
      gram(a, b) = Rational(static_cast<long>(dot), static_cast<long>(m));
      gram(b, a) = gram(a, b);
    }
  }
  const std::string label = (g.label().empty() ? std::string("lattice") : g.label()) + " kissing configuration";
  return Configuration::from_gram(std::move(gram), label);
}

}  // namespace balanced
