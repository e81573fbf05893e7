#include "balanced/balance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <stdexcept>
#include <thread>

#include "balanced/errors.hpp"
#include "balanced/linalg.hpp"

namespace balanced {

ShellDecomposition shell_decomposition(const Configuration& c, std::size_t i) {
  if (i >= c.size()) throw std::out_of_range("point index " + std::to_string(i) + " out of range");
  std::map<Rational, std::vector<std::size_t>> by_value;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j != i) by_value[c.inner(i, j)].push_back(j);
  }
  ShellDecomposition out{i, {}};
  out.shells.reserve(by_value.size());
  for (auto& [u, members] : by_value) out.shells.push_back({u, std::move(members)});
  return out;
}

namespace {

// Indices of rank(G) points spanning the configuration (the nonzero LDLᵀ
// pivots). A vector in the span is zero iff it is orthogonal to all of them.
std::vector<std::size_t> spanning_points(const Configuration& c) {
  const LdlDecomposition ldl = ldl_decompose(c.gram());
  std::vector<std::size_t> basis;
  for (std::size_t k = 0; k < ldl.pivots.size(); ++k) {
    if (!ldl.pivots[k].is_zero()) basis.push_back(ldl.permutation[k]);
  }
  return basis;
}

// ⟨S_u(x_i) − c·x_i, x_m⟩ for the given m, with c = ⟨S_u(x_i), x_i⟩.
std::vector<Rational> deviation(const Configuration& c, std::size_t i, const Shell& shell,
                                std::span<const std::size_t> targets) {
  Rational scale;
  for (std::size_t j : shell.members) scale += c.inner(j, i);
  std::vector<Rational> out;
  out.reserve(targets.size());
  for (std::size_t m : targets) {
    Rational s;
    for (std::size_t j : shell.members) s += c.inner(j, m);
    s -= scale * c.inner(i, m);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ShellViolation> violations_at(const Configuration& c, std::size_t i,
                                          std::span<const std::size_t> basis) {
  std::vector<std::size_t> everyone(c.size());
  for (std::size_t m = 0; m < c.size(); ++m) everyone[m] = m;
  std::vector<ShellViolation> out;
  for (const Shell& shell : shell_decomposition(c, i).shells) {
    const auto probe = deviation(c, i, shell, basis);
    if (std::all_of(probe.begin(), probe.end(), [](const Rational& r) { return r.is_zero(); })) continue;
    out.push_back({i, shell.value, deviation(c, i, shell, everyone)});
  }
  return out;
}

}  // namespace

BalanceReport check_balanced(const Configuration& c, unsigned threads) {
  const std::size_t n = c.size();
  const std::vector<std::size_t> basis = spanning_points(c);
  std::vector<std::vector<ShellViolation>> per_point(n);
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) per_point[i] = violations_at(c, i, basis);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) per_point[i] = violations_at(c, i, basis);
      });
    }
  }
  BalanceReport report;
  for (auto& v : per_point) {
    for (auto& violation : v) report.violations.push_back(std::move(violation));
  }
  report.balanced = report.violations.empty();
  return report;
}

namespace {

using Vec = std::vector<Rational>;

Rational squared_norm(const Vec& v) {
  Rational s;
  for (const auto& x : v) s += x * x;
  return s;
}

Vec difference(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

// Exact inverse of a square rational matrix (Gauss-Jordan).
RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t d = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(d);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t p = col;
    while (p < d && a(p, col).is_zero()) ++p;
    if (p == d) throw InputError("period basis is singular");
    for (std::size_t j = 0; j < d; ++j) {
      std::swap(a(p, j), a(col, j));
      std::swap(inv(p, j), inv(col, j));
    }
    const Rational f = Rational(1) / a(col, col);
    for (std::size_t j = 0; j < d; ++j) {
      a(col, j) *= f;
      inv(col, j) *= f;
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Rational g = a(i, col);
      for (std::size_t j = 0; j < d; ++j) {
        a(i, j) -= g * a(col, j);
        inv(i, j) -= g * inv(col, j);
      }
    }
  }
  return inv;
}

// All translates of the motif that lie within `cutoff` of `x` (x itself excluded).
std::vector<Vec> neighbours_periodic(const EuclideanPointSet& in, std::size_t base, const RationalMatrix& dual) {
  const Vec& x = in.points[base];
  const RationalMatrix& basis = *in.period;
  const std::size_t d = x.size();
  const Rational r2 = *in.cutoff * *in.cutoff;
  const double radius = std::sqrt(r2.to_double());
  std::vector<Vec> out;
  for (std::size_t m = 0; m < in.points.size(); ++m) {
    const Vec& motif = in.points[m];
    const Vec offset = difference(x, motif);
    // Coefficient window from the dual basis, widened by one for rounding.
    std::vector<long> lo(d);
    std::vector<long> hi(d);
    for (std::size_t k = 0; k < d; ++k) {
      double centre = 0;
      double dual_norm = 0;
      for (std::size_t j = 0; j < d; ++j) {
        centre += offset[j].to_double() * dual(j, k).to_double();
        dual_norm += dual(j, k).to_double() * dual(j, k).to_double();
      }
      const double half = radius * std::sqrt(dual_norm);
      lo[k] = static_cast<long>(std::floor(centre - half)) - 1;
      hi[k] = static_cast<long>(std::ceil(centre + half)) + 1;
    }
    std::vector<long> coeff = lo;
    while (true) {
      Vec y = motif;
      for (std::size_t k = 0; k < d; ++k) {
        if (coeff[k] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) y[j] += Rational(coeff[k]) * basis(k, j);
      }
      const Rational dist = squared_norm(difference(y, x));
      if (dist.is_zero()) {
        const bool self = m == base && std::all_of(coeff.begin(), coeff.end(), [](long v) { return v == 0; });
        if (!self) throw InputError("two points of the periodic set coincide");
      } else if (dist <= r2) {
        out.push_back(std::move(y));
      }
      std::size_t k = 0;
      while (k < d && coeff[k] == hi[k]) {
        coeff[k] = lo[k];
        ++k;
      }
      if (k == d) break;
      ++coeff[k];
    }
  }
  return out;
}

}  // namespace

BalanceReport check_balanced_euclidean(const EuclideanPointSet& in) {
  if (in.points.empty()) throw InputError("euclidean point set is empty");
  const std::size_t d = in.points.front().size();
  for (const auto& p : in.points) {
    if (p.size() != d) throw InputError("euclidean points have inconsistent dimensions");
  }
  if (in.cutoff && in.cutoff->sign() <= 0) throw InputError("cutoff must be positive");

  std::optional<RationalMatrix> dual;
  if (in.period) {
    if (!in.cutoff) throw InputError("periodic point set requires a cutoff");
    if (in.period->rows() != d || in.period->cols() != d) throw InputError("period basis must be square in the point dimension");
    // Columns of B⁻¹ are the dual basis vectors.
    dual = inverse(*in.period);
  }

  BalanceReport report;
  std::size_t shells_checked = 0;
  for (std::size_t i = 0; i < in.points.size(); ++i) {
    const Vec& x = in.points[i];
    std::vector<Vec> others;
    if (dual) {
      others = neighbours_periodic(in, i, *dual);
    } else {
      for (std::size_t j = 0; j < in.points.size(); ++j) {
        if (j == i) continue;
        if (in.points[j] == x) throw InputError("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
        others.push_back(in.points[j]);
      }
    }
    std::map<Rational, Vec> displacement;
    const std::optional<Rational> r2 = in.cutoff ? std::optional<Rational>(*in.cutoff * *in.cutoff) : std::nullopt;
    for (const Vec& y : others) {
      Vec delta = difference(y, x);
      const Rational dist = squared_norm(delta);
      if (r2 && dist > *r2) continue;
      auto [it, fresh] = displacement.try_emplace(dist, Vec(d));
      for (std::size_t k = 0; k < d; ++k) it->second[k] += delta[k];
    }
    shells_checked += displacement.size();
    for (auto& [dist, sum] : displacement) {
      if (std::any_of(sum.begin(), sum.end(), [](const Rational& v) { return !v.is_zero(); })) {
        report.violations.push_back({i, dist, std::move(sum)});
      }
    }
  }
  if (shells_checked == 0 && (in.points.size() > 1 || in.period)) {
    throw InputError("cutoff is smaller than the minimal inter-point distance; no shell to check");
  }
  report.balanced = report.violations.empty();
  return report;
}

}  // namespace balanced
