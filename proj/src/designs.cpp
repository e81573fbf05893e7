#include "balanced/designs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "balanced/errors.hpp"

namespace balanced {

namespace {

template <typename T>
T gegenbauer(unsigned n, unsigned k, const T& u) {
  if (n < 2) throw std::domain_error("gegenbauer_eval: dimension must be at least 2");
  if (k == 0) return T(1);
  T prev(1);
  T cur = u;
  for (unsigned j = 2; j <= k; ++j) {
    // G_j = ((2j+n-4)·u·G_{j-1} - (j-1)·G_{j-2}) / (j+n-3)
    T next = (T(static_cast<long>(2 * j + n - 4)) * u * cur - T(static_cast<long>(j - 1)) * prev) /
             T(static_cast<long>(j + n - 3));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Rational gegenbauer_eval(unsigned n, unsigned k, const Rational& u) { return gegenbauer<Rational>(n, k, u); }

double gegenbauer_eval(unsigned n, unsigned k, double u) { return gegenbauer<double>(n, k, u); }

DesignVerdict design_strength(const Configuration& c, unsigned cap) {
  if (cap == 0) throw std::invalid_argument("design_strength: cap must be positive");
  std::map<Rational, unsigned long> histogram;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) ++histogram[c.inner(i, j)];
  }
  const unsigned n = static_cast<unsigned>(c.ambient_dim());
  DesignVerdict out;
  out.cap = cap;
  out.moments.resize(cap);
  for (unsigned k = 1; k <= cap; ++k) {
    Rational sum;
    if (n >= 2) {
      for (const auto& [u, count] : histogram) sum += Rational(static_cast<long>(count)) * gegenbauer_eval(n, k, u);
    } else if (k == 1) {
      for (const auto& [u, count] : histogram) sum += Rational(static_cast<long>(count)) * u;
    }
    if (sum.sign() < 0) throw ConsistencyError("negative Gegenbauer moment at degree " + std::to_string(k));
    out.moments[k - 1] = std::move(sum);
  }
  while (out.strength < cap && out.moments[out.strength].is_zero()) ++out.strength;
  return out;
}

Rational sphere_monomial_average(unsigned n, std::span<const unsigned> alpha) {
  if (alpha.size() != n) throw std::invalid_argument("sphere_monomial_average: exponent length must equal n");
  unsigned total = 0;
  Rational numerator(1);
  for (unsigned a : alpha) {
    if (a % 2 != 0) return Rational(0);
    for (unsigned f = a == 0 ? 1 : a - 1; f > 1; f -= 2) numerator *= Rational(static_cast<long>(f));
    total += a;
  }
  Rational denominator(1);
  for (unsigned f = n; f + 2 <= n + total; f += 2) denominator *= Rational(static_cast<long>(f));
  return numerator / denominator;
}

TheoremOneVerdict theorem1_check(const Configuration& c, unsigned cap) {
  TheoremOneVerdict out;
  out.strength = design_strength(c, cap).strength;
  out.distance_counts.reserve(c.size());
  const Rational antipodal(-1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::set<Rational> values;
    for (std::size_t j = 0; j < c.size(); ++j) {
      // Inner product -1 on the unit sphere forces y = -x.
      if (j != i && c.inner(i, j) != antipodal) values.insert(c.inner(i, j));
    }
    out.distance_counts.push_back(static_cast<unsigned>(values.size()));
  }
  const unsigned worst = out.distance_counts.empty() ? 0 : *std::max_element(out.distance_counts.begin(), out.distance_counts.end());
  out.applies = worst <= out.strength;
  return out;
}

}  // namespace balanced
