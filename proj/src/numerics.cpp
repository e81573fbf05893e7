#include "balanced/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "balanced/errors.hpp"
#include "balanced/linalg.hpp"

namespace balanced {

namespace {

double dot(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double distance(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

double checked_distance(const Point& a, const Point& b, std::size_t i, std::size_t j) {
  const double r = distance(a, b);
  if (r == 0) throw std::domain_error("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  return r;
}

// Energy terms involving point i only.
double partial_energy(const CoordinateSet& p, std::size_t i, const Point& pi, double s) {
  double e = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j != i) e += std::pow(checked_distance(pi, p.points[j], i, j), -s);
  }
  return e;
}

Point net_force(const CoordinateSet& p, std::size_t i, double s) {
  Point f(p.dim, 0.0);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j == i) continue;
    const double r = checked_distance(p.points[i], p.points[j], i, j);
    const double scale = s * std::pow(r, -(s + 2));
    for (std::size_t k = 0; k < p.dim; ++k) f[k] += scale * (p.points[i][k] - p.points[j][k]);
  }
  return f;
}

void remove_component(Point& v, const Point& axis) {
  const double a = dot(v, axis) / dot(axis, axis);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] -= a * axis[k];
}

}  // namespace

CoordinateSet make_coordinates(std::vector<Point> points, std::string label, double tol) {
  if (points.empty()) throw InputError("coordinate set is empty");
  const std::size_t dim = points.front().size();
  if (dim == 0) throw InputError("points must have at least one coordinate");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) throw InputError("point " + std::to_string(i) + " has the wrong number of coordinates");
    if (std::abs(dot(points[i], points[i]) - 1.0) > tol) throw InputError("point " + std::to_string(i) + " is not a unit vector");
  }
  return {std::move(points), dim, std::move(label)};
}

CoordinateSet coordinates_from_gram(const Configuration& c) {
  const LdlDecomposition ldl = ldl_decompose(c.gram());
  std::vector<std::size_t> columns;
  std::vector<double> roots;
  for (std::size_t k = 0; k < ldl.pivots.size(); ++k) {
    const int sign = ldl.pivots[k].sign();
    if (sign < 0) throw InputError("Gram matrix is not positive semidefinite");
    if (sign > 0) {
      columns.push_back(k);
      roots.push_back(std::sqrt(ldl.pivots[k].to_double()));
    }
  }
  CoordinateSet out;
  out.dim = columns.size();
  out.label = c.label();
  out.points.assign(c.size(), Point(out.dim, 0.0));
  for (std::size_t row = 0; row < c.size(); ++row) {
    Point& x = out.points[ldl.permutation[row]];
    for (std::size_t a = 0; a < columns.size(); ++a) {
      if (columns[a] <= row) x[a] = ldl.lower(row, columns[a]).to_double() * roots[a];
    }
  }
  return out;
}

double reconstruction_residual(const CoordinateSet& p, const Configuration& c) {
  double worst = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      worst = std::max(worst, std::abs(dot(p.points[i], p.points[j]) - c.inner(i, j).to_double()));
    }
  }
  return worst;
}

double energy(const CoordinateSet& p, double s) {
  double e = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) e += std::pow(checked_distance(p.points[i], p.points[j], i, j), -s);
  }
  return e;
}

ForceReport tangential_force(const CoordinateSet& p, double s) {
  ForceReport out;
  out.s = s;
  out.forces.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Point f = net_force(p, i, s);
    remove_component(f, p.points[i]);
    out.max_tangential = std::max(out.max_tangential, std::sqrt(dot(f, f)));
    out.forces.push_back(std::move(f));
  }
  return out;
}

double gradient_check(const CoordinateSet& p, double s, std::uint64_t seed) {
  constexpr double h = 1e-6;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const ForceReport forces = tangential_force(p, s);
  double worst = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& x = p.points[i];
    Point t(p.dim);
    double len = 0;
    // Redraw until the tangent part is usable (always on S^{d-1}, d >= 2).
    for (int attempt = 0; attempt < 16 && len < 1e-3; ++attempt) {
      for (double& v : t) v = normal(rng);
      remove_component(t, x);
      len = std::sqrt(dot(t, t));
    }
    if (len < 1e-3) continue;
    for (double& v : t) v /= len;
    const auto moved = [&](double step) {
      Point y(p.dim);
      for (std::size_t k = 0; k < p.dim; ++k) y[k] = std::cos(step) * x[k] + std::sin(step) * t[k];
      return partial_energy(p, i, y, s);
    };
    const double numeric = (moved(h) - moved(-h)) / (2 * h);
    const double analytic = -dot(forces.forces[i], t);
    const double err = std::abs(numeric - analytic) / std::max({std::abs(numeric), std::abs(analytic), 1.0});
    worst = std::max(worst, err);
  }
  return worst;
}

CoordinateSet rotated_cube(double theta) {
  const double a = 1.0 / std::sqrt(3.0);
  std::vector<Point> pts;
  for (int z : {-1, 1}) {
    const double angle = z > 0 ? theta : 0.0;
    for (int k = 0; k < 4; ++k) {
      // Square vertices at 45° + 90°k, radius √2·a in the xy-plane.
      const double phi = std::numbers::pi / 4 + k * std::numbers::pi / 2 + angle;
      pts.push_back({std::sqrt(2.0) * a * std::cos(phi), std::sqrt(2.0) * a * std::sin(phi), z * a});
    }
  }
  return {std::move(pts), 3, "cube"};
}

double cube_facet_rotation(double theta, double s) {
  if (theta < 0 || theta > std::numbers::pi / 2) throw std::domain_error("cube_facet_rotation: theta outside [0, pi/2]");
  return energy(rotated_cube(theta), s);
}

CoordinateSet poles_and_ring(unsigned k) {
  if (k == 0) throw std::domain_error("poles_and_ring: k must be positive");
  std::vector<Point> pts{{0.0, 0.0, 1.0}, {0.0, 0.0, -1.0}};
  for (unsigned j = 0; j < k; ++j) {
    const double phi = 2 * std::numbers::pi * j / k;
    pts.push_back({std::cos(phi), std::sin(phi), 0.0});
  }
  return {std::move(pts), 3, "poles and ring " + std::to_string(k)};
}

CoordinateSet random_sphere_points(std::size_t n, std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw std::domain_error("random_sphere_points: dim must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  CoordinateSet out;
  out.dim = dim;
  out.label = "random";
  for (std::size_t i = 0; i < n; ++i) {
    Point x(dim);
    double len = 0;
    while (len < 1e-6) {
      for (double& v : x) v = normal(rng);
      len = std::sqrt(dot(x, x));
    }
    for (double& v : x) v /= len;
    out.points.push_back(std::move(x));
  }
  return out;
}

std::vector<FloatShell> float_shells(const CoordinateSet& p, std::size_t i, double tol) {
  if (i >= p.size()) throw std::out_of_range("float_shells: point index out of range");
  if (!(tol > 0)) throw std::invalid_argument("float_shells: tolerance must be positive");
  std::vector<std::pair<double, std::size_t>> values;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j != i) values.emplace_back(dot(p.points[i], p.points[j]), j);
  }
  std::sort(values.begin(), values.end());
  std::vector<FloatShell> shells;
  for (std::size_t a = 0; a < values.size(); ++a) {
    const double gap = a == 0 ? HUGE_VAL : values[a].first - values[a - 1].first;
    if (gap > tol && gap <= 10 * tol) {
      throw InputError("ambiguous shell grouping at point " + std::to_string(i) + "; choose a different tolerance");
    }
    if (gap > tol) shells.push_back({values[a].first, {}});
    shells.back().members.push_back(values[a].second);
  }
  for (auto& shell : shells) {
    std::sort(shell.members.begin(), shell.members.end());
    double sum = 0;
    for (std::size_t j : shell.members) sum += dot(p.points[i], p.points[j]);
    shell.value = sum / static_cast<double>(shell.members.size());
  }
  return shells;
}

FloatBalanceReport check_balanced_float(const CoordinateSet& p, double tol) {
  FloatBalanceReport out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& x = p.points[i];
    for (const auto& shell : float_shells(p, i, tol)) {
      Point sum(p.dim, 0.0);
      for (std::size_t j : shell.members) {
        for (std::size_t k = 0; k < p.dim; ++k) sum[k] += p.points[j][k];
      }
      remove_component(sum, x);
      const double deviation = std::sqrt(dot(sum, sum));
      if (deviation > tol) out.violations.push_back({i, shell.value, deviation});
    }
  }
  out.balanced = out.violations.empty();
  return out;
}

FloatDesignVerdict design_strength_float(const CoordinateSet& p, unsigned cap, double tol) {
  if (cap == 0) throw std::invalid_argument("design_strength_float: cap must be positive");
  const unsigned n = static_cast<unsigned>(p.dim);
  const double scale = 1.0 / (static_cast<double>(p.size()) * static_cast<double>(p.size()));
  FloatDesignVerdict out;
  out.cap = cap;
  out.moments.assign(cap, 0.0);
  for (unsigned k = 1; k <= cap; ++k) {
    if (n < 2 && k > 1) break;
    double sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        const double u = std::clamp(dot(p.points[i], p.points[j]), -1.0, 1.0);
        sum += n >= 2 ? gegenbauer_eval(n, k, u) : u;
      }
    }
    out.moments[k - 1] = sum * scale;
  }
  while (out.strength < cap && std::abs(out.moments[out.strength]) <= tol) ++out.strength;
  return out;
}

TheoremOneVerdict theorem1_check_float(const CoordinateSet& p, unsigned cap, double tol) {
  TheoremOneVerdict out;
  out.strength = design_strength_float(p, cap, tol).strength;
  for (std::size_t i = 0; i < p.size(); ++i) {
    unsigned count = 0;
    for (const auto& shell : float_shells(p, i, tol)) {
      if (std::abs(shell.value + 1.0) > tol) ++count;
    }
    out.distance_counts.push_back(count);
  }
  const unsigned worst = out.distance_counts.empty() ? 0 : *std::max_element(out.distance_counts.begin(), out.distance_counts.end());
  out.applies = worst <= out.strength;
  return out;
}

}  // namespace balanced
