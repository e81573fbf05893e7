#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "balanced/configuration.hpp"
#include "balanced/designs.hpp"

namespace balanced {

using Point = std::vector<double>;

/// Explicit coordinates for a configuration (double precision).
struct CoordinateSet {
  std::vector<Point> points;
  std::size_t dim = 0;
  std::string label;

  [[nodiscard]] std::size_t size() const { return points.size(); }
};

/// Throws InputError when the points do not all have `dim` coordinates or
/// are not unit vectors within `tol`.
CoordinateSet make_coordinates(std::vector<Point> points, std::string label = {}, double tol = 1e-9);

/// Rows of L·√D from the exact LDLᵀ of the Gram matrix; only the square
/// roots are inexact. Point i keeps index i.
CoordinateSet coordinates_from_gram(const Configuration& c);

/// max |⟨p_i, p_j⟩ − gram[i][j]|.
double reconstruction_residual(const CoordinateSet& p, const Configuration& c);

/// Σ_{i<j} |p_i − p_j|^{−s}. Throws std::domain_error on coincident points.
double energy(const CoordinateSet& p, double s);

struct ForceReport {
  double s = 0;
  /// Net repulsive force on each point with the radial part removed.
  std::vector<Point> forces;
  double max_tangential = 0;
};

/// Tangential part of Σ_{j≠i} s·r^{−(s+1)}·(p_i − p_j)/r. Throws
/// std::domain_error on coincident points.
ForceReport tangential_force(const CoordinateSet& p, double s);

/// Max relative error between −⟨F_i, t⟩ and a central difference (step
/// 1e−6) of the energy along the geodesic through p_i in a random tangent
/// direction t, over all points. Relative to max(|a|, |b|, 1).
double gradient_check(const CoordinateSet& p, double s, std::uint64_t seed = 1);

/// Cube vertices with the top facet rotated by theta about the vertical axis.
CoordinateSet rotated_cube(double theta);
/// energy(rotated_cube(theta), s); requires 0 <= theta <= π/2.
double cube_facet_rotation(double theta, double s);

/// ±e₃ plus k equally spaced points on the equator of S².
CoordinateSet poles_and_ring(unsigned k);

/// `n` points drawn uniformly from S^{dim−1} with a fixed seed.
CoordinateSet random_sphere_points(std::size_t n, std::size_t dim, std::uint64_t seed);

struct FloatShell {
  double value = 0;
  std::vector<std::size_t> members;
};

struct FloatShellViolation {
  std::size_t point = 0;
  double shell_value = 0;
  /// |S_u(x) − ⟨S_u(x), x⟩·x|.
  double deviation = 0;
};

struct FloatBalanceReport {
  bool balanced = true;
  std::vector<FloatShellViolation> violations;
};

/// Other points grouped by inner product with point i: consecutive sorted
/// values within `tol` share a shell. Throws InputError when a gap lies in
/// (tol, 10·tol], where the grouping would be ambiguous.
std::vector<FloatShell> float_shells(const CoordinateSet& p, std::size_t i, double tol = 1e-9);

/// Shell-sum test in floating point.
FloatBalanceReport check_balanced_float(const CoordinateSet& p, double tol = 1e-9);

struct FloatDesignVerdict {
  unsigned strength = 0;
  unsigned cap = 0;
  /// moments[k − 1] = N⁻² Σ_{x,y} G_k(⟨x,y⟩).
  std::vector<double> moments;
};

/// Gegenbauer moments in dimension p.dim; a moment counts as zero when its
/// absolute value is at most tol.
FloatDesignVerdict design_strength_float(const CoordinateSet& p, unsigned cap, double tol = 1e-9);

TheoremOneVerdict theorem1_check_float(const CoordinateSet& p, unsigned cap, double tol = 1e-9);

}  // namespace balanced
