#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "balanced/configuration.hpp"

namespace balanced {

/// Degree-k Gegenbauer polynomial for Sⁿ⁻¹, normalized so G_k(1) = 1.
/// Throws std::domain_error for n < 2.
Rational gegenbauer_eval(unsigned n, unsigned k, const Rational& u);
double gegenbauer_eval(unsigned n, unsigned k, double u);

struct DesignVerdict {
  /// Largest t <= cap with every moment of degree 1..t equal to zero.
  unsigned strength = 0;
  unsigned cap = 0;
  /// moments[k - 1] = Σ_{x,y} G_k(⟨x,y⟩) for k = 1..cap.
  std::vector<Rational> moments;
};

/// Design strength from exact Gegenbauer moment sums on the Gram matrix.
/// On S⁰ (ambient dimension 1) only degree 1 carries information; higher
/// moments are reported as zero.
DesignVerdict design_strength(const Configuration& c, unsigned cap);

/// Average of x^alpha over Sⁿ⁻¹ (closed form); alpha.size() must equal n.
Rational sphere_monomial_average(unsigned n, std::span<const unsigned> alpha);

struct TheoremOneVerdict {
  /// Distinct inner products from each point to the others, ±x excluded.
  std::vector<unsigned> distance_counts;
  unsigned strength = 0;
  bool applies = false;
};

/// Design strength versus per-point distance counts: applies when every
/// count is at most the strength.
TheoremOneVerdict theorem1_check(const Configuration& c, unsigned cap);

}  // namespace balanced
