#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "balanced/configuration.hpp"
#include "balanced/io.hpp"

namespace balanced {

/// All verdicts for one exact configuration.
struct AnalysisReport {
  std::string label;
  std::size_t size = 0;
  std::size_t ambient_dim = 0;
  std::vector<Rational> spectrum;
  bool balanced = false;
  unsigned design_cap = 0;
  unsigned design_strength = 0;
  std::vector<unsigned> distance_counts;
  bool theorem1_applies = false;
  /// Decimal group order.
  std::string symmetry_order;
  /// Orbit sizes, orbits ordered by least element.
  std::vector<std::size_t> orbit_sizes;
  bool group_balanced = false;
  std::vector<std::size_t> witnesses;
};

/// Runs every check. Throws ConsistencyError if a verdict contradicts
/// another (a design-based or group-based balance certificate on an
/// unbalanced configuration).
AnalysisReport analyze(const Configuration& c, unsigned cap = 12, unsigned threads = 1);

/// Fixed key order, so equal reports serialize to identical bytes.
Json to_json(const AnalysisReport& r);

}  // namespace balanced
