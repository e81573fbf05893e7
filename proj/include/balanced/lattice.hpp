#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "balanced/configuration.hpp"
#include "balanced/matrix.hpp"

namespace balanced {

using IntVector = std::vector<std::int64_t>;

/// Integral, symmetric, positive-definite Gram matrix of a lattice basis.
class LatticeGram {
 public:
  /// Throws InputError unless `entries` is square, symmetric and
  /// positive definite.
  static LatticeGram from_matrix(Matrix<std::int64_t> entries, std::string label = {});
  static LatticeGram integer_lattice(std::size_t d);

  [[nodiscard]] std::size_t dim() const { return entries_.rows(); }
  [[nodiscard]] const Matrix<std::int64_t>& entries() const { return entries_; }
  [[nodiscard]] const std::string& label() const { return label_; }

  /// vᵀ·G·w in exact integer arithmetic.
  [[nodiscard]] std::int64_t inner(const IntVector& v, const IntVector& w) const;
  [[nodiscard]] std::int64_t norm(const IntVector& v) const { return inner(v, v); }

 private:
  LatticeGram(Matrix<std::int64_t> entries, std::string label) : entries_(std::move(entries)), label_(std::move(label)) {}
  Matrix<std::int64_t> entries_;
  std::string label_;
};

struct ShortVectorSet {
  std::int64_t norm = 0;
  /// Coefficient vectors of norm exactly `norm`, lexicographically sorted.
  std::vector<IntVector> vectors;
};

/// Visits every nonzero v with vᵀGv <= bound (Fincke-Pohst, exact
/// rational LDLᵀ bounds). The visitor receives v and its norm.
void enumerate_lattice_vectors(const LatticeGram& g, std::int64_t bound,
                               const std::function<void(const IntVector&, std::int64_t)>& visit);

std::int64_t minimal_norm(const LatticeGram& g);

/// All vectors of norm exactly m.
ShortVectorSet short_vectors(const LatticeGram& g, std::int64_t m);

/// The minimal vectors in a single enumeration pass. Throws
/// ResourceLimitError when there are more than `max_count`.
ShortVectorSet minimal_vectors(const LatticeGram& g,
                               std::size_t max_count = std::numeric_limits<std::size_t>::max());

/// Minimal vectors rescaled to the unit sphere, in lexicographic order of
/// coefficients. Throws ResourceLimitError when there are more than
/// `max_points` minimal vectors.
Configuration kissing_configuration(const LatticeGram& g, std::size_t max_points = 20000);

}  // namespace balanced
