#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "balanced/matrix.hpp"

namespace balanced {

/// A finite point set on the unit sphere, represented by its Gram matrix.
///
/// The ambient dimension is the rank of the Gram matrix: the points are
/// always considered inside their own span. Instances are immutable and
/// always valid (symmetric, unit diagonal, PSD, no repeated points).
class Configuration {
 public:
  /// Validates `gram` and throws InputError naming the first violation.
  static Configuration from_gram(RationalMatrix gram, std::string label = {},
                                 std::vector<std::string> point_labels = {});

  [[nodiscard]] std::size_t size() const { return gram_.rows(); }
  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] const RationalMatrix& gram() const { return gram_; }
  [[nodiscard]] const Rational& inner(std::size_t i, std::size_t j) const { return gram_(i, j); }
  [[nodiscard]] const std::string& label() const { return label_; }
  /// Per-point labels; empty when none were attached.
  [[nodiscard]] const std::vector<std::string>& point_labels() const { return point_labels_; }

  /// Relabels points: point k of the result is point `order[k]` of this one.
  [[nodiscard]] Configuration relabeled(std::span<const std::size_t> order) const;

 private:
  Configuration(RationalMatrix gram, std::size_t ambient_dim, std::string label,
                std::vector<std::string> point_labels)
      : gram_(std::move(gram)), ambient_dim_(ambient_dim), label_(std::move(label)),
        point_labels_(std::move(point_labels)) {}

  RationalMatrix gram_;
  std::size_t ambient_dim_ = 0;
  std::string label_;
  std::vector<std::string> point_labels_;
};

/// Sorted distinct off-diagonal Gram entries.
std::vector<Rational> inner_product_spectrum(const Configuration& c);

}  // namespace balanced
