#include "balanced/configuration.hpp"

#include <algorithm>
#include <set>

#include "balanced/errors.hpp"
#include "balanced/linalg.hpp"

namespace balanced {

namespace {

std::string at(std::size_t i, std::size_t j) {
  return "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

}  // namespace

Configuration Configuration::from_gram(RationalMatrix gram, std::string label,
                                       std::vector<std::string> point_labels) {
  const std::size_t n = gram.rows();
  if (!gram.is_square()) throw InputError("gram matrix is not square");
  if (n == 0) throw InputError("configuration has no points");
  if (!point_labels.empty() && point_labels.size() != n) {
    throw InputError("expected " + std::to_string(n) + " point labels, got " + std::to_string(point_labels.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gram(i, i) != Rational(1)) throw InputError("gram entry " + at(i, i) + " is " + gram(i, i).str() + ", expected 1");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram(i, j) != gram(j, i)) throw InputError("gram matrix is not symmetric at " + at(i, j));
      if (gram(i, j) == Rational(1)) throw InputError("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    }
  }
  LdlDecomposition ldl;
  try {
    ldl = ldl_decompose(gram);
  } catch (const std::domain_error&) {
    throw InputError("gram matrix is not positive semidefinite");
  }
  if (!ldl.nonnegative()) throw InputError("gram matrix is not positive semidefinite");
  const std::size_t dim = ldl.rank();
  return Configuration(std::move(gram), dim, std::move(label), std::move(point_labels));
}

Configuration Configuration::relabeled(std::span<const std::size_t> order) const {
  const std::size_t n = size();
  std::vector<bool> seen(n, false);
  if (order.size() != n) throw std::invalid_argument("relabeled: wrong permutation length");
  for (std::size_t k : order) {
    if (k >= n || seen[k]) throw std::invalid_argument("relabeled: not a permutation");
    seen[k] = true;
  }
  RationalMatrix g(n, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gram_(order[i], order[j]);
    if (!point_labels_.empty()) labels.push_back(point_labels_[order[i]]);
  }
  return Configuration(std::move(g), ambient_dim_, label_, std::move(labels));
}

std::vector<Rational> inner_product_spectrum(const Configuration& c) {
  std::set<Rational> values;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) values.insert(c.inner(i, j));
  }
  return {values.begin(), values.end()};
}

}  // namespace balanced
