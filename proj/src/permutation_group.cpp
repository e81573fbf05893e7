#include "balanced/permutation_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "balanced/errors.hpp"

namespace balanced {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("image list is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), std::size_t{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) p.images_[images_[x]] = x;
  return p;
}

std::optional<std::size_t> Permutation::first_moved() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return x;
  }
  return std::nullopt;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation p;
  p.images_.resize(a.images_.size());
  for (std::size_t x = 0; x < a.images_.size(); ++x) p.images_[x] = b.images_[a.images_[x]];
  return p;
}

// ---------------------------------------------------------------------------

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators,
                                 std::vector<std::size_t> prefix)
    : degree_(degree) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  for (std::size_t b : prefix) {
    if (b >= degree) throw std::out_of_range("base point out of range");
    levels_.push_back({b, {}, {}, {}});
  }
  // Every generator must move some base point.
  for (const auto& g : gens) {
    const bool moves_base = std::any_of(levels_.begin(), levels_.end(), [&](const ChainLevel& l) { return g[l.base_point] != l.base_point; });
    if (!moves_base) levels_.push_back({*g.first_moved(), {}, {}, {}});
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t l = 0; l < i && fixes_prefix; ++l) fixes_prefix = g[levels_[l].base_point] == levels_[l].base_point;
      if (fixes_prefix) levels_[i].generators.push_back(g);
    }
    rebuild_transversal(i);
  }
  run();
}

void StabilizerChain::rebuild_transversal(std::size_t level) {
  ChainLevel& l = levels_[level];
  l.transversal.assign(degree_, std::nullopt);
  l.orbit.clear();
  l.transversal[l.base_point] = Permutation::identity(degree_);
  l.orbit.push_back(l.base_point);
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    const std::size_t gamma = l.orbit[k];
    for (const auto& s : l.generators) {
      const std::size_t delta = s[gamma];
      if (!l.transversal[delta]) {
        l.transversal[delta] = *l.transversal[gamma] * s;
        l.orbit.push_back(delta);
      }
    }
  }
}

StabilizerChain::Sifted StabilizerChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t m = from; m < levels_.size(); ++m) {
    const std::size_t beta = g[levels_[m].base_point];
    const auto& u = levels_[m].transversal[beta];
    if (!u) return {std::move(g), m};
    g = g * u->inverse();
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::run() {
  // Holt's deterministic Schreier-Sims: process levels bottom-up, and when a
  // Schreier generator fails to sift, add the residue and resume at the
  // level where it dropped out.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto level = static_cast<std::size_t>(i);
    bool extended = false;
    const std::vector<std::size_t> orbit = levels_[level].orbit;
    const std::vector<Permutation> gens = levels_[level].generators;
    for (std::size_t beta : orbit) {
      for (const auto& s : gens) {
        const Permutation& u_beta = *levels_[level].transversal[beta];
        const Permutation& u_image = *levels_[level].transversal[s[beta]];
        Permutation schreier = u_beta * s * u_image.inverse();
        if (schreier.is_identity()) continue;
        auto [residue, j] = strip(std::move(schreier), level + 1);
        if (j == levels_.size() && residue.is_identity()) continue;
        if (j == levels_.size()) levels_.push_back({*residue.first_moved(), {}, {}, {}});
        for (std::size_t l = level + 1; l <= j; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_transversal(l);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
      if (extended) break;
    }
    if (!extended) --i;
  }
}

std::vector<std::size_t> StabilizerChain::base() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.base_point);
  return out;
}

mpz_class StabilizerChain::order() const {
  mpz_class order = 1;
  for (const auto& l : levels_) order *= static_cast<unsigned long>(l.orbit.size());
  return order;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = strip(g, 0);
  return level == levels_.size() && residue.is_identity();
}

// ---------------------------------------------------------------------------

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), chain_(degree, generators_) {}

std::vector<std::size_t> orbit_of(const PermutationGroup& g, std::size_t point) {
  if (point >= g.degree()) throw std::out_of_range("point index out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::size_t> orbit{point};
  seen[point] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (const auto& s : g.generators()) {
      const std::size_t y = s[orbit[k]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<std::size_t>> orbits(const PermutationGroup& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> done(g.degree(), false);
  for (std::size_t x = 0; x < g.degree(); ++x) {
    if (done[x]) continue;
    auto orbit = orbit_of(g, x);
    for (std::size_t y : orbit) done[y] = true;
    out.push_back(std::move(orbit));
  }
  return out;
}

PermutationGroup point_stabilizer(const PermutationGroup& g, std::size_t i) {
  if (i >= g.degree()) throw std::out_of_range("point index " + std::to_string(i) + " out of range");
  const StabilizerChain chain(g.degree(), g.generators(), {i});
  std::vector<Permutation> gens;
  if (chain.levels().size() > 1) gens = chain.levels()[1].generators;
  PermutationGroup stab(g.degree(), std::move(gens));
  const mpz_class orbit_size = static_cast<unsigned long>(chain.levels().front().orbit.size());
  if (orbit_size * stab.order() != g.order()) {
    throw ConsistencyError("orbit-stabilizer identity fails at point " + std::to_string(i));
  }
  return stab;
}

}  // namespace balanced
