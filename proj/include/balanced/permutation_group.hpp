#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace balanced {

/// A permutation of {0, ..., degree-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument if `images` is not a permutation.
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t degree);

  [[nodiscard]] std::size_t degree() const { return images_.size(); }
  [[nodiscard]] std::size_t operator[](std::size_t x) const { return images_[x]; }
  [[nodiscard]] const std::vector<std::size_t>& images() const { return images_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Permutation inverse() const;
  /// Smallest point not fixed, if any.
  [[nodiscard]] std::optional<std::size_t> first_moved() const;

  /// Product applying `a` first, then `b`.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// One level of a stabilizer chain.
struct ChainLevel {
  std::size_t base_point = 0;
  /// Strong generators fixing every earlier base point.
  std::vector<Permutation> generators;
  /// Orbit of base_point in discovery order.
  std::vector<std::size_t> orbit;
  /// transversal[beta] maps base_point to beta (present iff beta is in the orbit).
  std::vector<std::optional<Permutation>> transversal;
};

/// Base and strong generating set built by deterministic Schreier-Sims.
class StabilizerChain {
 public:
  /// `prefix` lists base points to use first; further base points are the
  /// smallest points moved by the element that forces the extension.
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators,
                  std::vector<std::size_t> prefix = {});

  [[nodiscard]] const std::vector<ChainLevel>& levels() const { return levels_; }
  [[nodiscard]] std::vector<std::size_t> base() const;
  [[nodiscard]] mpz_class order() const;
  /// Membership test by sifting.
  [[nodiscard]] bool contains(const Permutation& g) const;

 private:
  struct Sifted {
    Permutation residue;
    std::size_t level;
  };
  Sifted strip(Permutation g, std::size_t from) const;
  void rebuild_transversal(std::size_t level);
  void run();

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
};

/// A permutation group given by generators, with its stabilizer chain.
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);
  static PermutationGroup trivial(std::size_t degree) { return {degree, {}}; }

  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] const std::vector<Permutation>& generators() const { return generators_; }
  [[nodiscard]] const StabilizerChain& chain() const { return chain_; }
  [[nodiscard]] mpz_class order() const { return chain_.order(); }
  [[nodiscard]] std::string order_string() const { return order().get_str(10); }
  [[nodiscard]] bool contains(const Permutation& g) const { return chain_.contains(g); }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  StabilizerChain chain_;
};

/// Orbit partition: each orbit sorted, orbits ordered by least element.
std::vector<std::vector<std::size_t>> orbits(const PermutationGroup& g);

/// Orbit of one point, sorted.
std::vector<std::size_t> orbit_of(const PermutationGroup& g, std::size_t point);

/// Stab_G(i), generated by the strong generators below the first base
/// point of a chain whose base starts at i. Checks |G| = |i^G|·|Stab(i)|.
PermutationGroup point_stabilizer(const PermutationGroup& g, std::size_t i);

}  // namespace balanced
