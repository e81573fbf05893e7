#include "balanced/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "balanced/errors.hpp"

namespace balanced {

ColoredGraph::ColoredGraph(Matrix<std::uint32_t> edge_colors, std::vector<std::uint32_t> vertex_colors)
    : n_(edge_colors.rows()), vertex_colors_(std::move(vertex_colors)) {
  if (!edge_colors.is_square()) throw InputError("edge color matrix is not square");
  if (vertex_colors_.empty()) vertex_colors_.assign(n_, 0);
  if (vertex_colors_.size() != n_) throw InputError("vertex color count does not match graph size");
  std::uint32_t top = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j) continue;
      if (edge_colors(i, j) != edge_colors(j, i)) throw InputError("edge colors are not symmetric");
      top = std::max(top, edge_colors(i, j) + 1);
    }
  }
  color_count_ = top;
  colors_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) colors_[i * n_ + j] = i == j ? static_cast<std::uint32_t>(top) : edge_colors(i, j);
  }
}

bool ColoredGraph::is_automorphism(const Permutation& p) const {
  if (p.degree() != n_) return false;
  for (std::size_t i = 0; i < n_; ++i) {
    if (vertex_colors_[p[i]] != vertex_colors_[i]) return false;
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (color(p[i], p[j]) != color(i, j)) return false;
    }
  }
  return true;
}

ColoredGraph colored_graph_from_config(const Configuration& c) {
  const std::size_t n = c.size();
  std::map<Rational, std::uint32_t> index;
  for (const auto& u : inner_product_spectrum(c)) index.emplace(u, static_cast<std::uint32_t>(index.size()));
  Matrix<std::uint32_t> colors(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) colors(i, j) = index.at(c.inner(i, j));
    }
  }
  return ColoredGraph(std::move(colors));
}

ColoredGraph colored_graph_from_adjacency(const Matrix<int>& a) {
  if (!a.is_square()) throw InputError("adjacency matrix is not square");
  Matrix<std::uint32_t> colors(a.rows(), a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) throw InputError("adjacency matrix has a nonzero diagonal entry at row " + std::to_string(i));
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0 && a(i, j) != 1) throw InputError("adjacency entries must be 0 or 1");
      if (a(i, j) != a(j, i)) throw InputError("adjacency matrix is not symmetric");
      colors(i, j) = static_cast<std::uint32_t>(a(i, j));
    }
  }
  return ColoredGraph(std::move(colors));
}

namespace {

using Trace = std::vector<std::uint64_t>;

/// Ordered partition of the vertex set. Cells are contiguous ranges of
/// `elems`, identified by their start position, which never changes once
/// a cell exists.
struct Partition {
  std::vector<std::uint32_t> elems;
  std::vector<std::uint32_t> cell_of;   // vertex -> start of its cell
  std::vector<std::uint32_t> cell_end;  // start -> one past the end
  std::size_t cells = 0;

  [[nodiscard]] bool discrete() const { return cells == elems.size(); }
  [[nodiscard]] std::size_t size_of(std::uint32_t start) const { return cell_end[start] - start; }
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

class Refiner {
 public:
  explicit Refiner(const ColoredGraph& g) : g_(g), width_(g.color_count() + 1), counts_(g.size() * width_) {}

  Partition initial() const {
    const std::size_t n = g_.size();
    Partition p;
    p.elems.resize(n);
    std::iota(p.elems.begin(), p.elems.end(), 0U);
    std::stable_sort(p.elems.begin(), p.elems.end(), [&](std::uint32_t a, std::uint32_t b) { return g_.vertex_color(a) < g_.vertex_color(b); });
    p.cell_of.resize(n);
    p.cell_end.assign(n, 0);
    std::size_t start = 0;
    while (start < n) {
      std::size_t end = start + 1;
      while (end < n && g_.vertex_color(p.elems[end]) == g_.vertex_color(p.elems[start])) ++end;
      for (std::size_t k = start; k < end; ++k) p.cell_of[p.elems[k]] = static_cast<std::uint32_t>(start);
      p.cell_end[start] = static_cast<std::uint32_t>(end);
      ++p.cells;
      start = end;
    }
    return p;
  }

  /// Splits v's cell into {v} followed by the rest; returns the start of {v}.
  static std::uint32_t individualize(Partition& p, std::uint32_t v) {
    const std::uint32_t start = p.cell_of[v];
    const std::uint32_t end = p.cell_end[start];
    auto it = std::find(p.elems.begin() + start, p.elems.begin() + end, v);
    std::iter_swap(p.elems.begin() + start, it);
    if (end - start > 1) {
      p.cell_end[start] = start + 1;
      p.cell_end[start + 1] = end;
      for (std::uint32_t k = start + 1; k < end; ++k) p.cell_of[p.elems[k]] = start + 1;
      ++p.cells;
    }
    return start;
  }

  /// Refines to the coarsest equitable partition finer than `p`, starting
  /// from the splitter cells in `queue`. Appends a label-invariant trace.
  /// If `reference` is given, stops and returns false as soon as the trace
  /// deviates from it.
  bool refine(Partition& p, std::deque<std::uint32_t> queue, Trace& trace, const Trace* reference) {
    const std::size_t n = g_.size();
    std::vector<char> queued(n, 0);
    for (auto s : queue) queued[s] = 1;
    const auto emit = [&](std::uint64_t v) {
      trace.push_back(v);
      return reference == nullptr || (trace.size() <= reference->size() && (*reference)[trace.size() - 1] == v);
    };
    while (!queue.empty() && !p.discrete()) {
      const std::uint32_t splitter = queue.front();
      queue.pop_front();
      queued[splitter] = 0;
      std::fill(counts_.begin(), counts_.end(), 0U);
      for (std::uint32_t k = splitter; k < p.cell_end[splitter]; ++k) {
        const std::uint32_t w = p.elems[k];
        for (std::size_t v = 0; v < n; ++v) ++counts_[v * width_ + g_.color(v, w)];
      }
      if (!emit(splitter)) return false;
      for (std::uint32_t start = 0; start < n;) {
        const std::uint32_t end = p.cell_end[start];
        if (end - start > 1 && !split(p, start, end, queue, queued, emit)) return false;
        start = end;
      }
    }
    return emit(0xfeedULL + p.cells) && (reference == nullptr || trace.size() == reference->size());
  }

 private:
  [[nodiscard]] std::span<const std::uint32_t> key(std::uint32_t v) const { return {counts_.data() + v * width_, width_}; }

  template <typename Emit>
  bool split(Partition& p, std::uint32_t start, std::uint32_t end, std::deque<std::uint32_t>& queue,
             std::vector<char>& queued, Emit& emit) {
    auto first = p.elems.begin() + start;
    auto last = p.elems.begin() + end;
    const auto less = [&](std::uint32_t a, std::uint32_t b) {
      const auto ka = key(a);
      const auto kb = key(b);
      return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
    };
    std::sort(first, last, less);
    if (!less(*first, *(last - 1))) return true;  // all keys equal
    std::uint64_t signature = mix(start, end - start);
    std::uint32_t piece = start;
    for (std::uint32_t k = start + 1; k <= end; ++k) {
      if (k < end && !less(p.elems[k - 1], p.elems[k])) continue;
      // [piece, k) is one piece
      std::uint64_t h = k - piece;
      for (std::uint32_t c : key(p.elems[piece])) h = mix(h, c);
      signature = mix(signature, h);
      p.cell_end[piece] = k;
      for (std::uint32_t m = piece; m < k; ++m) p.cell_of[p.elems[m]] = piece;
      if (!queued[piece]) {
        queued[piece] = 1;
        queue.push_back(piece);
      }
      if (piece != start) ++p.cells;
      piece = k;
    }
    return emit(signature);
  }

  const ColoredGraph& g_;
  std::size_t width_;
  std::vector<std::uint32_t> counts_;
};

struct PathNode {
  Partition partition;
  Trace trace;
  std::uint32_t target = 0;  // start of the target cell (non-leaf nodes)
  std::uint32_t choice = 0;  // vertex individualized on the first path
};

std::optional<std::uint32_t> target_cell(const Partition& p) {
  std::optional<std::uint32_t> best;
  for (std::uint32_t start = 0; start < p.elems.size(); start = p.cell_end[start]) {
    const std::size_t size = p.size_of(start);
    if (size > 1 && (!best || size < p.size_of(*best))) best = start;
  }
  return best;
}

std::vector<std::uint32_t> cell_members(const Partition& p, std::uint32_t start) {
  std::vector<std::uint32_t> out(p.elems.begin() + start, p.elems.begin() + p.cell_end[start]);
  std::sort(out.begin(), out.end());
  return out;
}

class Search {
 public:
  Search(const ColoredGraph& g, AutomorphismSearchStats& stats) : g_(g), refiner_(g), stats_(stats) {}

  void build_first_path() {
    PathNode root{refiner_.initial(), {}, 0, 0};
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < g_.size(); s = root.partition.cell_end[s]) queue.push_back(s);
    refiner_.refine(root.partition, queue, root.trace, nullptr);
    path_.push_back(std::move(root));
    ++stats_.nodes;
    while (auto target = target_cell(path_.back().partition)) {
      PathNode& parent = path_.back();
      parent.target = *target;
      parent.choice = cell_members(parent.partition, *target).front();
      PathNode child{parent.partition, {}, 0, 0};
      const std::uint32_t s = Refiner::individualize(child.partition, parent.choice);
      refiner_.refine(child.partition, {s}, child.trace, nullptr);
      path_.push_back(std::move(child));
      ++stats_.nodes;
    }
    ++stats_.leaves;
    first_leaf_ = path_.back().partition.elems;
  }

  /// Generators found so far, with the first-path level they belong to.
  void run() {
    const std::size_t depth = path_.size() - 1;
    stats_.level_orbits.assign(depth, 1);
    for (std::size_t level = depth; level-- > 0;) {
      const PathNode& node = path_[level];
      std::vector<std::uint32_t> failed;
      for (std::uint32_t w : cell_members(node.partition, node.target)) {
        if (w == node.choice) continue;
        const auto orbit_id = orbit_labels(level);
        if (orbit_id[w] == orbit_id[node.choice]) continue;
        if (std::any_of(failed.begin(), failed.end(), [&](std::uint32_t f) { return orbit_id[f] == orbit_id[w]; })) continue;
        if (auto gamma = explore_branch(level, w)) {
          generators_.push_back({std::move(*gamma), level});
        } else {
          failed.push_back(w);
        }
      }
      const auto orbit_id = orbit_labels(level);
      stats_.level_orbits[level] = static_cast<std::size_t>(
          std::count(orbit_id.begin(), orbit_id.end(), orbit_id[node.choice]));
    }
  }

  [[nodiscard]] std::vector<Permutation> generators() const {
    std::vector<Permutation> out;
    for (const auto& [p, level] : generators_) out.push_back(p);
    return out;
  }

 private:
  // Orbit representatives under the generators living at `level` or deeper.
  std::vector<std::size_t> orbit_labels(std::size_t level) const {
    std::vector<std::size_t> parent(g_.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [p, l] : generators_) {
      if (l < level) continue;
      for (std::size_t x = 0; x < g_.size(); ++x) {
        const std::size_t a = find(x);
        const std::size_t b = find(p[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<std::size_t> out(g_.size());
    for (std::size_t x = 0; x < g_.size(); ++x) out[x] = find(x);
    return out;
  }

  std::optional<Permutation> explore_branch(std::size_t level, std::uint32_t w) {
    Partition child = path_[level].partition;
    const std::uint32_t s = Refiner::individualize(child, w);
    Trace trace;
    ++stats_.nodes;
    if (!refiner_.refine(child, {s}, trace, &path_[level + 1].trace)) return std::nullopt;
    return explore(child, level + 1);
  }

  std::optional<Permutation> explore(const Partition& p, std::size_t depth) {
    if (p.discrete()) {
      ++stats_.leaves;
      std::vector<std::size_t> images(g_.size());
      for (std::size_t k = 0; k < first_leaf_.size(); ++k) images[first_leaf_[k]] = p.elems[k];
      Permutation gamma(std::move(images));
      if (g_.is_automorphism(gamma)) return gamma;
      return std::nullopt;
    }
    const std::uint32_t target = path_[depth].target;
    for (std::uint32_t u : cell_members(p, target)) {
      Partition child = p;
      const std::uint32_t s = Refiner::individualize(child, u);
      Trace trace;
      ++stats_.nodes;
      if (!refiner_.refine(child, {s}, trace, &path_[depth + 1].trace)) continue;
      if (auto found = explore(child, depth + 1)) return found;
    }
    return std::nullopt;
  }

  const ColoredGraph& g_;
  Refiner refiner_;
  AutomorphismSearchStats& stats_;
  std::vector<PathNode> path_;
  std::vector<std::uint32_t> first_leaf_;
  std::vector<std::pair<Permutation, std::size_t>> generators_;
};

}  // namespace

PermutationGroup automorphism_group(const ColoredGraph& g, AutomorphismSearchStats* stats) {
  AutomorphismSearchStats local;
  AutomorphismSearchStats& s = stats ? *stats : local;
  s = {};
  if (g.size() == 0) return PermutationGroup::trivial(0);
  Search search(g, s);
  search.build_first_path();
  search.run();
  PermutationGroup group(g.size(), search.generators());
  for (const auto& gen : group.generators()) {
    if (!g.is_automorphism(gen)) throw ConsistencyError("automorphism search produced a non-automorphism");
  }
  mpz_class product = 1;
  for (std::size_t o : s.level_orbits) product *= static_cast<unsigned long>(o);
  if (product != group.order()) {
    throw ConsistencyError("search order " + product.get_str() + " disagrees with Schreier-Sims order " + group.order_string());
  }
  return group;
}

}  // namespace balanced
