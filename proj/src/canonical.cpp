#include <algorithm>

#include "biplane/search.hpp"

namespace biplane {
namespace {

// Partition refinement on vertex labels. Labels are dense ranks; smaller
// labels come first in the final ordering.
class Refiner {
 public:
  explicit Refiner(const ColoredGraph& g) : g_(g), n_(g.num_vertices()), adj_(n_) {
    for (const Edge& e : g.edges()) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
  }

  std::vector<int> refine(std::vector<int> label) const {
    int cells = count_cells(label);
    while (true) {
      std::vector<std::pair<int, std::vector<int>>> sig(n_);
      for (int x = 0; x < n_; ++x) {
        sig[x].first = label[x];
        for (int y : adj_[x]) sig[x].second.push_back(label[y]);
        std::sort(sig[x].second.begin(), sig[x].second.end());
      }
      label = rank(sig);
      const int next = count_cells(label);
      if (next == cells) return label;
      cells = next;
    }
  }

  template <class Key>
  static std::vector<int> rank(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(keys.size());
    for (size_t i = 0; i < keys.size(); ++i)
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    return out;
  }

  static int count_cells(const std::vector<int>& label) {
    return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  }

  CanonicalForm certificate(const std::vector<int>& position, bool swapped) const {
    CanonicalForm f;
    f.colors.resize(n_);
    for (int x = 0; x < n_; ++x) {
      Color c = g_.color(x);
      f.colors[position[x]] = swapped ? static_cast<Color>(3 - c) : c;
    }
    for (const Edge& e : g_.edges()) f.edges.emplace_back(std::minmax(position[e.u], position[e.v]));
    std::sort(f.edges.begin(), f.edges.end());
    return f;
  }

  void search(const std::vector<int>& label, bool swapped, std::optional<CanonicalForm>& best) const {
    const int cells = count_cells(label);
    if (cells == n_) {
      CanonicalForm f = certificate(label, swapped);
      if (!best || f < *best) best = std::move(f);
      return;
    }
    // Target: the first cell (by label) with more than one member.
    std::vector<int> size(cells, 0);
    for (int l : label) ++size[l];
    int target = 0;
    while (size[target] == 1) ++target;
    for (int x = 0; x < n_; ++x) {
      if (label[x] != target) continue;
      std::vector<int> child(n_);
      for (int y = 0; y < n_; ++y) child[y] = 2 * label[y] + (y == x ? 0 : 1);
      search(refine(rank(child)), swapped, best);
    }
  }

 private:
  const ColoredGraph& g_;
  int n_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

CanonicalForm canonical_form(const ColoredGraph& g, bool allow_color_swap) {
  Refiner refiner(g);
  std::optional<CanonicalForm> best;
  for (bool swapped : {false, true}) {
    if (swapped && !allow_color_swap) break;
    std::vector<std::pair<int, int>> seed(g.num_vertices());
    for (VertexId x = 0; x < g.num_vertices(); ++x) {
      const int c = swapped ? 3 - g.color(x) : g.color(x);
      seed[x] = {c, g.degree(x)};
    }
    refiner.search(refiner.refine(Refiner::rank(seed)), swapped, best);
  }
  return best.value_or(CanonicalForm{});
}

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b, bool allow_color_swap) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a, allow_color_swap) == canonical_form(b, allow_color_swap);
}

}  // namespace biplane
