#include "epolab/trees.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace epolab {

RootedTreeStream::RootedTreeStream(int m) {
  if (m < 1) throw std::invalid_argument("rooted trees: m must be positive");
  levels_.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) levels_[i] = i + 1;
}

std::optional<std::vector<int>> RootedTreeStream::next() {
  if (done_) return std::nullopt;
  std::vector<int> out = levels_;
  // Successor: p is the last node deeper than level 2, q the last node before
  // it one level up; the subtree pattern at q is copied cyclically from p on.
  int p = static_cast<int>(levels_.size()) - 1;
  while (p >= 0 && levels_[p] <= 2) --p;
  if (p < 0) {
    done_ = true;
  } else {
    int q = p - 1;
    while (levels_[q] != levels_[p] - 1) --q;
    const int shift = p - q;
    for (std::size_t i = static_cast<std::size_t>(p); i < levels_.size(); ++i) {
      levels_[i] = levels_[i - shift];
    }
  }
  return out;
}

std::vector<int> level_sequence_parents(const std::vector<int>& levels) {
  std::vector<int> parent(levels.size(), -1);
  std::vector<int> last_at_level(levels.size() + 2, -1);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int lv = levels[i];
    if (i > 0) parent[i] = last_at_level[lv - 1];
    last_at_level[lv] = static_cast<int>(i);
  }
  return parent;
}

namespace {

void append_rooted_edges(const std::vector<int>& levels, int offset, std::vector<Graph::Edge>& edges) {
  const auto parent = level_sequence_parents(levels);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    edges.emplace_back(parent[i] + offset, static_cast<int>(i) + offset);
  }
}

// All root subtrees are smaller than half the tree.
bool rooted_at_unique_centroid(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  int start = -1;
  for (int i = 1; i <= n; ++i) {
    if (i == n || levels[i] == 2) {
      if (start >= 0 && 2 * (i - start) >= n) return false;
      start = i;
    }
  }
  return true;
}

}  // namespace

FreeTreeStream::FreeTreeStream(int n) : n_(n), unicentroid_(std::max(n, 1)) {
  if (n < 1 || n > 16) throw std::invalid_argument("enumerate_free_trees: need 1 <= n <= 16");
  if (n % 2 == 0) {
    RootedTreeStream halves(n / 2);
    while (auto seq = halves.next()) halves_.push_back(std::move(*seq));
  }
}

std::optional<Graph> FreeTreeStream::next() {
  while (!unicentroid_done_) {
    auto seq = unicentroid_.next();
    if (!seq) {
      unicentroid_done_ = true;
      break;
    }
    if (!rooted_at_unique_centroid(*seq)) continue;
    std::vector<Graph::Edge> edges;
    append_rooted_edges(*seq, 0, edges);
    return Graph(n_, std::move(edges));
  }
  if (pair_i_ >= halves_.size()) return std::nullopt;
  const int half = n_ / 2;
  std::vector<Graph::Edge> edges;
  append_rooted_edges(halves_[pair_i_], 0, edges);
  append_rooted_edges(halves_[pair_j_], half, edges);
  edges.emplace_back(0, half);
  if (++pair_j_ == halves_.size()) {
    ++pair_i_;
    pair_j_ = pair_i_;
  }
  return Graph(n_, std::move(edges));
}

std::vector<Graph> enumerate_free_trees(int n) {
  std::vector<Graph> out;
  FreeTreeStream stream(n);
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<int> tree_centroids(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("tree_centroids: not a tree");
  const int n = tree.vertex_count();
  std::vector<int> order;
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : tree.neighbors(order[i])) {
      if (w != parent[order[i]]) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  }
  std::vector<int> centroids;
  for (int v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (int w : tree.neighbors(v)) {
      if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
    }
    if (2 * heaviest <= n) centroids.push_back(v);
  }
  return centroids;
}

std::string tree_canonical_form(const Graph& tree) {
  const auto centroids = tree_centroids(tree);
  std::function<std::string(int, int)> encode = [&](int v, int from) {
    std::vector<std::string> kids;
    for (int w : tree.neighbors(v)) {
      if (w != from) kids.push_back(encode(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
  };
  std::string best;
  for (int root : centroids) {
    std::string form = encode(root, -1);
    if (best.empty() || form < best) best = std::move(form);
  }
  return best;
}

}  // namespace epolab
