#include "epolab/graph.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace epolab {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("graph: edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("graph: repeated edge");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  if (n_ <= kMaxMaskVertices) {
    masks_.assign(static_cast<std::size_t>(n_), 0);
    for (const auto& [u, v] : edges_) {
      masks_[u] |= VertexMask{1} << v;
      masks_[v] |= VertexMask{1} << u;
    }
  }
}

bool Graph::adjacent(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

VertexMask Graph::all_vertices() const {
  return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

Graph path_graph(int n) {
  std::vector<Graph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  return spider(Partition(std::vector<int>(static_cast<std::size_t>(leaves), 1)));
}

Graph spider(const Partition& legs) {
  const int n = 1 + legs.total();
  std::vector<Graph::Edge> edges;
  int next = 1;
  for (int len : legs.parts()) {
    // leaf = next, ..., next + len - 1 adjacent to the center
    for (int i = 0; i + 1 < len; ++i) edges.emplace_back(next + i, next + i + 1);
    edges.emplace_back(0, next + len - 1);
    next += len;
  }
  return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Graph::Edge> edges = g.edges();
  const int shift = g.vertex_count();
  for (const auto& [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

namespace {

// Components of g restricted to vertices with alive[v], via iterative DFS.
std::vector<std::vector<int>> components_where(const Graph& g, const std::vector<char>& alive) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    std::vector<int> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (alive[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& l, const auto& r) { return l.size() > r.size(); });
  return out;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
  return components_where(g, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 1));
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && static_cast<int>(g.edge_count()) == g.vertex_count() - 1 &&
         is_connected(g);
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

CutProfile::CutProfile(int a, int b, std::vector<int> cs) : a_(a), b_(b), cs_(std::move(cs)), c_(0) {
  if (cs_.empty()) throw std::invalid_argument("cut profile: need at least one c_i");
  if (!std::is_sorted(cs_.begin(), cs_.end(), std::greater<>()) || cs_.back() < 1) {
    throw std::invalid_argument("cut profile: c_i must be positive and weakly decreasing");
  }
  if (a_ < b_ || b_ < cs_.front()) {
    throw std::invalid_argument("cut profile: need a >= b >= c_1");
  }
  for (int ci : cs_) c_ += ci;
}

CutProfile CutProfile::from_component_sizes(std::vector<int> sizes) {
  if (sizes.size() < 3) throw std::invalid_argument("cut profile: need at least 3 components");
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return CutProfile(sizes[0], sizes[1], std::vector<int>(sizes.begin() + 2, sizes.end()));
}

std::string to_string(const CutProfile& profile) {
  std::string out = "(a=" + std::to_string(profile.a()) + ",b=" + std::to_string(profile.b()) + ",cs=";
  for (std::size_t i = 0; i < profile.cs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(profile.cs()[i]);
  }
  return out + ")";
}

std::vector<VertexProfile> cut_profiles(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("cut_profiles: graph is disconnected");
  std::vector<VertexProfile> out;
  std::vector<char> alive(static_cast<std::size_t>(g.vertex_count()), 1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    alive[v] = 0;
    const auto comps = components_where(g, alive);
    alive[v] = 1;
    if (comps.size() < 3) continue;
    std::vector<int> sizes;
    for (const auto& comp : comps) sizes.push_back(static_cast<int>(comp.size()));
    out.push_back({v, CutProfile::from_component_sizes(std::move(sizes))});
  }
  return out;
}

Partition ConnectedPartition::type() const {
  std::vector<int> sizes;
  for (const auto& block : blocks) sizes.push_back(static_cast<int>(block.size()));
  return Partition::from_unsorted(std::move(sizes));
}

std::string validate_connected_partition(const Graph& g, const ConnectedPartition& cp,
                                         const Partition& lambda) {
  const int n = g.vertex_count();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < cp.blocks.size(); ++i) {
    if (cp.blocks[i].empty()) return "empty block";
    for (int v : cp.blocks[i]) {
      if (v < 0 || v >= n) return "vertex out of range";
      if (owner[v] != -1) return "vertex " + std::to_string(v) + " in two blocks";
      owner[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (owner[v] == -1) return "vertex " + std::to_string(v) + " uncovered";
  }
  for (std::size_t i = 0; i < cp.blocks.size(); ++i) {
    std::vector<char> alive(static_cast<std::size_t>(n), 0);
    for (int v : cp.blocks[i]) alive[v] = 1;
    if (components_where(g, alive).size() != 1) {
      return "block " + std::to_string(i) + " is not connected";
    }
  }
  if (cp.type() != lambda) return "block sizes " + to_string(cp.type()) + " differ from type";
  return {};
}

namespace {

// Connected-partition backtracking over bitmasks: always grow the block that
// holds the least unassigned vertex, so each partition is built exactly once.
class PartitionSearch {
public:
  PartitionSearch(const Graph& g, const Partition& lambda) : g_(g) {
    counts_.assign(static_cast<std::size_t>(lambda.largest()) + 1, 0);
    for (int p : lambda.parts()) ++counts_[p];
  }

  std::optional<ConnectedPartition> run() {
    if (!solve(g_.all_vertices())) return std::nullopt;
    ConnectedPartition cp;
    for (VertexMask block : chosen_) {
      std::vector<int> verts;
      for (VertexMask m = block; m; m &= m - 1) verts.push_back(std::countr_zero(m));
      cp.blocks.push_back(std::move(verts));
    }
    std::sort(cp.blocks.begin(), cp.blocks.end(), [](const auto& l, const auto& r) {
      if (l.size() != r.size()) return l.size() > r.size();
      return l.front() < r.front();
    });
    return cp;
  }

private:
  using SumSet = std::bitset<Graph::kMaxMaskVertices + 1>;

  std::string memo_key(VertexMask unassigned) const {
    std::string key(reinterpret_cast<const char*>(&unassigned), sizeof unassigned);
    for (int c : counts_) key.push_back(static_cast<char>(c));
    return key;
  }

  SumSet subset_sums() const {
    SumSet sums;
    sums.set(0);
    for (std::size_t s = 1; s < counts_.size(); ++s)
      for (int i = 0; i < counts_[s]; ++i) sums |= sums << s;
    return sums;
  }

  // Every component of the unassigned region must be fillable by a
  // sub-multiset of the remaining sizes.
  bool feasible(VertexMask unassigned) const {
    const SumSet sums = subset_sums();
    VertexMask rest = unassigned;
    while (rest) {
      VertexMask comp = rest & (~rest + 1);
      VertexMask frontier = comp;
      while (frontier) {
        VertexMask grown = 0;
        for (VertexMask m = frontier; m; m &= m - 1) grown |= g_.neighbor_mask(std::countr_zero(m));
        grown &= rest & ~comp;
        comp |= grown;
        frontier = grown;
      }
      if (!sums.test(static_cast<std::size_t>(std::popcount(comp)))) return false;
      rest &= ~comp;
    }
    return true;
  }

  bool solve(VertexMask unassigned) {
    if (!unassigned) return true;
    if (!feasible(unassigned)) return false;
    const std::string key = memo_key(unassigned);
    if (dead_.contains(key)) return false;
    const int root = std::countr_zero(unassigned);
    for (std::size_t size = counts_.size() - 1; size >= 1; --size) {
      if (!counts_[size]) continue;
      --counts_[size];
      const VertexMask root_bit = VertexMask{1} << root;
      const bool found = grow(root_bit, g_.neighbor_mask(root) & unassigned, 0,
                              static_cast<int>(size), unassigned);
      ++counts_[size];
      if (found) return true;
    }
    dead_.insert(key);
    return false;
  }

  // Enumerates connected sets containing `block` inside `region`, extending only
  // through `frontier` and never through `excluded`.
  bool grow(VertexMask block, VertexMask frontier, VertexMask excluded, int target, VertexMask region) {
    if (std::popcount(block) == target) {
      chosen_.push_back(block);
      if (solve(region & ~block)) return true;
      chosen_.pop_back();
      return false;
    }
    while (frontier) {
      const VertexMask w = frontier & (~frontier + 1);
      frontier &= ~w;
      const int wv = std::countr_zero(w);
      const VertexMask next_frontier =
          (frontier | (g_.neighbor_mask(wv) & region)) & ~block & ~w & ~excluded;
      if (grow(block | w, next_frontier, excluded, target, region)) return true;
      excluded |= w;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> counts_;
  std::vector<VertexMask> chosen_;
  std::unordered_set<std::string> dead_;
};

}  // namespace

std::optional<ConnectedPartition> has_connected_partition(const Graph& g, const Partition& lambda) {
  if (lambda.total() != g.vertex_count()) {
    throw std::invalid_argument("has_connected_partition: |lambda| = " + std::to_string(lambda.total()) +
                                " but n = " + std::to_string(g.vertex_count()));
  }
  if (g.vertex_count() > Graph::kMaxMaskVertices) {
    throw std::invalid_argument("has_connected_partition: more than 64 vertices");
  }
  return PartitionSearch(g, lambda).run();
}

std::vector<Partition> missing_types(const Graph& g) {
  if (g.vertex_count() > 25) throw std::invalid_argument("missing_types: n exceeds 25");
  if (g.vertex_count() < 1 || !is_connected(g)) {
    throw std::invalid_argument("missing_types: graph must be connected and nonempty");
  }
  std::vector<Partition> out;
  PartitionStream stream(g.vertex_count());
  while (auto lambda = stream.next()) {
    if (!has_connected_partition(g, *lambda)) out.push_back(*lambda);
  }
  return out;
}

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> n;
  std::vector<Graph::Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    auto fail = [&] {
      return std::invalid_argument("graph text: malformed line " + std::to_string(lineno));
    };
    if (!n) {
      int value = 0;
      if (!(fields >> value) || value < 0) throw fail();
      n = value;
    } else {
      int u = 0;
      int v = 0;
      if (!(fields >> u >> v)) throw fail();
      edges.emplace_back(u, v);
    }
    std::string extra;
    if (fields >> extra) throw fail();
  }
  if (!n) throw std::invalid_argument("graph text: missing vertex count");
  return Graph(*n, std::move(edges));
}

std::string to_text(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace epolab
