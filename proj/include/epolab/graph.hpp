#pragma once

// Simple undirected graphs, cut profiles and connected partitions.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epolab/combinat.hpp"

namespace epolab {

using VertexMask = std::uint64_t;

/// Undirected simple graph on vertices 0..n-1.
class Graph {
public:
  using Edge = std::pair<int, int>;

  /// Maximum vertex count supported by the bitmask-based searches.
  static constexpr int kMaxMaskVertices = 64;

  Graph() = default;
  /// Throws std::invalid_argument on loops, repeated edges or out-of-range ends.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Edges with u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;
  /// Neighborhood bitmask; requires n <= 64.
  VertexMask neighbor_mask(int v) const { return masks_[v]; }
  VertexMask all_vertices() const;

  friend bool operator==(const Graph& l, const Graph& r) {
    return l.n_ == r.n_ && l.edges_ == r.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexMask> masks_;
};

Graph path_graph(int n);
Graph complete_graph(int n);
/// K_{1,leaves}; same as spider with all legs of length 1.
Graph star_graph(int leaves);
/// Paths of the given lengths joined at vertex 0; each leg occupies
/// consecutive labels starting at its leaf and ending next to the center.
Graph spider(const Partition& legs);
/// Vertices of `h` are shifted past those of `g`.
Graph disjoint_union(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
int max_degree(const Graph& g);

/// Maximal connected vertex sets, sorted by size descending then least label.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Sizes around a cut vertex: a >= b >= c_1 >= ... >= c_k >= 1, k >= 1.
class CutProfile {
public:
  /// Throws std::invalid_argument unless a >= b >= cs[0] and cs is a partition.
  CutProfile(int a, int b, std::vector<int> cs);
  /// Sorted component sizes (at least three) around the cut vertex.
  static CutProfile from_component_sizes(std::vector<int> sizes);

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  const std::vector<int>& cs() const noexcept { return cs_; }
  int c1() const { return cs_.front(); }
  int k() const noexcept { return static_cast<int>(cs_.size()); }
  int c() const noexcept { return c_; }
  int n() const noexcept { return a_ + b_ + c_ + 1; }

  friend bool operator==(const CutProfile&, const CutProfile&) = default;

private:
  int a_;
  int b_;
  std::vector<int> cs_;
  int c_;
};

std::string to_string(const CutProfile& profile);

struct VertexProfile {
  int vertex;
  CutProfile profile;
};

/// Profiles of every vertex whose deletion leaves >= 3 components.
/// Throws std::invalid_argument if g is disconnected.
std::vector<VertexProfile> cut_profiles(const Graph& g);

/// Blocks of a connected partition, ordered by size descending then least
/// label; each block lists its vertices ascending.
struct ConnectedPartition {
  std::vector<std::vector<int>> blocks;

  Partition type() const;
};

/// Empty string when `cp` is a connected partition of g of type lambda,
/// otherwise a description of the first violated condition.
std::string validate_connected_partition(const Graph& g, const ConnectedPartition& cp,
                                         const Partition& lambda);

/// Backtracking search for a connected partition of type lambda.
/// Throws std::invalid_argument when |lambda| != n or n > 64.
std::optional<ConnectedPartition> has_connected_partition(const Graph& g, const Partition& lambda);

/// Every lambda |- n lacking a connected partition, in partition stream order.
/// Requires g connected and n <= 25.
std::vector<Partition> missing_types(const Graph& g);

/// Text format: first line n, then "u v" per edge. Blank lines and lines
/// starting with '#' are ignored.
Graph parse_graph_text(std::string_view text);
std::string to_text(const Graph& g);

}  // namespace epolab
