#pragma once

// Free-tree enumeration by canonical level sequences, and tree canonical forms.

#include <optional>
#include <string>
#include <vector>

#include "epolab/graph.hpp"

namespace epolab {

/// Streams canonical level sequences of rooted trees on m vertices (root at
/// level 1), each rooted isomorphism class exactly once, in decreasing
/// lexicographic order starting from the path.
class RootedTreeStream {
public:
  explicit RootedTreeStream(int m);
  std::optional<std::vector<int>> next();

private:
  std::vector<int> levels_;
  bool done_ = false;
};

/// Parent of each node in a level sequence (root's parent is -1).
std::vector<int> level_sequence_parents(const std::vector<int>& levels);

/// Streams one tree per isomorphism class of free trees on n vertices.
/// Trees with one centroid come from rooted trees whose root subtrees all
/// have fewer than n/2 vertices; trees with two centroids are unordered pairs
/// of rooted trees on n/2 vertices joined at their roots.
class FreeTreeStream {
public:
  /// Throws std::invalid_argument unless 1 <= n <= 16.
  explicit FreeTreeStream(int n);
  std::optional<Graph> next();

private:
  int n_;
  RootedTreeStream unicentroid_;
  bool unicentroid_done_ = false;
  std::vector<std::vector<int>> halves_;
  std::size_t pair_i_ = 0;
  std::size_t pair_j_ = 0;
};

std::vector<Graph> enumerate_free_trees(int n);

/// Centroid vertices of a tree (one or two).
std::vector<int> tree_centroids(const Graph& tree);

/// Isomorphism-invariant encoding of a tree: the lexicographically least
/// parenthesis string over its centroid rootings. Throws unless `tree` is a tree.
std::string tree_canonical_form(const Graph& tree);

}  // namespace epolab
