#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

namespace oracle {

namespace {

std::uint64_t count_with_max(int n, int max_part, std::map<std::pair<int, int>, std::uint64_t>& memo) {
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  const auto key = std::make_pair(n, max_part);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (int first = std::min(n, max_part); first >= 1; --first) total += count_with_max(n - first, first, memo);
  return memo[key] = total;
}

bool block_connected(const Graph& g, const std::vector<int>& block) {
  std::set<int> members(block.begin(), block.end());
  std::vector<int> stack{block.front()};
  std::set<int> seen{block.front()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (members.count(w) && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == members.size();
}

std::string ahu(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(v)) {
    if (w != parent) kids.push_back(ahu(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

// Colour refinement: recolour by (colour, sorted neighbour colours) until stable.
std::vector<int> refine(const Graph& g, std::vector<int> colours) {
  const int n = g.vertex_count();
  int classes = static_cast<int>(std::set<int>(colours.begin(), colours.end()).size());
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].first = colours[v];
      for (int w : g.neighbors(v)) sig[v].second.push_back(colours[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      colours[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    const int next = static_cast<int>(sorted.size());
    if (next == classes) return colours;
    classes = next;
  }
}

void search(const Graph& g, std::vector<int> colours, std::uint64_t& best, bool& have) {
  const int n = g.vertex_count();
  colours = refine(g, std::move(colours));
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  for (int c : colours) ++size[c];
  int target = -1;
  for (int c = 0; c < n; ++c) {
    if (size[c] > 1) {
      target = c;
      break;
    }
  }
  if (target < 0) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[colours[v]] = v;
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) code = code << 1 | (g.adjacent(order[i], order[j]) ? 1 : 0);
    }
    if (!have || code > best) best = code;
    have = true;
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (colours[v] != target) continue;
    std::vector<int> next(colours.size());
    for (int u = 0; u < n; ++u) next[u] = 2 * colours[u] + (u == v ? 0 : 1);
    search(g, std::move(next), best, have);
  }
}

std::uint64_t zero_one_matrices(std::vector<int> rows, std::vector<int> cols, std::size_t row) {
  if (row == rows.size()) {
    return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0;
  }
  std::uint64_t total = 0;
  const int m = static_cast<int>(cols.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != rows[row]) continue;
    bool ok = true;
    for (int j = 0; j < m; ++j) {
      if ((mask >> j & 1) && cols[j] == 0) ok = false;
    }
    if (!ok) continue;
    for (int j = 0; j < m; ++j) cols[j] -= mask >> j & 1;
    total += zero_one_matrices(rows, cols, row + 1);
    for (int j = 0; j < m; ++j) cols[j] += mask >> j & 1;
  }
  return total;
}

}  // namespace

std::uint64_t partition_count(int n) {
  std::map<std::pair<int, int>, std::uint64_t> memo;
  return count_with_max(n, n, memo);
}

std::vector<std::pair<int, int>> two_coin_all(int n, int c) {
  std::vector<std::pair<int, int>> out;
  for (int a1 = 0; a1 * c <= n; ++a1) {
    if ((n - a1 * c) % (c - 1) == 0) out.emplace_back(a1, (n - a1 * c) / (c - 1));
  }
  return out;
}

bool interval_reachable(int n, int lo, int hi) {
  std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
  reach[0] = 1;
  for (int s = 1; s <= n; ++s) {
    for (int p = lo; p <= hi && p <= s; ++p) {
      if (reach[s - p]) {
        reach[s] = 1;
        break;
      }
    }
  }
  return reach[n];
}

bool avoiding_arrangement_exists(const Partition& lambda, int b, int c) {
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<char> reach(static_cast<std::size_t>(b) + 1, 0);
    reach[0] = 1;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j == i) continue;
      for (int s = b; s >= parts[j]; --s) reach[s] = reach[s] || reach[s - parts[j]];
    }
    for (int s = std::max(0, b + c + 1 - parts[i]); s <= b; ++s) {
      if (reach[s]) return true;
    }
  }
  return false;
}

bool avoiding_arrangement_exists_brute(const Partition& lambda, int b, int c) {
  std::vector<int> parts = lambda.parts();
  std::sort(parts.begin(), parts.end());
  do {
    int running = 0;
    bool hit = false;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      running += parts[i];
      if (running >= b + 1 && running <= b + c) hit = true;
    }
    if (!hit) return true;
  } while (std::next_permutation(parts.begin(), parts.end()));
  return false;
}

bool has_connected_partition(const Graph& g, const Partition& lambda) {
  const int n = g.vertex_count();
  const int blocks = static_cast<int>(lambda.length());
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::function<bool(int, int)> go = [&](int v, int used) -> bool {
    if (v == n) {
      if (used != blocks) return false;
      std::vector<std::vector<int>> groups(static_cast<std::size_t>(blocks));
      for (int u = 0; u < n; ++u) groups[label[u]].push_back(u);
      std::vector<int> sizes;
      for (const auto& grp : groups) sizes.push_back(static_cast<int>(grp.size()));
      std::sort(sizes.rbegin(), sizes.rend());
      if (sizes != lambda.parts()) return false;
      return std::all_of(groups.begin(), groups.end(), [&](const auto& grp) { return block_connected(g, grp); });
    }
    for (int l = 0; l <= used && l < blocks; ++l) {
      label[v] = l;
      if (go(v + 1, std::max(used, l + 1))) return true;
    }
    return false;
  };
  return go(0, 0);
}

std::vector<Graph> labelled_trees(int n) {
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::vector<Graph> out;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[s];
    std::vector<Graph::Edge> edges;
    for (int s : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
      --degree[leaf];
      --degree[s];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) last.push_back(v);
    }
    edges.emplace_back(last[0], last[1]);
    out.emplace_back(n, edges);
    std::size_t pos = 0;
    while (pos < seq.size() && ++seq[pos] == n) seq[pos++] = 0;
    if (pos == seq.size()) break;
  }
  return out;
}

std::string tree_code_all_roots(const Graph& tree) {
  std::string best;
  for (int r = 0; r < tree.vertex_count(); ++r) {
    std::string code = ahu(tree, r, -1);
    if (r == 0 || code < best) best = std::move(code);
  }
  return best;
}

std::uint64_t canonical_code(const Graph& g) {
  std::uint64_t best = 0;
  bool have = false;
  search(g, std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0), best, have);
  // Vertex count in the top bits separates graphs of different orders.
  return best | static_cast<std::uint64_t>(g.vertex_count()) << 58;
}

std::vector<Graph> all_graphs(int n) {
  if (n == 1) return {Graph(1, {})};
  std::vector<Graph> out;
  std::unordered_set<std::uint64_t> seen;
  for (const Graph& h : all_graphs(n - 1)) {
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::vector<Graph::Edge> edges = h.edges();
      for (int v = 0; v < n - 1; ++v) {
        if (mask >> v & 1) edges.emplace_back(v, n - 1);
      }
      Graph g(n, edges);
      if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n)) {
    if (epolab::is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::map<Partition, std::uint64_t> monomial_coefficients_by_colouring(const Graph& g) {
  const int n = g.vertex_count();
  std::map<Partition, std::uint64_t> out;
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : g.edges()) {
      if (colour[u] == colour[v]) proper = false;
    }
    if (proper) {
      std::vector<int> count(static_cast<std::size_t>(n), 0);
      for (int c : colour) ++count[c];
      if (std::is_sorted(count.begin(), count.end(), std::greater<>())) {
        std::vector<int> parts;
        for (int c : count) {
          if (c) parts.push_back(c);
        }
        ++out[Partition(parts)];
      }
    }
    std::size_t pos = 0;
    while (pos < colour.size() && ++colour[pos] == n) colour[pos++] = 0;
    if (pos == colour.size()) break;
  }
  return out;
}

std::map<Partition, BigInt> monomial_coefficients_from_e(const epolab::ESymExpansion& x) {
  std::map<Partition, BigInt> out;
  for (const auto& lambda : epolab::partitions_of(x.degree())) {
    BigInt total = 0;
    for (const auto& [mu, coeff] : x.terms()) {
      total += coeff * BigInt(zero_one_matrices(mu.parts(), lambda.parts(), 0));
    }
    if (total != 0) out[lambda] = total;
  }
  return out;
}

BigInt evaluate_e(const epolab::ESymExpansion& x, const std::vector<std::int64_t>& values) {
  // e_i of the values by the product (1 + v t).
  std::vector<BigInt> e(values.size() + 1, 0);
  e[0] = 1;
  for (std::int64_t v : values) {
    for (std::size_t i = values.size(); i >= 1; --i) e[i] += e[i - 1] * v;
  }
  BigInt total = 0;
  for (const auto& [lambda, coeff] : x.terms()) {
    BigInt term = coeff;
    for (int part : lambda.parts()) term *= part < static_cast<int>(e.size()) ? e[part] : BigInt(0);
    total += term;
  }
  return total;
}

std::uint64_t count_colourings(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k == 0) return n == 0 ? 1 : 0;
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  std::uint64_t total = 0;
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : g.edges()) {
      if (colour[u] == colour[v]) proper = false;
    }
    total += proper;
    std::size_t pos = 0;
    while (pos < colour.size() && ++colour[pos] == k) colour[pos++] = 0;
    if (pos == colour.size()) break;
  }
  return total;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace oracle
