#include "epolab/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "epolab/parallel.hpp"

namespace epolab {

namespace {

constexpr int kMaxNewtonDegree = 25;
constexpr int kMaxCsfVertices = 20;

std::vector<int> merge_parts(const std::vector<int>& l, const std::vector<int>& r) {
  std::vector<int> out(l.size() + r.size());
  std::merge(l.begin(), l.end(), r.begin(), r.end(), out.begin(), std::greater<>());
  return out;
}

}  // namespace

BigInt ESymExpansion::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void ESymExpansion::add(const Partition& lambda, const BigInt& value) {
  if (lambda.total() != degree_) {
    throw std::invalid_argument("expansion: " + to_string(lambda) + " is not a partition of " +
                                std::to_string(degree_));
  }
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

ESymExpansion multiply_e(const ESymExpansion& lhs, const ESymExpansion& rhs) {
  ESymExpansion out(lhs.degree() + rhs.degree());
  for (const auto& [lp, lc] : lhs.terms()) {
    for (const auto& [rp, rc] : rhs.terms()) {
      out.add(Partition(merge_parts(lp.parts(), rp.parts())), lc * rc);
    }
  }
  return out;
}

const ESymExpansion& p_in_e(int k) {
  if (k < 1 || k > kMaxNewtonDegree) {
    throw std::invalid_argument("p_in_e: degree must lie in [1, 25]");
  }
  static std::vector<ESymExpansion> table;
  static std::once_flag built;
  std::call_once(built, [] {
    table.reserve(kMaxNewtonDegree + 1);
    table.emplace_back(0);
    for (int d = 1; d <= kMaxNewtonDegree; ++d) {
      // p_d = sum_{i<d} (-1)^(i-1) e_i p_{d-i} + (-1)^(d-1) d e_d
      ESymExpansion pd(d);
      for (int i = 1; i < d; ++i) {
        ESymExpansion ei(i);
        ei.add(Partition({i}), (i % 2 == 1) ? 1 : -1);
        const ESymExpansion product = multiply_e(ei, table[d - i]);
        for (const auto& [lambda, coeff] : product.terms()) pd.add(lambda, coeff);
      }
      pd.add(Partition({d}), (d % 2 == 1) ? d : -d);
      table.push_back(std::move(pd));
    }
  });
  return table[k];
}

namespace {

using TypeKey = std::vector<int>;  // component sizes, descending
using TypeCounts = std::map<TypeKey, std::int64_t>;

// Edge-subset expansion; trees skip union-find since every edge subset of a
// tree is a forest whose component sizes fall out of one post-order pass.
TypeCounts edge_subset_counts(const Graph& g, int jobs) {
  const int n = g.vertex_count();
  const int m = static_cast<int>(g.edge_count());
  if (m >= 63) throw std::invalid_argument("csf_e: too many edges for subset expansion");
  const std::uint64_t total = std::uint64_t{1} << m;
  const bool tree = is_tree(g);

  // For trees: BFS order from 0 and the index of each vertex's parent edge.
  std::vector<int> order;
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
  if (tree) {
    std::map<std::pair<int, int>, int> edge_index;
    for (int e = 0; e < m; ++e) edge_index[g.edges()[e]] = e;
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int v = order[i];
      for (int w : g.neighbors(v)) {
        if (w == parent[v]) continue;
        parent[w] = v;
        parent_edge[w] = edge_index[{std::min(v, w), std::max(v, w)}];
        order.push_back(w);
      }
    }
  }

  const std::uint64_t shard_size = std::max<std::uint64_t>(1, total / 256);
  const std::size_t shards = static_cast<std::size_t>((total + shard_size - 1) / shard_size);
  const std::size_t workers = static_cast<std::size_t>(std::max(jobs, 1));
  std::vector<std::unordered_map<std::string, std::int64_t>> partial(workers);

  parallel_for(shards, jobs, [&](std::size_t shard, std::size_t worker) {
    auto& acc = partial[worker];
    std::vector<int> size(static_cast<std::size_t>(n));
    std::vector<int> root(static_cast<std::size_t>(n));
    std::vector<int> hist(static_cast<std::size_t>(n) + 1);
    std::string key;
    const std::uint64_t lo = shard * shard_size;
    const std::uint64_t hi = std::min(total, lo + shard_size);
    for (std::uint64_t subset = lo; subset < hi; ++subset) {
      std::fill(hist.begin(), hist.end(), 0);
      if (tree) {
        std::fill(size.begin(), size.end(), 1);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
          const int v = *it;
          if (parent[v] >= 0 && (subset >> parent_edge[v] & 1)) {
            size[parent[v]] += size[v];
          } else {
            ++hist[size[v]];
          }
        }
      } else {
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int v) {
          while (root[v] != v) v = root[v] = root[root[v]];
          return v;
        };
        for (int e = 0; e < m; ++e) {
          if (subset >> e & 1) {
            const int a = find(g.edges()[e].first);
            const int b = find(g.edges()[e].second);
            if (a != b) root[a] = b;
          }
        }
        std::fill(size.begin(), size.end(), 0);
        for (int v = 0; v < n; ++v) ++size[find(v)];
        for (int v = 0; v < n; ++v)
          if (size[v]) ++hist[size[v]];
      }
      key.clear();
      for (int s = n; s >= 1; --s) key.append(static_cast<std::size_t>(hist[s]), static_cast<char>(s));
      acc[key] += (std::popcount(subset) % 2 == 0) ? 1 : -1;
    }
  });

  TypeCounts merged;
  for (const auto& acc : partial) {
    for (const auto& [key, count] : acc) merged[TypeKey(key.begin(), key.end())] += count;
  }
  return merged;
}

// Vertex-subset expansion: sum over set partitions of V of the product of
// per-block signed counts of connected spanning edge sets.
TypeCounts vertex_subset_counts(const Graph& g) {
  const int n = g.vertex_count();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<char> independent(subsets, 1);
  for (std::size_t u = 1; u < subsets; ++u) {
    const int v = std::countr_zero(u);
    const std::size_t rest = u & (u - 1);
    independent[u] = independent[rest] && !(g.neighbor_mask(v) & rest);
  }
  // connected_sign[U] = sum over edge sets spanning G[U] connectedly of (-1)^|S|,
  // from sum_{B containing min U} connected_sign[B] * [U \ B independent] = [U independent].
  std::vector<std::int64_t> connected_sign(subsets, 0);
  for (std::size_t u = 1; u < subsets; ++u) {
    const std::size_t low = u & (~u + 1);
    const std::size_t others = u & ~low;
    std::int64_t value = independent[u] ? 1 : 0;
    for (std::size_t sub = (others - 1) & others;; sub = (sub - 1) & others) {
      const std::size_t block = low | sub;
      if (block != u && connected_sign[block] != 0 && independent[u & ~block]) {
        value -= connected_sign[block];
      }
      if (sub == 0) break;
    }
    connected_sign[u] = value;
  }

  std::unordered_map<std::size_t, TypeCounts> memo;
  std::function<const TypeCounts&(std::size_t)> expand = [&](std::size_t u) -> const TypeCounts& {
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    TypeCounts out;
    if (u == 0) {
      out[{}] = 1;
    } else {
      const std::size_t low = u & (~u + 1);
      const std::size_t others = u & ~low;
      for (std::size_t sub = others;; sub = (sub - 1) & others) {
        const std::size_t block = low | sub;
        if (const std::int64_t w = connected_sign[block]; w != 0) {
          const TypeKey head{std::popcount(block)};
          for (const auto& [key, count] : expand(u & ~block)) out[merge_parts(head, key)] += w * count;
        }
        if (sub == 0) break;
      }
    }
    return memo.emplace(u, std::move(out)).first->second;
  };
  return expand(subsets - 1);
}

}  // namespace

std::map<Partition, std::int64_t, StreamOrder> csf_power_sum(const Graph& g, int jobs) {
  const int n = g.vertex_count();
  if (n < 1 || n > kMaxCsfVertices) {
    throw std::invalid_argument("csf_e: need 1 <= n <= 20, got n = " + std::to_string(n));
  }
  const int m = static_cast<int>(g.edge_count());
  // 2^m subsets against roughly 3^n block choices.
  const bool by_edges = m <= 24 || static_cast<double>(m) <= 1.585 * n;
  const TypeCounts counts = by_edges ? edge_subset_counts(g, jobs) : vertex_subset_counts(g);
  std::map<Partition, std::int64_t, StreamOrder> out;
  for (const auto& [key, count] : counts) {
    if (count != 0) out.emplace(Partition(key), count);
  }
  return out;
}

ESymExpansion csf_e(const Graph& g, int jobs) {
  const auto power = csf_power_sum(g, jobs);
  ESymExpansion out(g.vertex_count());
  std::map<std::vector<int>, ESymExpansion> products;
  std::function<const ESymExpansion&(const std::vector<int>&)> product =
      [&](const std::vector<int>& parts) -> const ESymExpansion& {
    if (auto it = products.find(parts); it != products.end()) return it->second;
    ESymExpansion value = p_in_e(parts.back());
    if (parts.size() > 1) {
      value = multiply_e(product(std::vector<int>(parts.begin(), parts.end() - 1)), value);
    }
    return products.emplace(parts, std::move(value)).first->second;
  };
  for (const auto& [mu, count] : power) {
    for (const auto& [lambda, coeff] : product(mu.parts()).terms()) out.add(lambda, coeff * count);
  }
  return out;
}

EposVerdict epos_verdict(const ESymExpansion& x) {
  EposVerdict verdict;
  for (const auto& [lambda, coeff] : x.terms()) {
    if (coeff < 0) verdict.negatives.emplace_back(lambda, coeff);
  }
  verdict.positive = verdict.negatives.empty();
  return verdict;
}

EposVerdict is_e_positive(const Graph& g, int jobs) { return epos_verdict(csf_e(g, jobs)); }

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out = 1;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

BigInt specialize_e(const ESymExpansion& x, int k) {
  BigInt total = 0;
  for (const auto& [lambda, coeff] : x.terms()) {
    BigInt term = coeff;
    for (int part : lambda.parts()) term *= binomial(k, part);
    total += term;
  }
  return total;
}

namespace {

struct MaskGraph {
  int n;
  std::vector<VertexMask> adj;

  int edges() const {
    int twice = 0;
    for (auto a : adj) twice += std::popcount(a);
    return twice / 2;
  }
  std::string key() const {
    std::string out(1, static_cast<char>(n));
    out.append(reinterpret_cast<const char*>(adj.data()), adj.size() * sizeof(VertexMask));
    return out;
  }
};

BigInt power(int base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

class ChromaticEvaluator {
public:
  explicit ChromaticEvaluator(int k) : k_(k) {}

  BigInt eval(const MaskGraph& g) {
    const int m = g.edges();
    if (m == 0) return power(k_, g.n);
    if (m == g.n * (g.n - 1) / 2) {
      BigInt out = 1;
      for (int i = 0; i < g.n; ++i) out *= (k_ - i);
      return out;
    }
    const auto key = g.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int comps = component_count(g);
    BigInt value;
    if (m == g.n - comps) {
      value = power(k_, comps) * power(k_ - 1, m);  // forest
    } else {
      // Delete/contract an edge at a maximum-degree vertex.
      int u = 0;
      for (int v = 1; v < g.n; ++v)
        if (std::popcount(g.adj[v]) > std::popcount(g.adj[u])) u = v;
      const int w = std::countr_zero(g.adj[u]);
      MaskGraph deleted = g;
      deleted.adj[u] &= ~(VertexMask{1} << w);
      deleted.adj[w] &= ~(VertexMask{1} << u);
      value = eval(deleted) - eval(contract(deleted, u, w));
    }
    memo_.emplace(key, value);
    return value;
  }

private:
  static int component_count(const MaskGraph& g) {
    VertexMask rest = g.n == 64 ? ~VertexMask{0} : (VertexMask{1} << g.n) - 1;
    int comps = 0;
    while (rest) {
      VertexMask comp = rest & (~rest + 1);
      VertexMask frontier = comp;
      while (frontier) {
        VertexMask grown = 0;
        for (VertexMask f = frontier; f; f &= f - 1) grown |= g.adj[std::countr_zero(f)];
        grown &= rest & ~comp;
        comp |= grown;
        frontier = grown;
      }
      rest &= ~comp;
      ++comps;
    }
    return comps;
  }

  // Merges w into u (edge u-w already removed) and relabels past w.
  static MaskGraph contract(const MaskGraph& g, int u, int w) {
    std::vector<VertexMask> adj = g.adj;
    adj[u] |= adj[w];
    for (int v = 0; v < g.n; ++v) {
      if (adj[v] >> w & 1) adj[v] = (adj[v] & ~(VertexMask{1} << w)) | (VertexMask{1} << u);
    }
    adj[u] &= ~(VertexMask{1} << u);
    MaskGraph out{g.n - 1, {}};
    auto squeeze = [w](VertexMask m) {
      const VertexMask low = m & ((VertexMask{1} << w) - 1);
      return low | ((m >> (w + 1)) << w);
    };
    for (int v = 0; v < g.n; ++v) {
      if (v != w) out.adj.push_back(squeeze(adj[v]));
    }
    return out;
  }

  int k_;
  std::unordered_map<std::string, BigInt> memo_;
};

}  // namespace

BigInt chromatic_polynomial(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("chromatic_polynomial: k must be nonnegative");
  if (g.vertex_count() > Graph::kMaxMaskVertices) {
    throw std::invalid_argument("chromatic_polynomial: more than 64 vertices");
  }
  MaskGraph mg{g.vertex_count(), {}};
  for (int v = 0; v < g.vertex_count(); ++v) mg.adj.push_back(g.neighbor_mask(v));
  return ChromaticEvaluator(k).eval(mg);
}

}  // namespace epolab
