#include "epolab/sixm.hpp"

#include <algorithm>
#include <stdexcept>

#include "epolab/parallel.hpp"

namespace epolab {

namespace {

using Parts = std::vector<int>;

bool hits(const Parts& parts, int target) {
  int running = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    running += parts[i];
    if (running == target) return true;
  }
  return false;
}

Parts reversed(const Parts& parts) { return Parts(parts.rbegin(), parts.rend()); }

Parts concat(std::initializer_list<Parts> pieces) {
  Parts out;
  for (const auto& p : pieces) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Splits parts as (left, pivot, right) where left sums to `prefix`.
struct Split {
  Parts left;
  int pivot;
  Parts right;
};

Split split_at(const Parts& parts, int prefix) {
  int running = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (running == prefix) {
      return {Parts(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i)), parts[i],
              Parts(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1, parts.end())};
    }
    running += parts[i];
  }
  throw std::logic_error("sixm: no partial sum equal to " + std::to_string(prefix));
}

// Removes the first element satisfying pred, returning it.
template <typename Pred>
std::optional<int> take_first(Parts& parts, Pred pred) {
  auto it = std::find_if(parts.begin(), parts.end(), pred);
  if (it == parts.end()) return std::nullopt;
  const int value = *it;
  parts.erase(it);
  return value;
}

bool exceptional_type(const Partition& lambda) {
  const int ones = lambda.multiplicity(1);
  if (ones >= 2) return true;
  return ones == 1 && lambda.multiplicity(2) + 1 == static_cast<int>(lambda.length());
}

class SixmBuilder {
public:
  explicit SixmBuilder(int m) : m_(m) {}

  bool avoids(const Parts& parts) const { return !hits(parts, 6 * m_ - 1) && !hits(parts, 6 * m_); }

  // 6m and 6m+1 are both partial sums: a lone 1 sits between halves of 6m.
  std::pair<Parts, std::string> one_between(Parts beta) const {
    Split s = split_at(beta, 6 * m_);
    auto big = [](int v) { return v >= 3; };
    if (std::none_of(s.left.begin(), s.left.end(), big)) {
      s = split_at(reversed(beta), 6 * m_);
    }
    const auto x = take_first(s.left, big);
    if (!x) throw std::logic_error("sixm: no part >= 3 beside the lone 1");
    return {concat({s.left, {1, *x}, s.right}), "one-between"};
  }

  // 6m-1 and 6m+1 are partial sums, 6m is not: a 2 sits in between.
  std::pair<Parts, std::string> two_between(const Parts& beta, const std::string& tag) const {
    Split s = split_at(beta, 6 * m_ - 1);
    auto big = [](int v) { return v >= 3; };
    if (auto x = take_first(s.left, big)) {
      return {concat({s.left, {2, *x}, s.right}), tag + "/large-left"};
    }
    // Left half is one 1 and 3m-1 twos; the large part lives on the right.
    const auto x = take_first(s.right, big);
    if (!x) throw std::logic_error("sixm: no part >= 3 in either half");
    return {concat({Parts(static_cast<std::size_t>(3 * m_ - 1), 2), {*x, 1, 2}, s.right}),
            tag + "/twos-left"};
  }

  // 6m-1 and 6m+2 are partial sums, 6m and 6m+1 are not: a 3 sits in between.
  std::pair<Parts, std::string> three_between(const Parts& beta) const {
    auto attempt = [&](const Parts& b) -> std::optional<std::pair<Parts, std::string>> {
      Split s = split_at(b, 6 * m_ - 1);
      if (take_first(s.left, [](int v) { return v == 1; })) {
        return std::pair{concat({s.left, {3, 1}, s.right}), std::string("three-between/one")};
      }
      if (auto y = take_first(s.left, [](int v) { return v >= 4; })) {
        return std::pair{concat({s.left, {3, *y}, s.right}), std::string("three-between/large")};
      }
      return std::nullopt;
    };
    if (auto r = attempt(beta)) return *r;
    if (auto r = attempt(reversed(beta))) return {r->first, r->second + "-reversed"};
    // Both halves hold only 2s and 3s.
    Split s = split_at(beta, 6 * m_ - 1);
    const auto three = take_first(s.left, [](int v) { return v == 3; });
    const auto two = take_first(s.right, [](int v) { return v == 2; });
    if (!three || !two) throw std::logic_error("sixm: halves lack the 3 and 2 to exchange");
    return {concat({s.left, {2, 3, 3}, s.right}), "three-between/exchange"};
  }

  std::pair<Parts, std::string> build(const Parts& beta) const {
    if (avoids(beta)) return {beta, "as-is"};
    const Parts rev = reversed(beta);
    if (avoids(rev)) return {rev, "reversed"};
    const int six = 6 * m_;
    const bool fwd6 = hits(beta, six);
    const bool rev6 = hits(rev, six);
    if (fwd6 && rev6) return one_between(beta);
    if (!fwd6 && rev6) return two_between(beta, "two-between");
    if (fwd6 && !rev6) return two_between(rev, "two-between-reversed");
    return three_between(beta);
  }

private:
  int m_;
};

}  // namespace

Graph sixm_spider(int m) {
  if (m < 1) throw std::invalid_argument("sixm_spider: m must be positive");
  return spider(Partition({6 * m, 6 * m - 2, 1, 1}));
}

SixmConstruction sixm_rearrangement(const Partition& lambda, int m, const std::optional<Composition>& start) {
  if (m < 1 || lambda.total() != 12 * m + 1) {
    throw std::invalid_argument("sixm_rearrangement: need m >= 1 and lambda |- 12m+1");
  }
  if (start && !is_rearrangement_of(*start, lambda)) {
    throw std::invalid_argument("sixm_rearrangement: start is not a rearrangement of lambda");
  }
  SixmConstruction out;
  if (exceptional_type(lambda)) {
    out.exceptional = true;
    out.branch = lambda.multiplicity(1) >= 2 ? "exceptional/two-ones" : "exceptional/twos-and-one";
    return out;
  }
  const SixmBuilder builder(m);
  auto [parts, branch] = builder.build(start ? start->parts() : lambda.parts());
  Composition alpha(std::move(parts));
  if (!is_rearrangement_of(alpha, lambda) || !builder.avoids(alpha.parts())) {
    throw std::logic_error("sixm_rearrangement: branch " + branch + " produced " + to_string(alpha) +
                           " for " + to_string(lambda));
  }
  out.alpha = std::move(alpha);
  out.branch = std::move(branch);
  return out;
}

ConnectedPartition sixm_connected_partition(const Partition& lambda, int m, const SixmConstruction& construction) {
  // Labels: long leg v_j = j (leaf v_1), short leg u_j = 6m + j, leaves 12m-1, 12m.
  auto v_at = [](int j) { return j; };
  auto u_at = [m](int j) { return 6 * m + j; };
  const int leaf_a = 12 * m - 1;
  const int leaf_b = 12 * m;
  ConnectedPartition cp;
  auto cut_path = [&cp](const std::vector<int>& path, const Parts& sizes) {
    std::size_t pos = 0;
    for (int s : sizes) {
      cp.blocks.emplace_back(path.begin() + static_cast<std::ptrdiff_t>(pos),
                             path.begin() + static_cast<std::ptrdiff_t>(pos + s));
      pos += static_cast<std::size_t>(s);
    }
  };

  if (construction.exceptional) {
    cp.blocks.push_back({leaf_a});
    if (lambda.multiplicity(1) >= 2) {
      cp.blocks.push_back({leaf_b});
      std::vector<int> path;
      for (int j = 1; j <= 6 * m; ++j) path.push_back(v_at(j));
      path.push_back(0);
      for (int j = 6 * m - 2; j >= 1; --j) path.push_back(u_at(j));
      Parts rest = lambda.parts();
      rest.resize(rest.size() - 2);  // drop two trailing 1s
      cut_path(path, rest);
    } else {
      cp.blocks.push_back({0, leaf_b});
      for (int j = 1; j <= 6 * m; j += 2) cp.blocks.push_back({v_at(j), v_at(j + 1)});
      for (int j = 1; j <= 6 * m - 2; j += 2) cp.blocks.push_back({u_at(j), u_at(j + 1)});
    }
  } else {
    const Parts& alpha = construction.alpha.value().parts();
    // Longest prefix fitting on the short leg; the next part must swallow the middle.
    std::size_t i = 0;
    int prefix = 0;
    while (i < alpha.size() && prefix + alpha[i] <= 6 * m - 2) prefix += alpha[i++];
    std::vector<int> u_path;
    for (int j = 1; j <= prefix; ++j) u_path.push_back(u_at(j));
    cut_path(u_path, Parts(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(i)));

    const Parts tail(alpha.begin() + static_cast<std::ptrdiff_t>(i) + 1, alpha.end());
    int suffix = 0;
    for (int s : tail) suffix += s;
    std::vector<int> v_path;
    for (int j = 1; j <= suffix; ++j) v_path.push_back(v_at(j));
    cut_path(v_path, tail);

    std::vector<int> middle{0, leaf_a, leaf_b};
    for (int j = prefix + 1; j <= 6 * m - 2; ++j) middle.push_back(u_at(j));
    for (int j = suffix + 1; j <= 6 * m; ++j) middle.push_back(v_at(j));
    cp.blocks.push_back(std::move(middle));
  }
  for (auto& block : cp.blocks) std::sort(block.begin(), block.end());
  std::sort(cp.blocks.begin(), cp.blocks.end(), [](const auto& l, const auto& r) {
    if (l.size() != r.size()) return l.size() > r.size();
    return l.front() < r.front();
  });
  return cp;
}

SixmReport sixm_full_check(int m, bool cross_check, int jobs) {
  if (m < 1 || m > 3) throw std::invalid_argument("sixm_full_check: need 1 <= m <= 3");
  const Graph g = sixm_spider(m);
  const auto types = partitions_of(12 * m + 1);

  struct Outcome {
    bool ok = false;
    std::string branch;
    bool oracle_agrees = false;
  };
  std::vector<Outcome> outcomes(types.size());
  parallel_for(types.size(), jobs, [&](std::size_t i, std::size_t) {
    Outcome& o = outcomes[i];
    try {
      const auto construction = sixm_rearrangement(types[i], m);
      const auto cp = sixm_connected_partition(types[i], m, construction);
      o.ok = validate_connected_partition(g, cp, types[i]).empty();
      o.branch = construction.branch;
    } catch (const std::logic_error&) {
      o.ok = false;
      o.branch = "error";
    }
    if (cross_check) o.oracle_agrees = has_connected_partition(g, types[i]).has_value() == o.ok;
  });

  SixmReport report;
  report.m = m;
  report.types = types.size();
  if (cross_check) report.oracle_agreements = 0;
  for (std::size_t i = 0; i < types.size(); ++i) {
    ++report.branch_tally[outcomes[i].branch];
    if (outcomes[i].ok) {
      ++report.passed;
    } else {
      report.failures.push_back(types[i]);
    }
    if (cross_check && outcomes[i].oracle_agrees) ++*report.oracle_agreements;
  }
  return report;
}

}  // namespace epolab
