#pragma once

// Connected partitions of every type for the spiders S(6m, 6m-2, 1, 1).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epolab/combinat.hpp"
#include "epolab/graph.hpp"

namespace epolab {

struct SixmConstruction {
  /// A rearrangement avoiding both 6m-1 and 6m as partial sums; absent for
  /// the exceptional types, which are realized directly.
  std::optional<Composition> alpha;
  bool exceptional = false;
  /// Which branch produced alpha, e.g. "as-is", "reversed", "one-between".
  std::string branch;
};

/// S(6m, 6m-2, 1, 1) with the standard spider labelling.
Graph sixm_spider(int m);

/// Builds the rearrangement starting from `start` (lambda itself when absent).
/// Throws std::invalid_argument unless lambda |- 12m+1 and m >= 1, and
/// std::logic_error if no valid rearrangement results.
SixmConstruction sixm_rearrangement(const Partition& lambda, int m,
                                    const std::optional<Composition>& start = std::nullopt);

/// Realizes the construction as a connected partition of sixm_spider(m).
ConnectedPartition sixm_connected_partition(const Partition& lambda, int m,
                                            const SixmConstruction& construction);

struct SixmReport {
  int m = 0;
  std::uint64_t types = 0;
  std::uint64_t passed = 0;
  std::vector<Partition> failures;
  std::map<std::string, std::uint64_t> branch_tally;
  /// Brute-force oracle agreements, when cross-checking was requested.
  std::optional<std::uint64_t> oracle_agreements;
};

/// Runs the construction for every lambda |- 12m+1 (1 <= m <= 3) and validates
/// each resulting connected partition; cross_check compares against the
/// backtracking search.
SixmReport sixm_full_check(int m, bool cross_check = false, int jobs = 1);

}  // namespace epolab
