#pragma once

// Compositions, partitions, rearrangements and interval representability.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace epolab {

/// Ordered, nonempty sequence of positive integers.
class Composition {
public:
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const noexcept { return total_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& l, const Composition& r) {
    return l.parts_ <=> r.parts_;
  }

private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Weakly decreasing sequence of positive integers.
///
/// Ordering is lexicographic on the parts; among partitions of one integer the
/// *descending* order of this comparison is the stream order used everywhere
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ...
class Partition {
public:
  /// Throws std::invalid_argument unless `parts` is nonempty, positive and
  /// weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts arbitrary positive parts into a partition.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const noexcept { return total_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const { return parts_.front(); }
  int smallest() const { return parts_.back(); }
  int multiplicity(int part) const;

  Composition as_composition() const { return Composition(parts_); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& l, const Partition& r) {
    return l.parts_ <=> r.parts_;
  }

private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Orders partitions of the same integer in stream order (reverse lexicographic).
struct StreamOrder {
  bool operator()(const Partition& l, const Partition& r) const { return r < l; }
};

/// Closed integer interval [lo, hi] with 1 <= lo <= hi.
struct SumInterval {
  int lo = 1;
  int hi = 1;

  SumInterval(int lo_, int hi_);
  bool contains(int v) const noexcept { return lo <= v && v <= hi; }
  int width() const noexcept { return hi - lo; }
  friend bool operator==(const SumInterval&, const SumInterval&) = default;
};

/// Proper partial sums alpha_1, alpha_1+alpha_2, ..., in increasing order.
std::vector<int> partial_sums(const Composition& alpha);

Composition reverse(const Composition& alpha);

bool is_rearrangement_of(const Composition& alpha, const Partition& lambda);

/// Streams the distinct rearrangements of a partition in lexicographic order
/// via multiset next-permutation.
class RearrangementStream {
public:
  explicit RearrangementStream(const Partition& lambda);
  std::optional<Composition> next();

private:
  std::vector<int> current_;
  bool done_ = false;
};

std::vector<Composition> rearrangements(const Partition& lambda);

/// Number of distinct rearrangements, i.e. the multinomial of multiplicities.
std::uint64_t rearrangement_count(const Partition& lambda);

/// Streams every partition of n in reverse lexicographic order, starting at (n).
class PartitionStream {
public:
  explicit PartitionStream(int n);
  std::optional<Partition> next();

private:
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Partition> partitions_of(int n);

/// Exact partition count p(n) by the pentagonal recurrence.
std::uint64_t partition_count(int n);

/// True iff some partition of n has every part in J, decided by a sliding
/// window over reachable sums (O(n) time, O(J.hi) space).
bool interval_representable_dp(int n, const SumInterval& J);

/// A partition of n with all parts in J, built from blocks of t nearly equal
/// parts with the fewest parts possible; absent when none exists.
std::optional<Partition> interval_partition(int n, const SumInterval& J);

/// ceil((x-1)/(y-x)) * x; every n at or above it is a sum of parts from J.
/// Throws std::invalid_argument when J.lo == J.hi.
std::int64_t frobenius_interval_bound(const SumInterval& J);

/// Nonnegative (a1, a2) with n = a1*c + a2*(c-1), minimizing a1.
std::optional<std::pair<int, int>> two_coin_representation(int n, int c);

// Text form "(4,4,3,2)".
std::string to_string(const Partition& lambda);
std::string to_string(const Composition& alpha);

/// Lenient parse of "(4, 4,3,2)" or "4,4,3,2"; parts are sorted into a
/// partition. Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

}  // namespace epolab
