#include "epolab/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace epolab {

namespace {

int checked_total(const std::vector<int>& parts, const char* what) {
  if (parts.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty");
  }
  std::int64_t sum = 0;
  for (int p : parts) {
    if (p < 1) {
      throw std::invalid_argument(std::string(what) + ": parts must be positive");
    }
    sum += p;
  }
  if (sum > std::numeric_limits<int>::max()) {
    throw std::invalid_argument(std::string(what) + ": total overflows");
  }
  return static_cast<int>(sum);
}

}  // namespace

Composition::Composition(std::vector<int> parts)
    : parts_(std::move(parts)), total_(checked_total(parts_, "composition")) {}

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts)), total_(checked_total(parts_, "partition")) {
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
    throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

SumInterval::SumInterval(int lo_, int hi_) : lo(lo_), hi(hi_) {
  if (lo < 1 || lo > hi) {
    throw std::invalid_argument("interval: need 1 <= lo <= hi");
  }
}

std::vector<int> partial_sums(const Composition& alpha) {
  std::vector<int> sums;
  sums.reserve(alpha.length());
  int running = 0;
  for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
    running += alpha[i];
    sums.push_back(running);
  }
  return sums;
}

Composition reverse(const Composition& alpha) {
  std::vector<int> parts(alpha.parts().rbegin(), alpha.parts().rend());
  return Composition(std::move(parts));
}

bool is_rearrangement_of(const Composition& alpha, const Partition& lambda) {
  if (alpha.length() != lambda.length()) return false;
  std::vector<int> sorted = alpha.parts();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return sorted == lambda.parts();
}

RearrangementStream::RearrangementStream(const Partition& lambda)
    : current_(lambda.parts().rbegin(), lambda.parts().rend()) {}

std::optional<Composition> RearrangementStream::next() {
  if (done_) return std::nullopt;
  Composition out(current_);
  done_ = !std::next_permutation(current_.begin(), current_.end());
  return out;
}

std::vector<Composition> rearrangements(const Partition& lambda) {
  std::vector<Composition> out;
  RearrangementStream stream(lambda);
  while (auto alpha = stream.next()) out.push_back(std::move(*alpha));
  return out;
}

std::uint64_t rearrangement_count(const Partition& lambda) {
  // Multiply binomials part by part to stay exact without factorials.
  std::uint64_t count = 1;
  int placed = 0;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int r = 1; r <= mult; ++r) {
      count = count * static_cast<std::uint64_t>(placed + r) / static_cast<std::uint64_t>(r);
    }
    placed += mult;
    i = j;
  }
  return count;
}

PartitionStream::PartitionStream(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be positive");
  current_.push_back(n);
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Partition(current_);
  }
  // Rightmost part exceeding 1; everything after it is a 1.
  std::size_t k = current_.size();
  while (k > 0 && current_[k - 1] == 1) --k;
  if (k == 0) {
    done_ = true;
    return std::nullopt;
  }
  --k;
  int remaining = static_cast<int>(current_.size() - k);  // ones plus the unit split off
  const int v = current_[k] - 1;
  current_.resize(k);
  current_.push_back(v);
  while (remaining > v) {
    current_.push_back(v);
    remaining -= v;
  }
  if (remaining > 0) current_.push_back(remaining);
  return Partition(current_);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  PartitionStream stream(n);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * static_cast<std::int64_t>(p[m - g1]);
      if (g2 <= m) acc += sign * static_cast<std::int64_t>(p[m - g2]);
    }
    p[m] = static_cast<std::uint64_t>(acc);
  }
  return p[n];
}

bool interval_representable_dp(int n, const SumInterval& J) {
  if (n < 1) return false;
  const int x = J.lo;
  const int y = J.hi;
  // reach[s % (y+1)] for the last y+1 sums; `window` counts reachable sums
  // in [s-y, s-x].
  std::vector<char> reach(static_cast<std::size_t>(y) + 1, 0);
  reach[0] = 1;
  int window = 0;
  bool last = false;
  for (int s = 1; s <= n; ++s) {
    if (s - x >= 0 && reach[(s - x) % (y + 1)]) ++window;
    if (s - y - 1 >= 0 && reach[(s - y - 1) % (y + 1)]) --window;
    last = window > 0;
    reach[s % (y + 1)] = last ? 1 : 0;
  }
  return last;
}

std::optional<Partition> interval_partition(int n, const SumInterval& J) {
  if (n < 1) return std::nullopt;
  const bool fast = J.lo < J.hi && n >= frobenius_interval_bound(J);
  if (!fast && !interval_representable_dp(n, J)) return std::nullopt;

  // n lies in tJ = [t*lo, t*hi] for the least t = ceil(n / hi).
  const int t = (n + J.hi - 1) / J.hi;
  if (static_cast<std::int64_t>(t) * J.lo > n) {
    throw std::logic_error("interval_partition: reachable sum outside every tJ");
  }
  const int q = n / t;
  const int r = n % t;
  std::vector<int> parts(static_cast<std::size_t>(r), q + 1);
  parts.insert(parts.end(), static_cast<std::size_t>(t - r), q);
  return Partition(std::move(parts));
}

std::int64_t frobenius_interval_bound(const SumInterval& J) {
  if (J.lo == J.hi) {
    throw std::invalid_argument("frobenius_interval_bound: interval has a single value");
  }
  const std::int64_t x = J.lo;
  const std::int64_t gap = J.hi - J.lo;
  const std::int64_t blocks = (x - 1 + gap - 1) / gap;
  return blocks * x;
}

std::optional<std::pair<int, int>> two_coin_representation(int n, int c) {
  if (c < 2 || n < 0) return std::nullopt;
  // c = 1 (mod c-1), so a1 = n (mod c-1) is forced up to multiples of c-1.
  const int a1 = n % (c - 1);
  const std::int64_t used = static_cast<std::int64_t>(a1) * c;
  if (used > n) return std::nullopt;
  const int a2 = static_cast<int>((n - used) / (c - 1));
  return std::pair{a1, a2};
}

std::string to_string(const Partition& lambda) { return to_string(lambda.as_composition()); }

std::string to_string(const Composition& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(alpha[i]);
  }
  out += ')';
  return out;
}

Partition parse_partition(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
  }
  if (!cleaned.empty() && cleaned.front() == '(') {
    if (cleaned.back() != ')') throw std::invalid_argument("partition: unbalanced parenthesis");
    cleaned = cleaned.substr(1, cleaned.size() - 2);
  }
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    const std::size_t comma = std::min(cleaned.find(',', pos), cleaned.size());
    const std::string_view token(cleaned.data() + pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("partition: bad part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace epolab
