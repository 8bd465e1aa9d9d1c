#include "epolab/sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "epolab/parallel.hpp"

namespace epolab {

namespace {

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return (num + den - 1) / den; }

struct Row {
  int b;
  int c;
};

std::vector<Row> c40_rows(int c_lo, int c_hi) {
  std::vector<Row> rows;
  for (int c = c_lo; c <= c_hi; ++c) {
    for (int b = 2 * c; 2 * b <= c * c; ++b) rows.push_back({b, c});
  }
  return rows;
}

class Stopwatch {
public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

bool interval_sum_exists(std::int64_t n, std::int64_t lo, std::int64_t hi) {
  if (n < 1 || lo < 1 || lo > hi) return false;
  if (lo < hi && n >= ceil_div(lo - 1, hi - lo) * lo) return true;
  // Sums of exactly t parts fill [t*lo, t*hi]; the smallest candidate t is ceil(n/hi).
  const std::int64_t t = ceil_div(n, hi);
  return t * lo <= n;
}

std::optional<CellHit> find_cell_q(int b, int c, int n) {
  for (int q = b / c; q >= 1; --q) {
    const std::int64_t x = ceil_div(b + 1, q);
    const std::int64_t y = (static_cast<std::int64_t>(b) + c) / q;
    if (x > y) continue;
    if (interval_sum_exists(n, x, y)) return CellHit{q, static_cast<int>(x), static_cast<int>(y)};
  }
  return std::nullopt;
}

std::optional<MissingTypeCertificate> sweep_cell(int b, int c, int n) {
  if (c < 2 || b < c || n < 2 * b + c + 1) {
    throw std::invalid_argument("sweep_cell: need c >= 2, b >= c and n >= 2b+c+1");
  }
  const CutProfile profile(n - b - c - 1, b, {c});
  return q_certificate_search(profile, b / c);
}

SweepReport sweep_c40(int c_lo, int c_hi, int jobs, const CellSink& sink) {
  if (c_lo < 2 || c_lo > c_hi) throw std::invalid_argument("sweep_c40: need 2 <= c_lo <= c_hi");
  const Stopwatch clock;
  const auto rows = c40_rows(c_lo, c_hi);
  SweepReport report;
  report.rows = rows.size();

  struct RowResult {
    std::uint64_t cells = 0;
    std::vector<SweepCell> failures;
    std::vector<std::pair<int, CellHit>> hits;  // filled only when a sink wants them
  };
  constexpr std::size_t kBatch = 256;
  for (std::size_t start = 0; start < rows.size(); start += kBatch) {
    const std::size_t count = std::min(kBatch, rows.size() - start);
    std::vector<RowResult> results(count);
    parallel_for(count, jobs, [&](std::size_t i, std::size_t) {
      const auto [b, c] = rows[start + i];
      RowResult& out = results[i];
      const std::int64_t n_lo = 2 * static_cast<std::int64_t>(b) + c + 1;
      const std::int64_t n_hi = ceil_div(b, c - 1) * (b + 1);
      for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        ++out.cells;
        const auto hit = find_cell_q(b, c, static_cast<int>(n));
        if (!hit) {
          out.failures.push_back({b, c, static_cast<int>(n)});
        } else if (sink) {
          out.hits.emplace_back(static_cast<int>(n), *hit);
        }
      }
    });
    for (std::size_t i = 0; i < count; ++i) {
      report.cells += results[i].cells;
      report.failures.insert(report.failures.end(), results[i].failures.begin(), results[i].failures.end());
      if (sink) {
        const auto [b, c] = rows[start + i];
        for (const auto& [n, hit] : results[i].hits) sink(SweepCell{b, c, n}, hit);
      }
    }
  }
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

std::optional<int> find_strategy_q(std::int64_t b, std::int64_t c) {
  for (std::int64_t q = b / c; q >= 1; --q) {
    if (strategy_check(b, c, q)) return static_cast<int>(q);
  }
  return std::nullopt;
}

SweepReport sweep_c500(int c_lo, int c_hi, SweepMode mode, int jobs) {
  if (c_lo < 41 || c_lo > c_hi || c_hi > 500) {
    throw std::invalid_argument("sweep_c500: need 41 <= c_lo <= c_hi <= 500");
  }
  const Stopwatch clock;
  const int c_step = mode == SweepMode::Sampled ? 3 : 1;
  const int b_step = mode == SweepMode::Sampled ? 7 : 1;
  std::vector<int> cs;
  for (int c = c_lo; c <= c_hi; c += c_step) cs.push_back(c);

  struct ColumnResult {
    std::uint64_t rows = 0;
    std::vector<SweepCell> failures;
  };
  std::vector<ColumnResult> results(cs.size());
  parallel_for(cs.size(), jobs, [&](std::size_t i, std::size_t) {
    const std::int64_t c = cs[i];
    for (std::int64_t b = 2 * c; 2 * b <= c * c; b += b_step) {
      ++results[i].rows;
      if (!find_strategy_q(b, c)) {
        results[i].failures.push_back({static_cast<int>(b), static_cast<int>(c), 0});
      }
    }
  });
  SweepReport report;
  for (const auto& r : results) {
    report.rows += r.rows;
    report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
  }
  report.cells = report.rows;
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

}  // namespace epolab
