#pragma once

// Finite computer checks behind the middle range 2c <= b <= c^2/2.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "epolab/combinat.hpp"
#include "epolab/prover.hpp"

namespace epolab {

/// A witness interval for one (b, c, n) cell: n is a sum of parts from
/// [x, y] = [ceil((b+1)/q), floor((b+c)/q)] with x >= c+1.
struct CellHit {
  int q;
  int x;
  int y;
};

struct SweepCell {
  int b;
  int c;
  int n;  // 0 for (b, c) sweeps
};

struct SweepReport {
  std::uint64_t cells = 0;
  std::uint64_t rows = 0;  // (b, c) pairs visited
  std::vector<SweepCell> failures;
  std::int64_t wall_time_ms = 0;
};

/// n is a sum of parts from J: fast path through the interval Frobenius bound,
/// otherwise membership of n in some tJ = [t*lo, t*hi].
bool interval_sum_exists(std::int64_t n, std::int64_t lo, std::int64_t hi);

/// q scanned downward from floor(b/c), the largest q with x >= c+1.
std::optional<CellHit> find_cell_q(int b, int c, int n);

/// Certificate for the worst-case profile (n-b-c-1, b, (c)) of one cell.
std::optional<MissingTypeCertificate> sweep_cell(int b, int c, int n);

using CellSink = std::function<void(const SweepCell&, const CellHit&)>;

/// Every (b, c, n) with c in [c_lo, c_hi], 2c <= b <= c^2/2 and
/// 2b+c+1 <= n <= ceil(b/(c-1)) (b+1). The sink, when given, sees cells in
/// deterministic order after the parallel phase.
SweepReport sweep_c40(int c_lo = 2, int c_hi = 40, int jobs = 1, const CellSink& sink = {});

enum class SweepMode { Full, Sampled };

/// Every (b, c) with c in [c_lo, c_hi] and 2c <= b <= c^2/2 (sampled: every
/// 3rd c and every 7th b) must admit q with strategy_check(b, c, q).
/// Throws std::invalid_argument unless 41 <= c_lo <= c_hi <= 500.
SweepReport sweep_c500(int c_lo, int c_hi, SweepMode mode, int jobs = 1);

/// First q (downward from floor(b/c)) passing strategy_check.
std::optional<int> find_strategy_q(std::int64_t b, std::int64_t c);

}  // namespace epolab
