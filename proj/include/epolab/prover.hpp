#pragma once

// Missing-type certificates for graphs with a cut vertex of profile
// (a, b, c_1, ..., c_k): every rearrangement of a certified type hits the
// interval [b+1, b+c], so no connected partition of that type exists.

#include <cstdint>
#include <optional>
#include <string>

#include "epolab/combinat.hpp"
#include "epolab/graph.hpp"

namespace epolab {

enum class CertificateKind {
  ExplicitInterval,  // all parts in I = [b+1, b+c]
  QInterval,         // all parts in [ceil((b+1)/q), floor((b+c)/q)]
  PartsCMinusOneC,   // all parts equal to c-1 or c
  SpecialB2cMinus1,  // c = 2, b = 3: (2,...,2) or (3,2,...,2)
};

std::string to_string(CertificateKind kind);

struct MissingTypeCertificate {
  CutProfile profile;
  Partition lambda;
  CertificateKind kind;
  int q = 0;  // meaningful for QInterval (and 1 for ExplicitInterval)
  int x = 0;
  int y = 0;
  /// Which case of the dispatch produced it (1-4), or 0 for a bare q search.
  int theorem_part = 0;
  bool verified = false;
};

/// Checks the certificate's own structural claims (type size, part bounds and
/// the kind-specific interval), independently of any rearrangement search.
bool certificate_structure_holds(const MissingTypeCertificate& cert);

SumInterval obstruction_interval(const CutProfile& profile);

/// True iff every part of lambda exceeds c_1 and every rearrangement of lambda
/// has a proper partial sum in [b+1, b+c]. Rearrangements are streamed
/// depth-first; a prefix is abandoned as soon as a partial sum lands in the
/// interval, and exhausted remainders are memoized.
/// Throws std::invalid_argument when |lambda| != profile.n().
bool check_partsums_obstruction(const Partition& lambda, const CutProfile& profile);

/// [ceil((b+1)/q), floor((b+c)/q)], or absent when empty.
std::optional<SumInterval> q_interval(std::int64_t b, std::int64_t c, std::int64_t q);

/// Scans q downward from min(q_max, floor(b/c_1)), the largest q with x >= c_1+1, and returns the first
/// q-interval certificate whose interval can sum to n.
std::optional<MissingTypeCertificate> q_certificate_search(const CutProfile& profile, int q_max);

/// x >= c+1, x < y, and ceil((x-1)/(y-x)) * x <= 2b + c + 1.
bool strategy_check(std::int64_t b, std::int64_t c, std::int64_t q);

struct QSelectionInternals {
  std::int64_t q0 = 0;
  std::int64_t c0 = 0;
  std::int64_t r0 = 0;
  std::int64_t r1 = 0;
  std::int64_t r = 0;
};

struct QSelectionTrace {
  std::int64_t b = 0;
  std::int64_t c = 0;
  int case_number = 0;  // 1..4
  std::int64_t q = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t bound = 0;  // ceil((x-1)/(y-x)) * x
  std::optional<QSelectionInternals> internals;  // case 4 only
};

/// Closed-form choice of q for c >= 500 and 2c <= b <= c^2/2, with every
/// real threshold compared in exact integer arithmetic. Throws
/// std::invalid_argument on precondition failure and std::logic_error if the
/// chosen q fails verification.
QSelectionTrace analysis_q(std::int64_t b, std::int64_t c);

/// Largest r >= 0 with r*r <= v.
std::int64_t isqrt(std::int64_t v);

/// Applies the four sufficient conditions in order (requires c >= 2); every
/// returned certificate has been re-checked by check_partsums_obstruction.
std::optional<MissingTypeCertificate> theorem_decide(const CutProfile& profile);

/// Human-readable list of the failed hypotheses when theorem_decide is absent.
std::string theorem_inapplicable_reason(const CutProfile& profile);

struct Spider4Verdict {
  Partition legs;
  CutProfile profile;
  bool by_certificate = false;
  std::optional<MissingTypeCertificate> certificate;
  /// n and c^2 + c + 1 when the external large-b result is cited.
  int n = 0;
  int external_bound = 0;
  std::string note;
};

/// Non-e-positivity reason for a spider with exactly four legs. Throws
/// std::invalid_argument for any other leg count.
Spider4Verdict spider4_classify(const Partition& legs);

}  // namespace epolab
