#include "epolab/prover.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace epolab {

namespace {

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return (num + den - 1) / den; }

bool parts_within(const Partition& lambda, std::int64_t lo, std::int64_t hi) {
  return lambda.smallest() >= lo && lambda.largest() <= hi;
}

}  // namespace

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::ExplicitInterval: return "explicit-interval";
    case CertificateKind::QInterval: return "q-interval";
    case CertificateKind::PartsCMinusOneC: return "parts-c-c1";
    case CertificateKind::SpecialB2cMinus1: return "special-b-2c-1";
  }
  return "unknown";
}

bool certificate_structure_holds(const MissingTypeCertificate& cert) {
  const CutProfile& p = cert.profile;
  const Partition& lambda = cert.lambda;
  if (lambda.total() != p.n() || lambda.smallest() < p.c1() + 1) return false;
  switch (cert.kind) {
    case CertificateKind::ExplicitInterval:
      return parts_within(lambda, p.b() + 1, p.b() + p.c());
    case CertificateKind::QInterval: {
      if (cert.q < 1) return false;
      const auto J = q_interval(p.b(), p.c(), cert.q);
      return J && J->lo == cert.x && J->hi == cert.y && parts_within(lambda, cert.x, cert.y);
    }
    case CertificateKind::PartsCMinusOneC:
      return p.c() >= p.c1() + 2 && p.c() <= p.b() && parts_within(lambda, p.c() - 1, p.c());
    case CertificateKind::SpecialB2cMinus1: {
      if (p.c() != 2 || p.b() != 3) return false;
      const int threes = lambda.multiplicity(3);
      const int twos = lambda.multiplicity(2);
      const bool shape = static_cast<std::size_t>(threes + twos) == lambda.length() &&
                         threes == (lambda.total() % 2 == 0 ? 0 : 1);
      return shape;
    }
  }
  return false;
}

SumInterval obstruction_interval(const CutProfile& profile) {
  return SumInterval(profile.b() + 1, profile.b() + profile.c());
}

namespace {

class AvoidanceSearch {
public:
  AvoidanceSearch(const Partition& lambda, SumInterval interval) : interval_(interval) {
    for (std::size_t i = 0; i < lambda.length();) {
      std::size_t j = i;
      while (j < lambda.length() && lambda[j] == lambda[i]) ++j;
      values_.push_back(lambda[i]);
      counts_.push_back(static_cast<int>(j - i));
      i = j;
    }
    remaining_parts_ = static_cast<int>(lambda.length());
  }

  // Some rearrangement keeps every proper partial sum out of the interval.
  bool avoidable(int prefix) {
    if (remaining_parts_ == 0) return true;
    const std::string key = memo_key();
    if (dead_.contains(key)) return false;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!counts_[i]) continue;
      const int next = prefix + values_[i];
      const bool last = remaining_parts_ == 1;
      if (!last && interval_.contains(next)) continue;
      // Past the interval every later partial sum is larger still.
      if (last || next > interval_.hi) return true;
      --counts_[i];
      --remaining_parts_;
      const bool ok = avoidable(next);
      ++counts_[i];
      ++remaining_parts_;
      if (ok) return true;
    }
    dead_.insert(key);
    return false;
  }

private:
  std::string memo_key() const {
    return std::string(reinterpret_cast<const char*>(counts_.data()), counts_.size() * sizeof(int));
  }

  SumInterval interval_;
  std::vector<int> values_;
  std::vector<int> counts_;
  int remaining_parts_ = 0;
  std::unordered_set<std::string> dead_;
};

}  // namespace

bool check_partsums_obstruction(const Partition& lambda, const CutProfile& profile) {
  if (lambda.total() != profile.n()) {
    throw std::invalid_argument("check_partsums_obstruction: |lambda| = " + std::to_string(lambda.total()) +
                                " but n = " + std::to_string(profile.n()));
  }
  if (lambda.smallest() < profile.c1() + 1) return false;
  return !AvoidanceSearch(lambda, obstruction_interval(profile)).avoidable(0);
}

std::optional<SumInterval> q_interval(std::int64_t b, std::int64_t c, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("q_interval: q must be positive");
  const std::int64_t x = ceil_div(b + 1, q);
  const std::int64_t y = (b + c) / q;
  if (x > y || x < 1 || y > INT_MAX) return std::nullopt;
  return SumInterval(static_cast<int>(x), static_cast<int>(y));
}

std::optional<MissingTypeCertificate> q_certificate_search(const CutProfile& profile, int q_max) {
  const int top = std::min<std::int64_t>(q_max, profile.b() / profile.c1());
  for (int q = top; q >= 1; --q) {
    const auto J = q_interval(profile.b(), profile.c(), q);
    if (!J || J->lo < profile.c1() + 1) continue;
    if (auto lambda = interval_partition(profile.n(), *J)) {
      MissingTypeCertificate cert{profile, std::move(*lambda), CertificateKind::QInterval, q, J->lo, J->hi};
      cert.verified = certificate_structure_holds(cert);
      return cert;
    }
  }
  return std::nullopt;
}

bool strategy_check(std::int64_t b, std::int64_t c, std::int64_t q) {
  if (q < 1) return false;
  const std::int64_t x = ceil_div(b + 1, q);
  const std::int64_t y = (b + c) / q;
  if (x < c + 1 || x >= y) return false;
  return ceil_div(x - 1, y - x) * x <= 2 * b + c + 1;
}

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) throw std::invalid_argument("isqrt: negative argument");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

QSelectionTrace analysis_q(std::int64_t b, std::int64_t c) {
  if (c < 500 || 4 * c > 2 * b || 2 * b > c * c) {
    throw std::invalid_argument("analysis_q: need c >= 500 and 2c <= b <= c^2/2");
  }
  QSelectionTrace trace;
  trace.b = b;
  trace.c = c;
  const std::int64_t c2 = c * c;
  if (20 * b <= c2) {
    trace.case_number = 1;
    trace.q = b / c;
  } else if (42 * b <= 10 * c2) {
    trace.case_number = 2;
    trace.q = b / c;
  } else if (34 * b <= 10 * c2) {
    // floor(0.46 sqrt(b)) = largest q with 10000 q^2 <= 2116 b
    trace.case_number = 3;
    trace.q = isqrt(2116 * b / 10000);
    while (10000 * trace.q * trace.q > 2116 * b) --trace.q;
    while (10000 * (trace.q + 1) * (trace.q + 1) <= 2116 * b) ++trace.q;
  } else {
    // q0 = floor(sqrt(b / 3.5)) = largest q0 with 7 q0^2 <= 2b
    trace.case_number = 4;
    QSelectionInternals in;
    in.q0 = isqrt(2 * b / 7);
    in.c0 = (b + 1) / in.q0;
    in.r0 = (b + 1) % in.q0;
    in.r1 = in.c0 - 3 * in.q0;
    in.r = in.r0 + in.r1 + 3;
    trace.q = (100 * in.r0 >= 38 * in.q0) ? in.q0 : in.q0 - 1;
    trace.internals = in;
  }
  trace.x = ceil_div(b + 1, trace.q);
  trace.y = (b + c) / trace.q;
  const std::int64_t min_gap = trace.case_number == 4 ? 2 : 1;
  if (!strategy_check(b, c, trace.q) || trace.y - trace.x < min_gap) {
    throw std::logic_error("analysis_q: selected q = " + std::to_string(trace.q) + " fails for b = " +
                           std::to_string(b) + ", c = " + std::to_string(c));
  }
  trace.bound = ceil_div(trace.x - 1, trace.y - trace.x) * trace.x;
  return trace;
}

namespace {

std::optional<MissingTypeCertificate> interval_certificate(const CutProfile& profile, CertificateKind kind,
                                                           int q, int part) {
  const auto J = q_interval(profile.b(), profile.c(), q);
  if (!J) return std::nullopt;
  auto lambda = interval_partition(profile.n(), *J);
  if (!lambda) return std::nullopt;
  return MissingTypeCertificate{profile, std::move(*lambda), kind, q, J->lo, J->hi, part};
}

std::optional<MissingTypeCertificate> dispatch(const CutProfile& p) {
  const std::int64_t b = p.b();
  const std::int64_t c = p.c();
  const int n = p.n();
  if (c < 2) return std::nullopt;
  if (b <= 2 * c - 2) {
    return interval_certificate(p, CertificateKind::ExplicitInterval, 1, 1);
  }
  if (c >= p.c1() + 1 && b == 2 * c - 1) {
    if (c == 2) {
      std::vector<int> parts(static_cast<std::size_t>(n / 2), 2);
      if (n % 2 == 1) parts.front() = 3;
      return MissingTypeCertificate{p, Partition(std::move(parts)), CertificateKind::SpecialB2cMinus1, 0, 0, 0, 2};
    }
    return interval_certificate(p, CertificateKind::QInterval, 2, 2);
  }
  if (2 * c <= b && 2 * b <= c * c) {
    if (c >= 500) {
      const auto trace = analysis_q(b, c);
      return interval_certificate(p, CertificateKind::QInterval, static_cast<int>(trace.q), 3);
    }
    auto cert = q_certificate_search(p, INT_MAX);
    if (cert) cert->theorem_part = 3;
    return cert;
  }
  if (c >= p.c1() + 2 && 2 * b >= c * c) {
    const auto coins = two_coin_representation(n, static_cast<int>(c));
    if (!coins) return std::nullopt;
    std::vector<int> parts(static_cast<std::size_t>(coins->first), static_cast<int>(c));
    parts.insert(parts.end(), static_cast<std::size_t>(coins->second), static_cast<int>(c - 1));
    return MissingTypeCertificate{p, Partition(std::move(parts)), CertificateKind::PartsCMinusOneC, 0, 0, 0, 4};
  }
  return std::nullopt;
}

}  // namespace

std::optional<MissingTypeCertificate> theorem_decide(const CutProfile& profile) {
  auto cert = dispatch(profile);
  if (!cert) return std::nullopt;
  if (!certificate_structure_holds(*cert) || !check_partsums_obstruction(cert->lambda, profile)) {
    throw std::logic_error("theorem_decide: certificate " + to_string(cert->lambda) + " for " +
                           to_string(profile) + " does not verify");
  }
  cert->verified = true;
  return cert;
}

std::string theorem_inapplicable_reason(const CutProfile& profile) {
  const std::int64_t b = profile.b();
  const std::int64_t c = profile.c();
  if (c < 2) return "c = " + std::to_string(c) + " < 2";
  std::string out;
  auto add = [&out](const std::string& s) {
    if (!out.empty()) out += "; ";
    out += s;
  };
  add("part 1: b = " + std::to_string(b) + " > 2c-2 = " + std::to_string(2 * c - 2));
  if (c < profile.c1() + 1) {
    add("part 2: c = " + std::to_string(c) + " < c1+1 = " + std::to_string(profile.c1() + 1));
  } else {
    add("part 2: b != 2c-1 = " + std::to_string(2 * c - 1));
  }
  if (2 * c > b) {
    add("part 3: b < 2c = " + std::to_string(2 * c));
  } else {
    add("part 3: 2b = " + std::to_string(2 * b) + " > c^2 = " + std::to_string(c * c));
  }
  if (c < profile.c1() + 2) {
    add("part 4: c = " + std::to_string(c) + " < c1+2 = " + std::to_string(profile.c1() + 2));
  } else {
    add("part 4: 2b = " + std::to_string(2 * b) + " < c^2 = " + std::to_string(c * c));
  }
  return out;
}

Spider4Verdict spider4_classify(const Partition& legs) {
  if (legs.length() != 4) throw std::invalid_argument("spider4_classify: need exactly four legs");
  CutProfile profile(legs[0], legs[1], {legs[2], legs[3]});
  Spider4Verdict verdict{legs, profile, false, std::nullopt, 0, 0, {}};
  verdict.n = profile.n();
  const std::int64_t b = profile.b();
  const std::int64_t c = profile.c();
  if (2 * b <= c * c) {
    verdict.certificate = theorem_decide(profile);
    if (!verdict.certificate) {
      throw std::logic_error("spider4_classify: no certificate for " + to_string(profile));
    }
    verdict.by_certificate = true;
    verdict.note = "missing connected partition of type " + to_string(verdict.certificate->lambda) +
                   ", hence not e-positive";
  } else {
    verdict.external_bound = static_cast<int>(c * c + c + 1);
    verdict.note = "not e-positive by external result [Zheng, Cor 4.6]: n = " + std::to_string(verdict.n) +
                   " >= c^2+c+1 = " + std::to_string(verdict.external_bound);
  }
  return verdict;
}

}  // namespace epolab
