#include <doctest.h>

#include <random>

#include "epolab/prover.hpp"
#include "epolab/symfunc.hpp"
#include "support/oracles.hpp"

using namespace epolab;

namespace {

Partition part(std::vector<int> v) { return Partition(std::move(v)); }

// Profile at the center of spider(legs) (legs has at least three parts).
CutProfile center_profile(const Partition& legs) {
  std::vector<int> rest(legs.parts().begin() + 2, legs.parts().end());
  return CutProfile(legs[0], legs[1], rest);
}

Partition random_partition(int n, std::mt19937_64& rng) {
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    const int p = std::uniform_int_distribution<int>(1, left)(rng);
    parts.push_back(p);
    left -= p;
  }
  return Partition::from_unsorted(parts);
}

}  // namespace

TEST_CASE("obstruction interval") {
  const auto I = obstruction_interval(CutProfile(6, 4, {1, 1}));
  CHECK(I.lo == 5);
  CHECK(I.hi == 6);
  const auto J = obstruction_interval(CutProfile(2, 2, {2, 2, 2}));
  CHECK(J.lo == 3);
  CHECK(J.hi == 8);
}

TEST_CASE("partial-sum obstruction examples") {
  CHECK(check_partsums_obstruction(part({2, 2, 2}), CutProfile(1, 1, {1, 1, 1})));
  CHECK(check_partsums_obstruction(part({2, 2}), CutProfile(1, 1, {1})));
  CHECK(!check_partsums_obstruction(part({13}), CutProfile(6, 4, {1, 1})));
  // A part not exceeding c_1 can never be certified.
  CHECK(!check_partsums_obstruction(part({2, 1, 1}), CutProfile(1, 1, {1})));
  CHECK_THROWS_AS(check_partsums_obstruction(part({3}), CutProfile(1, 1, {1})), std::invalid_argument);
}

TEST_CASE("partial-sum obstruction agrees with both oracles") {
  for (int n = 4; n <= 11; ++n) {
    for (int b = 1; b <= n - 2; ++b) {
      for (int c = 1; b + c + 1 <= n && c <= b; ++c) {
        const int a = n - 1 - b - c;
        if (a < b) continue;
        const CutProfile profile(a, b, {c});
        for (const auto& lambda : partitions_of(n)) {
          const bool big_parts = lambda.smallest() > c;
          const bool expected = big_parts && !oracle::avoiding_arrangement_exists(lambda, b, c);
          CHECK(check_partsums_obstruction(lambda, profile) == expected);
          if (n <= 9) {
            CHECK(oracle::avoiding_arrangement_exists(lambda, b, c) ==
                  oracle::avoiding_arrangement_exists_brute(lambda, b, c));
          }
        }
      }
    }
  }
}

TEST_CASE("obstruction agrees with the subset oracle on random profiles up to 40") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(5, 40)(rng);
    const int c = std::uniform_int_distribution<int>(1, std::max(1, (n - 1) / 3))(rng);
    const int b = std::uniform_int_distribution<int>(c, (n - 1 - c) / 2)(rng);
    const int a = n - 1 - b - c;
    if (a < b) continue;
    const CutProfile profile(a, b, {c});
    const Partition lambda = random_partition(n, rng);
    const bool expected = lambda.smallest() > c && !oracle::avoiding_arrangement_exists(lambda, b, c);
    CHECK(check_partsums_obstruction(lambda, profile) == expected);
  }
}

TEST_CASE("q intervals") {
  CHECK(q_interval(5, 3, 2) == SumInterval(3, 4));
  CHECK(q_interval(4, 2, 1) == SumInterval(5, 6));
  CHECK(!q_interval(10, 2, 7));
}

TEST_CASE("q certificate search") {
  const auto cert = q_certificate_search(CutProfile(8, 5, {3}), 10);
  if (cert) {
    CHECK(cert->kind == CertificateKind::QInterval);
    CHECK(cert->x >= 4);
    CHECK(certificate_structure_holds(*cert));
    CHECK(check_partsums_obstruction(cert->lambda, cert->profile));
  }
  // Every certificate found on a small grid verifies.
  for (int c = 2; c <= 6; ++c) {
    for (int b = c; b <= 20; ++b) {
      for (int a = b; a <= b + 12; ++a) {
        const CutProfile profile(a, b, {c});
        if (const auto q = q_certificate_search(profile, 50)) {
          CHECK(q->lambda.total() == profile.n());
          CHECK(q->x > c);
          CHECK(q->x <= q->y);
          CHECK(check_partsums_obstruction(q->lambda, profile));
        }
      }
    }
  }
}

TEST_CASE("strategy check") {
  CHECK(!strategy_check(5, 3, 2));
  // b = 20, c = 5, q = 4: [6, 6], so x == y fails.
  CHECK(!strategy_check(20, 5, 4));
  // b = 20, c = 5, q = 3: [7, 8], bound 6*7 = 42 <= 46.
  CHECK(strategy_check(20, 5, 3));
}

TEST_CASE("integer square root") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(999999999999LL) == 999999);
  for (std::int64_t v = 0; v < 5000; ++v) {
    const auto r = isqrt(v);
    CHECK(r * r <= v);
    CHECK((r + 1) * (r + 1) > v);
  }
}

TEST_CASE("closed-form q selection") {
  const auto t4 = analysis_q(125000, 500);
  CHECK(t4.case_number == 4);
  REQUIRE(t4.internals);
  CHECK(t4.internals->q0 == 188);
  const auto t1 = analysis_q(1000, 500);
  CHECK(t1.case_number == 1);
  CHECK(t1.q == 2);
  const auto t3 = analysis_q(60000, 500);
  CHECK(t3.case_number == 3);
  CHECK(t3.q == 112);
  CHECK_THROWS_AS(analysis_q(999, 500), std::invalid_argument);
  CHECK_THROWS_AS(analysis_q(125001, 500), std::invalid_argument);
  CHECK_THROWS_AS(analysis_q(1000, 499), std::invalid_argument);
  for (const auto& t : {t1, t3, t4}) {
    CHECK(t.x >= t.c + 1);
    CHECK(t.x < t.y);
    CHECK(t.bound <= 2 * t.b + t.c + 1);
    CHECK(strategy_check(t.b, t.c, t.q));
  }
}

TEST_CASE("closed-form q selection on a random grid") {
  std::mt19937_64 rng(43);
  int cases[5] = {0, 0, 0, 0, 0};
  for (int trial = 0; trial < 3000; ++trial) {
    const std::int64_t c = std::uniform_int_distribution<std::int64_t>(500, 3000)(rng);
    const std::int64_t b = std::uniform_int_distribution<std::int64_t>(2 * c, c * c / 2)(rng);
    const auto t = analysis_q(b, c);
    ++cases[t.case_number];
    CHECK(t.x >= c + 1);
    CHECK(t.x < t.y);
    CHECK(t.bound <= 2 * b + c + 1);
  }
  CHECK(cases[4] > 0);
}

TEST_CASE("theorem dispatch") {
  CHECK(!theorem_decide(CutProfile(6, 4, {1, 1})));
  CHECK(!theorem_decide(CutProfile(5, 3, {2})));
  CHECK(!theorem_decide(CutProfile(5, 3, {1})));  // c = 1
  CHECK(!theorem_inapplicable_reason(CutProfile(5, 3, {1})).empty());
  CHECK(!theorem_inapplicable_reason(CutProfile(6, 4, {1, 1})).empty());

  const auto cert = theorem_decide(CutProfile(2, 2, {2, 2, 2}));
  REQUIRE(cert);
  CHECK(cert->verified);
  CHECK(cert->lambda.total() == 11);
  CHECK(!has_connected_partition(spider(part({2, 2, 2, 2, 2})), cert->lambda));
}

TEST_CASE("theorem soundness for spider profiles up to 16 vertices") {
  int certified = 0;
  for (int n = 4; n <= 16; ++n) {
    for (const auto& legs : partitions_of(n - 1)) {
      if (legs.length() < 3) continue;
      const auto profile = center_profile(legs);
      if (profile.c() < 2) continue;
      const auto cert = theorem_decide(profile);
      if (!cert) continue;
      ++certified;
      CHECK(cert->verified);
      CHECK(certificate_structure_holds(*cert));
      const Graph s = spider(legs);
      CHECK(!has_connected_partition(s, cert->lambda));
      if (n <= 10) CHECK(!oracle::has_connected_partition(s, cert->lambda));
    }
  }
  CHECK(certified > 100);
}

TEST_CASE("four-legged spiders") {
  const auto big = spider4_classify(part({6, 4, 1, 1}));
  CHECK(!big.by_certificate);
  CHECK(big.external_bound == 7);
  CHECK(big.n == 13);

  const auto twos = spider4_classify(part({2, 2, 2, 2}));
  CHECK(twos.by_certificate);
  REQUIRE(twos.certificate);
  CHECK(!has_connected_partition(spider(part({2, 2, 2, 2})), twos.certificate->lambda));

  const auto claw4 = spider4_classify(part({1, 1, 1, 1}));
  CHECK(claw4.by_certificate);
  REQUIRE(claw4.certificate);
  CHECK(claw4.certificate->lambda == part({3, 2}));

  CHECK_THROWS_AS(spider4_classify(part({3, 2, 1})), std::invalid_argument);

  for (int n = 5; n <= 14; ++n) {
    for (const auto& legs : partitions_of(n - 1)) {
      if (legs.length() != 4) continue;
      const auto verdict = spider4_classify(legs);
      CHECK(!is_e_positive(spider(legs)).positive);
      if (verdict.by_certificate) {
        CHECK(!has_connected_partition(spider(legs), verdict.certificate->lambda));
      } else {
        CHECK(verdict.n >= verdict.external_bound);
      }
    }
  }
}
