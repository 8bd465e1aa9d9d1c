#pragma once

// Chromatic symmetric functions expanded in the elementary basis.

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "epolab/combinat.hpp"
#include "epolab/graph.hpp"

namespace epolab {

using BigInt = boost::multiprecision::cpp_int;

/// Homogeneous symmetric function of a fixed degree written in the e-basis.
/// Keys iterate in partition stream order; zero coefficients are never stored.
class ESymExpansion {
public:
  using Terms = std::map<Partition, BigInt, StreamOrder>;

  explicit ESymExpansion(int degree) : degree_(degree) {}

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  /// Zero when lambda is absent.
  BigInt coefficient(const Partition& lambda) const;
  /// Adds `value` to the coefficient of lambda, erasing it if it cancels.
  /// Throws std::invalid_argument when |lambda| differs from the degree.
  void add(const Partition& lambda, const BigInt& value);

  friend bool operator==(const ESymExpansion&, const ESymExpansion&) = default;

private:
  int degree_;
  Terms terms_;
};

/// Power sum p_k in the e-basis (Newton's identities); 1 <= k <= 25, memoized.
const ESymExpansion& p_in_e(int k);

ESymExpansion multiply_e(const ESymExpansion& lhs, const ESymExpansion& rhs);

/// Power-sum coefficients of X_G: sum over edge subsets S of (-1)^|S| p_type(S),
/// grouped by the component-size partition of (V, S).
std::map<Partition, std::int64_t, StreamOrder> csf_power_sum(const Graph& g, int jobs = 1);

/// X_G in the e-basis; n <= 20. Throws std::invalid_argument past the guard.
ESymExpansion csf_e(const Graph& g, int jobs = 1);

struct EposVerdict {
  bool positive = true;
  /// Strictly negative terms in partition stream order.
  std::vector<std::pair<Partition, BigInt>> negatives;
};

EposVerdict epos_verdict(const ESymExpansion& x);
EposVerdict is_e_positive(const Graph& g, int jobs = 1);

/// Proper colourings using colours {1..k}, by deletion-contraction.
BigInt chromatic_polynomial(const Graph& g, int k);

/// X evaluated at x_1 = ... = x_k = 1 and all other variables 0.
BigInt specialize_e(const ESymExpansion& x, int k);

BigInt binomial(int n, int k);

}  // namespace epolab
