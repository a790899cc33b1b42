#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "homset/types.hpp"

namespace homset {

using BigInt = boost::multiprecision::cpp_int;

// Checks n >= 3, k >= 2, 0 < C <= 0.01, k <= n/(3C); throws
// ConstraintViolation naming the first constraint that fails.
TheoremParams validate_params(int n, double k, double C);

// The guaranteed homogeneous-set size C*k*log2(n)/log2(k).
double target_size(const TheoremParams& p);

// Case1 if k <= 100, else Case2 if k >= sqrt(n), else Case3. Case 1 wins
// where the ranges overlap because its guarantee needs no side conditions.
CaseLabel classify_case(const TheoremParams& p);

// Erdos-Szekeres Ramsey bound: R(ceil(s), ceil(t)) <= binom(ceil(s) +
// ceil(t) - 2, ceil(s) - 1), computed exactly. Requires s, t >= 1.
BigInt es_upper_bound(double s, double t);

// Maximum edge count of an n-vertex graph with no K_r: (1 - 1/(r-1)) n^2/2.
double turan_max_edges(int n, int r);

// Every threshold the Case-3 argument compares against, in one place, so
// the extractor's assertions and the tests read off the same numbers.
struct BoundReport {
  double target = 0.0;           // C*k*log2(n)/log2(k)
  BigInt es_bound;               // binomial bound at s = 10*a_size/k, t = target
  double turan_limit = 0.0;      // edge cap at r = ceil(2*C*k); 0 when r < 2
  double degree_threshold = 0.0;    // (1 - 2/k) * n
  double neighbor_threshold = 0.0;  // (1 - 10/k) * a_size
  double subset_count_cap = 0.0;    // (10a/k) * (e*k/10)^(10a/k)
  double n_fifth = 0.0;
  double n_quarter = 0.0;
  double n_cbrt = 0.0;
  double sqrt_n = 0.0;
  double n_049 = 0.0;
};

// Requires p valid and a_size >= 1. Asserts target <= n whenever
// k <= n/C^2 (always true on valid params); violation is InvariantBreach.
BoundReport case3_thresholds(const TheoremParams& p, int a_size);

}  // namespace homset
