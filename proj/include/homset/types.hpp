#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homset/errors.hpp"

namespace homset {

// Size comparisons against the real-valued target use this slack; witness
// sizes are integers while targets are irrational in general.
inline constexpr double kSizeTol = 1e-9;

// Balance comparisons against an irrational fraction use this slack; exact
// rational comparison is used whenever eps is given as p/q.
inline constexpr double kBalanceTol = 1e-12;

enum class WitnessKind { Clique, IndependentSet };

enum class CaseLabel { Case1, Case2, Case3, Trivial };

inline const char* to_string(WitnessKind k) {
  return k == WitnessKind::Clique ? "clique" : "independent_set";
}

inline const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::Case1: return "Case1";
    case CaseLabel::Case2: return "Case2";
    case CaseLabel::Case3: return "Case3";
    default: return "Trivial";
  }
}

// The validated triple (n, k, C). Construct through validate_params so the
// constraints n >= 3, k >= 2, 0 < C <= 0.01, k <= n/(3C) are known to hold.
struct TheoremParams {
  int n = 0;
  double k = 0.0;
  double C = 0.0;
};

// A certified clique or independent set, tagged with the case that found it.
// Vertices are sorted, distinct, 0-indexed.
struct HomogeneousWitness {
  WitnessKind kind = WitnessKind::Clique;
  std::vector<int> vertices;
  CaseLabel case_used = CaseLabel::Trivial;

  long long size() const { return (long long)vertices.size(); }
};

// Exact fraction p/q for balance thresholds that must not round.
struct Rational {
  long long num = 0;
  long long den = 1;
};

}  // namespace homset
