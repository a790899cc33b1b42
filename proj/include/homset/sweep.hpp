#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "homset/types.hpp"

namespace homset {

struct SweepRow {
  int n = 0;
  double k = 0.0;
  double C = 0.0;
  CaseLabel case_used = CaseLabel::Trivial;
  WitnessKind witness_kind = WitnessKind::Clique;
  long long witness_size = 0;
  double target = 0.0;
  double ratio = 0.0;  // witness_size / target; >= 1 - 1e-9 when verified
  std::uint64_t seed = 0;
  long long elapsed_ms = 0;
  bool verified = false;  // not a CSV column
};

struct SweepConfig {
  std::vector<int> n_list;
  std::vector<double> k_list;
  double C = 0.01;
  int reps = 1;
  std::uint64_t seed = 0;
  // elapsed_ms is the one nondeterministic column; turning it off (always
  // 0) makes repeated runs byte-identical.
  bool measure_time = true;
};

struct SweepOutcome {
  std::vector<SweepRow> rows;
  long long skipped_cells = 0;  // grid cells whose params fail validation
  bool all_verified = true;
};

// For each (n, k, rep) cell in grid order: build the random graph with
// exactly ceil((1 - 1/k) * n(n-1)/2) edges under a per-cell seed derived
// from config.seed, extract, verify, and record one row. Cells with
// invalid parameters are counted and skipped, not errors.
SweepOutcome run_sweep(const SweepConfig& config);

// Header `n,k,C,case,witness_kind,witness_size,target,ratio,seed,elapsed_ms`,
// one row per extraction, '.' decimal point, no locale formatting.
void write_csv(std::span<const SweepRow> rows, std::ostream& out);

}  // namespace homset
