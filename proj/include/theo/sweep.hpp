#pragma once

// Bulk range sweeps used by coverage, the cross-checking tests, and the
// benchmark. Each kernel has an OpenMP-parallel entry point and a plain
// serial twin (suffix _serial) that the tests compare it against. Without
// OpenMP the parallel names fall back to the serial code.

#include <cstdint>
#include <optional>

#include "theo/classify.hpp"
#include "theo/natural.hpp"
#include "theo/oracle.hpp"

namespace theo::sweep {

struct VerdictCounts {
  std::uint64_t rational = 0;
  std::uint64_t irrational = 0;
  std::uint64_t inconclusive = 0;

  friend bool operator==(const VerdictCounts&, const VerdictCounts&) = default;
};

// Classifies every n in [1, range_max] by the mod-8 method.
VerdictCounts count_verdicts(std::uint64_t range_max);
VerdictCounts count_verdicts_serial(std::uint64_t range_max);

// For every odd m in [1, max_odd]: m^2 must be 1 mod 8, and with m = 2k+1 the
// square must rebuild as 8*T(k) + 1. Returns the number of odd m violating
// either, so the expected value is 0.
std::uint64_t odd_squares_remainder_one(std::uint64_t max_odd);
std::uint64_t odd_squares_remainder_one_serial(std::uint64_t max_odd);

struct AgreementScan {
  std::uint64_t range_max = 0;
  // conclusive mod-8 verdicts contradicted by the oracle
  std::uint64_t theodorus_oracle_mismatches = 0;
  // inconclusive set differing from {n : core(n) odd, 1 mod 8, not square}
  std::uint64_t characterization_mismatches = 0;
  // naive tree contradicting a conclusive mod-8 verdict
  std::uint64_t naive_theodorus_disagreements = 0;
  // naive tree contradicted by the oracle (its assertion is still true)
  std::uint64_t naive_oracle_mismatches = 0;
  std::uint64_t naive_inconclusive_count = 0;  // naive tree always decides
  std::uint64_t inconclusive_count = 0;
  std::uint64_t first_inconclusive = 0;  // 0 when none in range

  friend bool operator==(const AgreementScan&, const AgreementScan&) = default;
};

// Runs the mod-8 method, the naive tree and the oracle over [1, range_max]
// and counts every kind of disagreement between them.
AgreementScan agreement_scan(std::uint64_t range_max);
AgreementScan agreement_scan_serial(std::uint64_t range_max);

// For every n in [1, n_max]: falsification_search(n, q_bound) must find a
// witness exactly when the oracle says sqrt(n) is rational. Returns the
// number of n where the two disagree.
std::uint64_t falsification_mismatches(std::uint64_t n_max,
                                       std::uint64_t q_bound);
std::uint64_t falsification_mismatches_serial(std::uint64_t n_max,
                                              std::uint64_t q_bound);

struct SurdScanResult {
  // termination of the subtraction on (sqrt(n), 1) vs. n being a square
  std::uint64_t dichotomy_mismatches = 0;
  std::uint64_t budget_failures = 0;
  // periodic runs whose final period quotient is not 2 * floor(sqrt(n))
  std::uint64_t last_quotient_mismatches = 0;

  friend bool operator==(const SurdScanResult&, const SurdScanResult&) = default;
};

SurdScanResult surd_scan(std::uint64_t n_max, std::uint64_t max_states);
SurdScanResult surd_scan_serial(std::uint64_t n_max, std::uint64_t max_states);

// Subtractive gcd over the full grid [1, a_max] x [1, b_max], checked against
// the division-based gcd. Returns the number of cells that disagree.
std::uint64_t gcd_grid_mismatches(std::uint64_t a_max, std::uint64_t b_max);
std::uint64_t gcd_grid_mismatches_serial(std::uint64_t a_max,
                                         std::uint64_t b_max);

// Parallel twin of falsification_search: partitions the q range and keeps the
// smallest witness, so the result is identical to the serial scan.
std::optional<FalsificationWitness> falsification_search_parallel(
    const Natural& n, std::uint64_t bound);

}  // namespace theo::sweep
