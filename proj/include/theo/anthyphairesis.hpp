#pragma once

// Reciprocal subtraction. On a pair of integers it terminates with their gcd;
// on (sqrt(n), 1) it either terminates (perfect square) or runs forever, in
// which case the eventual periodicity of the exact state sequence is detected
// and the run is reported as prefix + repeating period.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "theo/natural.hpp"

namespace theo {

struct SubtractionStep {
  Natural larger;
  Natural smaller;
  Natural times;  // floor(larger / smaller), always >= 1

  friend bool operator==(const SubtractionStep&,
                         const SubtractionStep&) = default;
};

struct SubtractionRun {
  Natural a;
  Natural b;
  std::vector<SubtractionStep> steps;
  Natural gcd;
};

// Subtract the smaller magnitude from the larger as often as possible,
// exchange, and repeat until one measures the other exactly. Terminates for
// every pair of positive integers; the last measure is gcd(a, b). Throws
// std::domain_error on zero input.
SubtractionRun anthyphairesis_int(const Natural& a, const Natural& b);

// Two positive integers always share the unit as a common measure. Spelled
// out so tests can contrast the integer case with the surd case.
bool commensurable(const Natural& a, const Natural& b);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SurdOutcome { TerminatesAsInteger, Periodic };

struct SurdRun {
  Natural n;
  std::vector<Natural> prefix;  // partial quotients before the period
  std::vector<Natural> period;  // empty iff the run terminated
  SurdOutcome outcome;
  Natural root;  // engaged meaningfully only when terminated
};

// Runs reciprocal subtraction on (sqrt(n), 1) in exact integer arithmetic.
// Perfect squares terminate with the exact root. Otherwise the tail after
// extracting quotient a_i from state x_i = (P_i + sqrt(n)) / Q_i is
//   P_{i+1} = a_i*Q_i - P_i,   Q_{i+1} = (n - P_{i+1}^2) / Q_i   (exact),
// and the first repeated (P, Q) state closes the minimal period. Throws
// BudgetExceeded if no repeat occurs within max_states quotients.
SurdRun anthyphairesis_surd(const Natural& n, std::uint64_t max_states = 10000);

// First `count` partial quotients of the run (prefix, then the period
// repeating). Runs that terminated just yield their finite expansion.
std::vector<Natural> unroll(const SurdRun& run, std::size_t count);

// Folds a partial-quotient list into the convergent p/q.
std::pair<Natural, Natural> fold_convergent(const std::vector<Natural>& quotients);

}  // namespace theo
