#pragma once

// The mod-8 lesson method. Classifies sqrt(n) with only ancient primitives:
// strip square factors of 4, test parity, take the remainder mod 8, and test
// for a perfect square. Sound verdicts only; the residue-1 non-square case is
// reported as inconclusive rather than decided. The "naive" variant is the
// unsound tree that asserts irrationality in that case anyway.

#include <string>
#include <variant>
#include <vector>

#include "theo/arith.hpp"
#include "theo/natural.hpp"

namespace theo {

// n = factor^2 * core with core not divisible by 4. sqrt(n) is rational
// exactly when sqrt(core) is.
struct EvenReduction {
  Natural core;
  Natural factor;

  friend bool operator==(const EvenReduction&, const EvenReduction&) = default;
};

// Throws std::domain_error for n = 0.
EvenReduction reduce_even(const Natural& n);

// --- Verdicts -------------------------------------------------------------

struct OddRemainderNot1 {  // odd core with remainder 3, 5 or 7 mod 8
  Mod8Class remainder;

  friend bool operator==(const OddRemainderNot1&,
                         const OddRemainderNot1&) = default;
};

struct TwiceOddCore {  // core = 2*odd, which is 2 mod 4 and never a square
  friend bool operator==(const TwiceOddCore&, const TwiceOddCore&) = default;
};

struct ReducedTo {  // n = factor^2 * core, core < n, and sqrt(core) is irrational
  Natural core;
  Natural factor;

  friend bool operator==(const ReducedTo&, const ReducedTo&) = default;
};

struct NotASquare {  // the naive tree's ground: true, but no proof of irrationality
  friend bool operator==(const NotASquare&, const NotASquare&) = default;
};

using Reason = std::variant<OddRemainderNot1, TwiceOddCore, ReducedTo, NotASquare>;

struct ProvedRational {
  Natural root;

  friend bool operator==(const ProvedRational&, const ProvedRational&) = default;
};

struct ProvedIrrational {
  Reason reason;

  friend bool operator==(const ProvedIrrational&,
                         const ProvedIrrational&) = default;
};

struct Inconclusive {
  friend bool operator==(const Inconclusive&, const Inconclusive&) = default;
};

using Verdict = std::variant<ProvedRational, ProvedIrrational, Inconclusive>;

enum class VerdictTag { Rational, Irrational, Inconclusive };

VerdictTag tag_of(const Verdict& v);

// Verdict-only classification, same decision tree as theodorus_classify but
// without building a trace. Used by the bulk sweeps.
VerdictTag classify_tag(const Natural& n);

// Human-readable annotation, e.g. "irrational: odd remainder 3 is not 1".
std::string verdict_annotation(const Verdict& v);

// Machine labels for the CSV table: "proved_rational", "odd_remainder_not_1", ...
std::string verdict_label(const Verdict& v);
std::string reason_label(const Verdict& v);  // empty when there is no reason field

// --- Method traces ----------------------------------------------------------

// The primitive operations the method is allowed to use.
enum class StepKind { Subtract, ParityCheck, Mod8Check, SquareTest, Reduce };

std::string to_string(StepKind kind);

// One primitive step. `subject` is the value the primitive examined; it must
// be derivable from the case's own n (seeded {n}, extended by Reduce
// results), which is what makes case independence auditable. `result` holds
// the primitive's output: the reduced value for Reduce, the remainder for
// Mod8Check, 0/1 for ParityCheck, the floor root for SquareTest, and 0 for
// Subtract.
struct PrimitiveStep {
  StepKind kind;
  Natural subject;
  Natural result;

  friend bool operator==(const PrimitiveStep&, const PrimitiveStep&) = default;
};

struct TraceCase {
  Natural n;
  std::vector<PrimitiveStep> steps;
  Verdict verdict;
};

struct MethodTrace {
  std::vector<TraceCase> cases;
};

// Classifies sqrt(n) by the mod-8 method. Decision tree on (core, factor) =
// reduce_even(n):
//   core = 2*odd                      -> irrational (2 mod 4, never a square)
//   core odd, core mod 8 in {3,5,7}   -> irrational (odd squares are 1 mod 8)
//   core odd, 1 mod 8, perfect square -> rational, root = factor * sqrt(core)
//   core odd, 1 mod 8, not a square   -> inconclusive
// When factor > 1 the irrational verdicts carry ReducedTo(core, factor)
// instead of the core-level reason. Throws std::domain_error for n = 0.
TraceCase theodorus_classify(const Natural& n);

struct NaiveClassification {
  Verdict verdict;
  bool asserted_without_proof;
};

// The same tree except the inconclusive branch is asserted irrational. The
// assertion happens to be extensionally true; asserted_without_proof records
// that it was never established.
NaiveClassification naive_boys_tree(const Natural& n);

struct OddWitness {
  Natural p;
  Natural q;

  friend bool operator==(const OddWitness&, const OddWitness&) = default;
};

// Cancels common factors of 2 from the fraction p/q, so the result is never
// "even over even". Throws std::domain_error for q = 0.
OddWitness odd_witness_reduction(const Natural& p, const Natural& q);

}  // namespace theo
