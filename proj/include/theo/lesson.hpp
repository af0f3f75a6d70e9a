#pragma once

// Replays the Theodorus lesson (odd n from 3 upward, stopping at the first
// inconclusive case), computes coverage statistics for the method over a
// whole range, and audits a lesson against six checkable criteria:
//   c1  starts at 3, not 2
//   c2  case by case: every step uses only values derived from its own n
//   c3  the stop is accounted for: first inconclusive case at n = 17
//   c4  only whitelisted ancient primitives appear in the trace
//   c5  the whole trace fits a lesson's step budget
//   c6  the stopping case invites an unproved generalization

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "theo/arith.hpp"
#include "theo/classify.hpp"

namespace theo {

enum class StopReason { FirstInconclusive, RangeExhausted };

struct ExaminedCase {
  Natural n;
  Mod8Class remainder;
  Verdict verdict;
};

struct LessonReport {
  std::vector<ExaminedCase> examined;
  Natural start;
  Natural stop;  // last examined n; 0 when nothing was examined
  StopReason stop_reason;
  Natural total_steps;
};

struct LessonRun {
  LessonReport report;
  MethodTrace trace;
};

struct LessonOptions {
  Natural start = 3;
  Natural limit = 99;
  bool stop_at_first_inconclusive = true;
};

// Classifies the odd integers from start to limit in order. With the default
// stopping rule the run ends at the first inconclusive verdict (n = 17 for
// the default range). Throws std::invalid_argument when start is even or
// below 3.
LessonRun run_lesson(const LessonOptions& options = {});

// Same replay over an arbitrary sequence of integers, no constraints on the
// first element. run_lesson delegates here; tests and criteria demos use it
// to build lessons the validated entry point would reject.
LessonRun replay_lesson_sequence(const std::vector<Natural>& sequence,
                                 bool stop_at_first_inconclusive);

// A lesson over the same integers conducted by reciprocal subtraction on
// (sqrt(n), 1) instead, charged one step per unit subtraction. Non-square
// cases never terminate, so each one is truncated once its own step count
// reaches per_case_cap and left inconclusive. Exists to make the budget
// comparison against the mod-8 method executable.
LessonRun surd_pseudo_lesson(const std::vector<Natural>& sequence,
                             std::uint64_t per_case_cap);

struct CoverageStats {
  Natural range_max;
  Natural conclusive;
  Natural inconclusive;
  Natural fraction_num;  // conclusive / range_max in lowest terms
  Natural fraction_den;
};

// Classifies every n in [1, range_max] (evens included, via the reduction)
// and counts the inconclusive cases. Exact fractions only.
CoverageStats coverage_stats(const Natural& range_max);

struct CriterionResult {
  bool passed;
  std::string evidence;
};

struct CriteriaReport {
  std::array<CriterionResult, 6> criteria;  // c1..c6

  bool all_passed() const;
};

// Audits a lesson. Everything is computed from the report/trace pair and the
// step budget; nothing is hard-coded to the default lesson. Throws
// std::invalid_argument when report and trace do not describe the same run.
CriteriaReport criteria_check(const LessonReport& report,
                              const MethodTrace& trace, const Natural& budget);

enum class TableFormat { Text, Csv };

// The lesson table. Csv emits the header
//   n,remainder_mod8,verdict,reason
// and one row per examined case, UTF-8 with LF line endings. Text renders the
// same rows as an aligned two-column table with verdict annotations.
std::string render_table(const LessonReport& report, TableFormat format);

std::string render_coverage(const CoverageStats& stats, TableFormat format);

}  // namespace theo
