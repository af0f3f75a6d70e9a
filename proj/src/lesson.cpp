#include "theo/lesson.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "theo/sweep.hpp"

namespace theo {

LessonRun replay_lesson_sequence(const std::vector<Natural>& sequence,
                                 bool stop_at_first_inconclusive) {
  LessonRun run;
  run.report.start = sequence.empty() ? Natural(0) : sequence.front();
  run.report.stop = 0;
  run.report.stop_reason = StopReason::RangeExhausted;
  run.report.total_steps = 0;

  for (const Natural& n : sequence) {
    TraceCase tc = theodorus_classify(n);
    run.report.examined.push_back({n, mod8(n), tc.verdict});
    run.report.stop = n;
    run.report.total_steps += tc.steps.size();
    const bool inconclusive = std::holds_alternative<Inconclusive>(tc.verdict);
    run.trace.cases.push_back(std::move(tc));
    if (stop_at_first_inconclusive && inconclusive) {
      run.report.stop_reason = StopReason::FirstInconclusive;
      break;
    }
  }
  return run;
}

LessonRun run_lesson(const LessonOptions& options) {
  if (options.start < 3 || options.start % 2 == 0) {
    throw std::invalid_argument("run_lesson: start must be an odd number >= 3");
  }
  std::vector<Natural> odds;
  for (Natural n = options.start; n <= options.limit; n += 2) {
    odds.push_back(n);
  }
  LessonRun run =
      replay_lesson_sequence(odds, options.stop_at_first_inconclusive);
  run.report.start = options.start;
  return run;
}

LessonRun surd_pseudo_lesson(const std::vector<Natural>& sequence,
                             std::uint64_t per_case_cap) {
  LessonRun run;
  run.report.start = sequence.empty() ? Natural(0) : sequence.front();
  run.report.stop = 0;
  run.report.stop_reason = StopReason::RangeExhausted;
  run.report.total_steps = 0;

  for (const Natural& n : sequence) {
    if (n == 0) {
      throw std::domain_error("surd_pseudo_lesson: n must be >= 1");
    }
    IsqrtResult s = isqrt(n);
    // A square side is measured out by the unit in root steps. Anything else
    // never terminates, so the case is cut off at the cap and left open.
    std::uint64_t charged = per_case_cap;
    bool finished = false;
    if (s.exact && s.root <= per_case_cap) {
      charged = to_u64(s.root);
      finished = true;
    }
    TraceCase tc{n, {}, Inconclusive{}};
    tc.steps.reserve(charged);
    for (std::uint64_t i = 0; i < charged; ++i) {
      tc.steps.push_back({StepKind::Subtract, n, Natural(0)});
    }
    if (finished) {
      tc.verdict = ProvedRational{s.root};
    }
    run.report.examined.push_back({n, mod8(n), tc.verdict});
    run.report.stop = n;
    run.report.total_steps += charged;
    run.trace.cases.push_back(std::move(tc));
  }
  return run;
}

CoverageStats coverage_stats(const Natural& range_max) {
  if (range_max == 0) {
    throw std::domain_error("coverage_stats: range_max must be >= 1");
  }
  const sweep::VerdictCounts counts = sweep::count_verdicts(to_u64(range_max));
  CoverageStats stats;
  stats.range_max = range_max;
  stats.conclusive = Natural(counts.rational) + counts.irrational;
  stats.inconclusive = counts.inconclusive;
  const Natural g = boost::multiprecision::gcd(stats.conclusive, range_max);
  stats.fraction_num = stats.conclusive / g;
  stats.fraction_den = range_max / g;
  return stats;
}

bool CriteriaReport::all_passed() const {
  for (const CriterionResult& c : criteria) {
    if (!c.passed) return false;
  }
  return true;
}

namespace {

void require_matching(const LessonReport& report, const MethodTrace& trace) {
  if (report.examined.size() != trace.cases.size()) {
    throw std::invalid_argument(
        "criteria_check: report and trace disagree on the number of cases");
  }
  Natural steps = 0;
  for (std::size_t i = 0; i < trace.cases.size(); ++i) {
    const ExaminedCase& ec = report.examined[i];
    const TraceCase& tc = trace.cases[i];
    if (ec.n != tc.n || !(ec.verdict == tc.verdict) ||
        !(ec.remainder == mod8(ec.n))) {
      throw std::invalid_argument(
          "criteria_check: report and trace disagree on case " + tc.n.str());
    }
    steps += tc.steps.size();
  }
  if (steps != report.total_steps) {
    throw std::invalid_argument(
        "criteria_check: report step total does not match the trace");
  }
  const Natural last =
      report.examined.empty() ? Natural(0) : report.examined.back().n;
  if (report.stop != last) {
    throw std::invalid_argument(
        "criteria_check: report stop is not the last examined case");
  }
}

CriterionResult check_starts_at_three(const LessonReport& report) {
  if (report.examined.empty()) {
    return {false, "no cases were examined"};
  }
  const Natural& first = report.examined.front().n;
  if (first == 3) {
    return {true, "first case examined is n = 3"};
  }
  return {false, "first case examined is n = " + first.str() + ", not 3"};
}

CriterionResult check_case_independence(const MethodTrace& trace) {
  std::size_t total = 0;
  for (const TraceCase& tc : trace.cases) {
    std::set<Natural> derived{tc.n};
    for (std::size_t k = 0; k < tc.steps.size(); ++k) {
      const PrimitiveStep& step = tc.steps[k];
      if (derived.find(step.subject) == derived.end()) {
        return {false, "case n = " + tc.n.str() + " step " +
                           std::to_string(k + 1) + " examines " +
                           step.subject.str() +
                           ", which is not derived from its own n"};
      }
      derived.insert(step.result);
      ++total;
    }
  }
  return {true, "all " + std::to_string(total) +
                    " steps examine only values derived from their own case"};
}

CriterionResult check_stop_accounted(const LessonReport& report) {
  if (report.stop_reason != StopReason::FirstInconclusive) {
    return {false, "ran to the end of the range instead of stopping at an "
                   "inconclusive case"};
  }
  for (std::size_t i = 0; i + 1 < report.examined.size(); ++i) {
    if (std::holds_alternative<Inconclusive>(report.examined[i].verdict)) {
      return {false, "n = " + report.examined[i].n.str() +
                         " was already inconclusive before the stop"};
    }
  }
  if (report.stop != 17) {
    return {false,
            "stopped at n = " + report.stop.str() + ", not at n = 17"};
  }
  return {true, "stopped at n = 17, the first inconclusive case"};
}

CriterionResult check_primitives_only(const MethodTrace& trace) {
  std::size_t total = 0;
  for (const TraceCase& tc : trace.cases) {
    for (const PrimitiveStep& step : tc.steps) {
      switch (step.kind) {
        case StepKind::Subtract:
        case StepKind::ParityCheck:
        case StepKind::Mod8Check:
        case StepKind::SquareTest:
        case StepKind::Reduce:
          ++total;
          break;
        default:
          return {false, "case n = " + tc.n.str() +
                             " uses a step outside the admitted primitives"};
      }
    }
  }
  return {true, "all " + std::to_string(total) +
                    " steps use the five admitted primitives"};
}

CriterionResult check_budget(const LessonReport& report, const Natural& budget) {
  if (report.total_steps <= budget) {
    return {true, "total steps " + report.total_steps.str() +
                      " within budget " + budget.str()};
  }
  return {false, "total steps " + report.total_steps.str() +
                     " exceed budget " + budget.str()};
}

CriterionResult check_unproved_generalization(const LessonReport& report) {
  if (report.stop == 0) {
    return {false, "no stopping case to generalize from"};
  }
  const NaiveClassification naive = naive_boys_tree(report.stop);
  if (naive.asserted_without_proof) {
    return {true, "n = " + report.stop.str() +
                      " makes the boys' tree assert irrationality without "
                      "proof"};
  }
  return {false, "n = " + report.stop.str() +
                     " is settled by the boys' tree, so nothing is left "
                     "unproved"};
}

}  // namespace

CriteriaReport criteria_check(const LessonReport& report,
                              const MethodTrace& trace, const Natural& budget) {
  require_matching(report, trace);
  CriteriaReport out;
  out.criteria[0] = check_starts_at_three(report);
  out.criteria[1] = check_case_independence(trace);
  out.criteria[2] = check_stop_accounted(report);
  out.criteria[3] = check_primitives_only(trace);
  out.criteria[4] = check_budget(report, budget);
  out.criteria[5] = check_unproved_generalization(report);
  return out;
}

std::string render_table(const LessonReport& report, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << "n,remainder_mod8,verdict,reason\n";
    for (const ExaminedCase& ec : report.examined) {
      out << ec.n.str() << ',' << ec.remainder.value() << ','
          << verdict_label(ec.verdict) << ',' << reason_label(ec.verdict)
          << '\n';
    }
    return out.str();
  }

  std::size_t width = 1;
  for (const ExaminedCase& ec : report.examined) {
    width = std::max(width, ec.n.str().size());
  }
  out << std::setw(static_cast<int>(width)) << 'n' << "  mod 8  verdict\n";
  for (const ExaminedCase& ec : report.examined) {
    out << std::setw(static_cast<int>(width)) << ec.n.str() << "  "
        << std::setw(5) << ec.remainder.value() << "  "
        << verdict_annotation(ec.verdict) << '\n';
  }
  return out.str();
}

std::string render_coverage(const CoverageStats& stats, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << "range_max,conclusive,inconclusive,fraction_num,fraction_den\n"
        << stats.range_max.str() << ',' << stats.conclusive.str() << ','
        << stats.inconclusive.str() << ',' << stats.fraction_num.str() << ','
        << stats.fraction_den.str() << '\n';
    return out.str();
  }
  const double approx = stats.fraction_num.convert_to<double>() /
                        stats.fraction_den.convert_to<double>();
  out << "range        1.." << stats.range_max.str() << '\n'
      << "conclusive   " << stats.conclusive.str() << '\n'
      << "inconclusive " << stats.inconclusive.str() << '\n'
      << "fraction     " << stats.fraction_num.str() << '/'
      << stats.fraction_den.str() << " (" << std::fixed
      << std::setprecision(4) << approx << ")\n";
  return out.str();
}

}  // namespace theo
