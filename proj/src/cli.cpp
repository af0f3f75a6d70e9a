#include "theo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "theo/anthyphairesis.hpp"
#include "theo/classify.hpp"
#include "theo/lesson.hpp"
#include "theo/natural.hpp"
#include "theo/oracle.hpp"

namespace theo {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

std::uint64_t clamp_to_u64(const Natural& n) {
  if (n > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return to_u64(n);
}

TableFormat parse_format(const std::string& name) {
  return name == "csv" ? TableFormat::Csv : TableFormat::Text;
}

int do_classify(const std::string& n_text, const std::string& method,
                std::ostream& out) {
  const Natural n = parse_natural(n_text);
  if (method == "oracle") {
    const OracleVerdict truth = oracle_classify(n);
    out << n.str() << ": "
        << (truth.is_rational() ? "rational: root " + truth.root->str()
                                : std::string("irrational: not a perfect square"))
        << '\n';
    return kExitOk;
  }
  if (method == "naive") {
    const NaiveClassification naive = naive_boys_tree(n);
    out << n.str() << ": " << verdict_annotation(naive.verdict) << '\n';
    return kExitOk;
  }
  if (method == "anthyphairesis") {
    const SurdRun run = anthyphairesis_surd(n);
    if (run.outcome == SurdOutcome::TerminatesAsInteger) {
      out << n.str() << ": rational: root " << run.root.str()
          << " (subtraction terminates)\n";
    } else {
      out << n.str() << ": irrational: subtraction is periodic, period length "
          << run.period.size() << '\n';
    }
    return kExitOk;
  }
  const TraceCase tc = theodorus_classify(n);
  out << n.str() << ": " << verdict_annotation(tc.verdict) << '\n';
  return kExitOk;
}

int do_lesson(const std::string& start_text, const std::string& limit_text,
              const std::string& format, bool exhaust, std::ostream& out) {
  LessonOptions options;
  options.start = parse_natural(start_text);
  options.limit = parse_natural(limit_text);
  options.stop_at_first_inconclusive = !exhaust;
  const LessonRun run = run_lesson(options);
  const TableFormat fmt = parse_format(format);
  out << render_table(run.report, fmt);
  if (fmt == TableFormat::Text) {
    out << "examined " << run.report.examined.size() << " cases, "
        << run.report.total_steps.str() << " steps; ";
    if (run.report.stop_reason == StopReason::FirstInconclusive) {
      out << "stopped at n = " << run.report.stop.str()
          << ", the first inconclusive case\n";
    } else {
      out << "range exhausted\n";
    }
  }
  return kExitOk;
}

int do_coverage(const std::string& max_text, const std::string& format,
                std::ostream& out) {
  const CoverageStats stats = coverage_stats(parse_natural(max_text));
  out << render_coverage(stats, parse_format(format));
  return kExitOk;
}

int do_anthyphairesis_pair(const std::string& a_text, const std::string& b_text,
                           std::ostream& out) {
  const Natural a = parse_natural(a_text);
  const Natural b = parse_natural(b_text);
  const SubtractionRun run = anthyphairesis_int(a, b);
  for (const SubtractionStep& step : run.steps) {
    out << step.larger.str() << " = " << step.times.str() << " * "
        << step.smaller.str() << " + "
        << Natural(step.larger - step.times * step.smaller).str() << '\n';
  }
  out << "gcd(" << a.str() << ", " << b.str() << ") = " << run.gcd.str()
      << '\n';
  return kExitOk;
}

int do_anthyphairesis_surd(const std::string& n_text,
                           const std::string& max_states_text,
                           std::ostream& out) {
  const Natural n = parse_natural(n_text);
  const std::uint64_t max_states = clamp_to_u64(parse_natural(max_states_text));
  const SurdRun run = anthyphairesis_surd(n, max_states);
  if (run.outcome == SurdOutcome::TerminatesAsInteger) {
    out << "sqrt(" << n.str() << ") = " << run.root.str()
        << ", commensurable with the unit\n";
    return kExitOk;
  }
  out << "sqrt(" << n.str() << "): quotients [";
  for (std::size_t i = 0; i < run.prefix.size(); ++i) {
    out << (i ? " " : "") << run.prefix[i].str();
  }
  out << "] then [";
  for (std::size_t i = 0; i < run.period.size(); ++i) {
    out << (i ? " " : "") << run.period[i].str();
  }
  out << "] repeating; no common measure\n";
  return kExitOk;
}

int do_criteria(const std::string& budget_text, std::ostream& out) {
  const Natural budget = parse_natural(budget_text);
  const LessonRun run = run_lesson();
  const CriteriaReport report =
      criteria_check(run.report, run.trace, budget);
  static const char* const titles[6] = {
      "starts at 3, not 2",      "case independence",
      "stop accounted for",      "ancient primitives only",
      "within step budget",      "unproved generalization",
  };
  for (std::size_t i = 0; i < report.criteria.size(); ++i) {
    const CriterionResult& c = report.criteria[i];
    out << 'c' << i + 1 << (c.passed ? " pass  " : " FAIL  ") << titles[i]
        << ": " << c.evidence << '\n';
  }
  return report.all_passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"decision procedures for the rationality of square roots"};
  app.require_subcommand(1);

  std::string n_text;
  std::string method = "theodorus";
  CLI::App* classify = app.add_subcommand(
      "classify", "classify sqrt(n) as rational, irrational or inconclusive");
  classify->add_option("n", n_text, "the number under the root")->required();
  classify->add_option("--method", method, "decision procedure to use")
      ->check(CLI::IsMember({"theodorus", "oracle", "naive", "anthyphairesis"}));

  std::string start = "3";
  std::string limit = "99";
  std::string lesson_format = "text";
  bool exhaust = false;
  CLI::App* lesson = app.add_subcommand(
      "lesson", "replay the mod-8 lesson over the odd numbers");
  lesson->add_option("--start", start, "first odd number to examine");
  lesson->add_option("--limit", limit, "last number to consider");
  lesson->add_option("--format", lesson_format, "table format")
      ->check(CLI::IsMember({"text", "csv"}));
  CLI::Option* exhaust_flag =
      lesson->add_flag("--exhaust", exhaust, "examine the whole range");
  lesson->add_flag("--until-inconclusive",
                   "stop at the first inconclusive case (default)")
      ->excludes(exhaust_flag);

  std::string max_text;
  std::string coverage_format = "text";
  CLI::App* coverage = app.add_subcommand(
      "coverage", "how much of [1, N] the mod-8 method settles");
  coverage->add_option("--max", max_text, "top of the range")->required();
  coverage->add_option("--format", coverage_format, "output format")
      ->check(CLI::IsMember({"text", "csv"}));

  std::string a_text;
  std::string b_text;
  std::string surd_text;
  std::string max_states = "10000";
  CLI::App* anthy = app.add_subcommand(
      "anthyphairesis", "reciprocal subtraction on a pair or on (sqrt(n), 1)");
  anthy->add_option("a", a_text, "first magnitude");
  anthy->add_option("b", b_text, "second magnitude");
  CLI::Option* surd_opt =
      anthy->add_option("--surd", surd_text, "run on (sqrt(n), 1) instead");
  anthy->add_option("--max-states", max_states,
                    "give up after this many quotients");

  std::string budget = "1000";
  CLI::App* criteria = app.add_subcommand(
      "criteria", "audit the default lesson against the six criteria");
  criteria->add_option("--budget", budget, "step budget for the whole lesson");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (*classify) {
      return do_classify(n_text, method, out);
    }
    if (*lesson) {
      return do_lesson(start, limit, lesson_format, exhaust, out);
    }
    if (*coverage) {
      return do_coverage(max_text, coverage_format, out);
    }
    if (*anthy) {
      if (*surd_opt) {
        if (!a_text.empty() || !b_text.empty()) {
          err << "anthyphairesis: --surd takes no positional magnitudes\n";
          return kExitBadInput;
        }
        return do_anthyphairesis_surd(surd_text, max_states, out);
      }
      if (a_text.empty() || b_text.empty()) {
        err << "anthyphairesis: need two magnitudes or --surd <n>\n";
        return kExitBadInput;
      }
      return do_anthyphairesis_pair(a_text, b_text, out);
    }
    if (*criteria) {
      return do_criteria(budget, out);
    }
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::range_error& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace theo
