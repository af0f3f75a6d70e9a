#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "theo/lesson.hpp"

using theo::Natural;

namespace {

std::vector<Natural> odds_up_to_17() {
  return {3, 5, 7, 9, 11, 13, 15, 17};
}

}  // namespace

TEST_CASE("the default lesson stops at 17 after 18 steps") {
  const theo::LessonRun run = theo::run_lesson();
  REQUIRE(run.report.examined.size() == 8);
  CHECK(run.report.start == 3);
  CHECK(run.report.stop == 17);
  CHECK(run.report.stop_reason == theo::StopReason::FirstInconclusive);
  CHECK(run.report.total_steps == 18);

  const unsigned remainders[] = {3, 5, 7, 1, 3, 5, 7, 1};
  const std::vector<Natural> ns = odds_up_to_17();
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(run.report.examined[i].n == ns[i]);
    CHECK(run.report.examined[i].remainder.value() == remainders[i]);
  }
  CHECK(std::holds_alternative<theo::ProvedRational>(
      run.report.examined[3].verdict));
  CHECK(std::holds_alternative<theo::Inconclusive>(
      run.report.examined[7].verdict));
  CHECK(run.trace.cases.size() == 8);
}

TEST_CASE("exhausting the default range examines every odd number") {
  theo::LessonOptions options;
  options.stop_at_first_inconclusive = false;
  const theo::LessonRun run = theo::run_lesson(options);
  CHECK(run.report.examined.size() == 49);
  CHECK(run.report.stop == 99);
  CHECK(run.report.stop_reason == theo::StopReason::RangeExhausted);

  std::vector<Natural> open;
  for (const theo::ExaminedCase& ec : run.report.examined) {
    if (std::holds_alternative<theo::Inconclusive>(ec.verdict)) {
      open.push_back(ec.n);
    }
  }
  CHECK(open == std::vector<Natural>{17, 33, 41, 57, 65, 73, 89, 97});
}

TEST_CASE("a lesson started later stops at the next open case") {
  theo::LessonOptions options;
  options.start = 19;
  const theo::LessonRun run = theo::run_lesson(options);
  CHECK(run.report.stop == 33);
  CHECK(run.report.stop_reason == theo::StopReason::FirstInconclusive);
}

TEST_CASE("a short range runs out before anything is inconclusive") {
  theo::LessonOptions options;
  options.limit = 7;
  const theo::LessonRun run = theo::run_lesson(options);
  CHECK(run.report.examined.size() == 3);
  CHECK(run.report.stop == 7);
  CHECK(run.report.stop_reason == theo::StopReason::RangeExhausted);
  for (const theo::ExaminedCase& ec : run.report.examined) {
    CHECK(std::holds_alternative<theo::ProvedIrrational>(ec.verdict));
  }
}

TEST_CASE("run_lesson validates its start") {
  for (std::uint64_t bad : {0, 1, 2, 4}) {
    theo::LessonOptions options;
    options.start = bad;
    CHECK_THROWS_AS(theo::run_lesson(options), std::invalid_argument);
  }
  theo::LessonOptions empty;
  empty.start = 21;
  empty.limit = 5;
  const theo::LessonRun run = theo::run_lesson(empty);
  CHECK(run.report.examined.empty());
  CHECK(run.report.stop == 0);
  CHECK(run.report.stop_reason == theo::StopReason::RangeExhausted);
}

TEST_CASE("replay accepts sequences run_lesson would reject") {
  std::vector<Natural> with_two = {2};
  for (const Natural& n : odds_up_to_17()) with_two.push_back(n);
  const theo::LessonRun run = theo::replay_lesson_sequence(with_two, true);
  CHECK(run.report.examined.front().n == 2);
  CHECK(run.report.stop == 17);
  CHECK(run.report.stop_reason == theo::StopReason::FirstInconclusive);
}

TEST_CASE("coverage at the lesson horizon and beyond") {
  const theo::CoverageStats at17 = theo::coverage_stats(Natural(17));
  CHECK(at17.conclusive == 16);
  CHECK(at17.inconclusive == 1);
  CHECK(at17.fraction_num == 16);
  CHECK(at17.fraction_den == 17);

  const theo::CoverageStats at100 = theo::coverage_stats(Natural(100));
  CHECK(at100.conclusive == 91);
  CHECK(at100.inconclusive == 9);

  const theo::CoverageStats at10k = theo::coverage_stats(Natural(10000));
  CHECK(at10k.conclusive == 8430);
  CHECK(at10k.inconclusive == 1570);
  CHECK(at10k.fraction_num == 843);
  CHECK(at10k.fraction_den == 1000);

  const theo::CoverageStats at1 = theo::coverage_stats(Natural(1));
  CHECK(at1.conclusive == 1);
  CHECK(at1.fraction_num == 1);
  CHECK(at1.fraction_den == 1);

  for (const theo::CoverageStats* s : {&at17, &at100, &at10k, &at1}) {
    CHECK(s->conclusive + s->inconclusive == s->range_max);
    CHECK(s->fraction_num * s->range_max == s->fraction_den * s->conclusive);
  }

  CHECK_THROWS_AS(theo::coverage_stats(Natural(0)), std::domain_error);
}

TEST_CASE("the default lesson passes all six criteria") {
  const theo::LessonRun run = theo::run_lesson();
  const theo::CriteriaReport report =
      theo::criteria_check(run.report, run.trace, Natural(1000));
  CHECK(report.all_passed());
  CHECK(report.criteria[0].evidence.find("n = 3") != std::string::npos);
  CHECK(report.criteria[2].evidence.find("n = 17") != std::string::npos);
  CHECK(report.criteria[4].evidence.find("18") != std::string::npos);

  // pure: the same run and budget audit identically every time
  const theo::CriteriaReport again =
      theo::criteria_check(run.report, run.trace, Natural(1000));
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(report.criteria[i].passed == again.criteria[i].passed);
    CHECK(report.criteria[i].evidence == again.criteria[i].evidence);
  }
}

TEST_CASE("a tight budget fails only c5") {
  const theo::LessonRun run = theo::run_lesson();
  const theo::CriteriaReport report =
      theo::criteria_check(run.report, run.trace, Natural(10));
  CHECK_FALSE(report.all_passed());
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(report.criteria[i].passed == (i != 4));
  }
}

TEST_CASE("a lesson started at 2 fails only c1") {
  std::vector<Natural> with_two = {2};
  for (const Natural& n : odds_up_to_17()) with_two.push_back(n);
  const theo::LessonRun run = theo::replay_lesson_sequence(with_two, true);
  const theo::CriteriaReport report =
      theo::criteria_check(run.report, run.trace, Natural(1000));
  CHECK_FALSE(report.criteria[0].passed);
  CHECK(report.criteria[0].evidence.find("n = 2") != std::string::npos);
  for (std::size_t i = 1; i < 6; ++i) {
    CHECK(report.criteria[i].passed);
  }
}

TEST_CASE("a lesson started at 19 fails c1 and c3") {
  theo::LessonOptions options;
  options.start = 19;
  const theo::LessonRun run = theo::run_lesson(options);
  const theo::CriteriaReport report =
      theo::criteria_check(run.report, run.trace, Natural(1000));
  CHECK_FALSE(report.criteria[0].passed);
  CHECK_FALSE(report.criteria[2].passed);
  CHECK(report.criteria[2].evidence.find("n = 33") != std::string::npos);
}

TEST_CASE("an exhausted lesson fails c3") {
  theo::LessonOptions options;
  options.stop_at_first_inconclusive = false;
  const theo::LessonRun run = theo::run_lesson(options);
  const theo::CriteriaReport report =
      theo::criteria_check(run.report, run.trace, Natural(1000));
  CHECK_FALSE(report.criteria[2].passed);
}

TEST_CASE("the subtraction lesson blows the step budget") {
  const theo::LessonRun run = theo::surd_pseudo_lesson(odds_up_to_17(), 1000);
  CHECK(run.report.total_steps == 7003);
  CHECK(run.report.examined.size() == 8);
  CHECK(std::holds_alternative<theo::ProvedRational>(
      run.report.examined[3].verdict));
  for (std::size_t i : {0u, 7u}) {
    CHECK(std::holds_alternative<theo::Inconclusive>(
        run.report.examined[i].verdict));
  }

  const theo::CriteriaReport report =
      theo::criteria_check(run.report, run.trace, Natural(1000));
  CHECK_FALSE(report.criteria[4].passed);
  CHECK(report.criteria[4].evidence.find("7003") != std::string::npos);
  // the lesson's own shape still holds: starts at 3, independent cases,
  // admitted primitives, unproved generalization at the end
  CHECK(report.criteria[0].passed);
  CHECK(report.criteria[1].passed);
  CHECK(report.criteria[3].passed);
  CHECK(report.criteria[5].passed);
}

TEST_CASE("criteria_check rejects mismatched report and trace") {
  const theo::LessonRun run = theo::run_lesson();

  theo::LessonReport wrong_total = run.report;
  wrong_total.total_steps += 1;
  CHECK_THROWS_AS(theo::criteria_check(wrong_total, run.trace, Natural(1000)),
                  std::invalid_argument);

  theo::LessonReport wrong_stop = run.report;
  wrong_stop.stop = 15;
  CHECK_THROWS_AS(theo::criteria_check(wrong_stop, run.trace, Natural(1000)),
                  std::invalid_argument);

  theo::LessonReport dropped = run.report;
  dropped.examined.pop_back();
  CHECK_THROWS_AS(theo::criteria_check(dropped, run.trace, Natural(1000)),
                  std::invalid_argument);

  theo::LessonReport flipped = run.report;
  flipped.examined[0].verdict = theo::Inconclusive{};
  CHECK_THROWS_AS(theo::criteria_check(flipped, run.trace, Natural(1000)),
                  std::invalid_argument);
}

TEST_CASE("csv table matches the canonical lesson byte for byte") {
  const theo::LessonRun run = theo::run_lesson();
  const std::string expected =
      "n,remainder_mod8,verdict,reason\n"
      "3,3,proved_irrational,odd_remainder_not_1\n"
      "5,5,proved_irrational,odd_remainder_not_1\n"
      "7,7,proved_irrational,odd_remainder_not_1\n"
      "9,1,proved_rational,root=3\n"
      "11,3,proved_irrational,odd_remainder_not_1\n"
      "13,5,proved_irrational,odd_remainder_not_1\n"
      "15,7,proved_irrational,odd_remainder_not_1\n"
      "17,1,inconclusive,\n";
  CHECK(theo::render_table(run.report, theo::TableFormat::Csv) == expected);
}

TEST_CASE("an empty range renders as the bare header") {
  theo::LessonOptions empty;
  empty.start = 21;
  empty.limit = 5;
  const theo::LessonRun run = theo::run_lesson(empty);
  CHECK(theo::render_table(run.report, theo::TableFormat::Csv) ==
        "n,remainder_mod8,verdict,reason\n");
}

TEST_CASE("text table lists every examined case") {
  const theo::LessonRun run = theo::run_lesson();
  const std::string text =
      theo::render_table(run.report, theo::TableFormat::Text);
  CHECK(text.find("irrational: odd remainder 3 is not 1") != std::string::npos);
  CHECK(text.find("rational: root 3") != std::string::npos);
  CHECK(text.find("inconclusive") != std::string::npos);
}

TEST_CASE("coverage renders in both formats") {
  const theo::CoverageStats stats = theo::coverage_stats(Natural(17));
  CHECK(theo::render_coverage(stats, theo::TableFormat::Csv) ==
        "range_max,conclusive,inconclusive,fraction_num,fraction_den\n"
        "17,16,1,16,17\n");
  const std::string text =
      theo::render_coverage(stats, theo::TableFormat::Text);
  CHECK(text.find("16/17") != std::string::npos);
}
