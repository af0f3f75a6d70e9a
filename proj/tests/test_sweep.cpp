#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstdint>

#include "theo/arith.hpp"
#include "theo/oracle.hpp"
#include "theo/sweep.hpp"

using theo::Natural;
namespace sweep = theo::sweep;

namespace {

struct ThreadGuard {
  ThreadGuard() {
#ifdef _OPENMP
    omp_set_num_threads(4);
#endif
  }
};

// force the parallel paths through more than one thread even on small boxes
const ThreadGuard guard;

}  // namespace

TEST_CASE("verdict counts over ranges, parallel equals serial") {
  const sweep::VerdictCounts at17 = sweep::count_verdicts(17);
  CHECK(at17 == sweep::VerdictCounts{4, 12, 1});
  CHECK(at17 == sweep::count_verdicts_serial(17));

  const sweep::VerdictCounts at10k = sweep::count_verdicts(10000);
  CHECK(at10k == sweep::VerdictCounts{100, 8330, 1570});
  CHECK(at10k == sweep::count_verdicts_serial(10000));

  // rational verdicts are exactly the squares, so their count is floor(sqrt(N))
  CHECK(sweep::count_verdicts(100).rational ==
        theo::to_u64(theo::isqrt(Natural(100)).root));
  CHECK(at10k.rational == theo::to_u64(theo::isqrt(Natural(10000)).root));

  // verdicts of a prefix never change when the range grows
  sweep::VerdictCounts tail;
  for (std::uint64_t n = 5001; n <= 10000; ++n) {
    switch (theo::classify_tag(Natural(n))) {
      case theo::VerdictTag::Rational: ++tail.rational; break;
      case theo::VerdictTag::Irrational: ++tail.irrational; break;
      case theo::VerdictTag::Inconclusive: ++tail.inconclusive; break;
    }
  }
  const sweep::VerdictCounts head = sweep::count_verdicts(5000);
  CHECK(head.rational + tail.rational == at10k.rational);
  CHECK(head.irrational + tail.irrational == at10k.irrational);
  CHECK(head.inconclusive + tail.inconclusive == at10k.inconclusive);

  CHECK(sweep::count_verdicts(0) == sweep::VerdictCounts{0, 0, 0});
}

TEST_CASE("odd squares all leave remainder 1 and rebuild from the gnomon") {
  CHECK(sweep::odd_squares_remainder_one(9999) == 0);
  CHECK(sweep::odd_squares_remainder_one_serial(9999) == 0);
  CHECK(sweep::odd_squares_remainder_one(0) == 0);
}

TEST_CASE("methods agree across a range, parallel equals serial") {
  const sweep::AgreementScan scan = sweep::agreement_scan(2000);
  CHECK(scan.range_max == 2000);
  CHECK(scan.theodorus_oracle_mismatches == 0);
  CHECK(scan.characterization_mismatches == 0);
  CHECK(scan.naive_theodorus_disagreements == 0);
  CHECK(scan.naive_oracle_mismatches == 0);
  CHECK(scan.naive_inconclusive_count == 0);
  CHECK(scan.first_inconclusive == 17);
  CHECK(scan.inconclusive_count == sweep::count_verdicts(2000).inconclusive);
  CHECK(scan == sweep::agreement_scan_serial(2000));
}

TEST_CASE("falsification search is empty exactly off the squares") {
  CHECK(sweep::falsification_mismatches(400, 40) == 0);
  CHECK(sweep::falsification_mismatches_serial(400, 40) == 0);
}

TEST_CASE("surd sweep: dichotomy and closing quotient, parallel equals serial") {
  const sweep::SurdScanResult scan = sweep::surd_scan(300, 10000);
  CHECK(scan == sweep::SurdScanResult{0, 0, 0});
  CHECK(scan == sweep::surd_scan_serial(300, 10000));
}

TEST_CASE("subtractive gcd agrees with division gcd on a grid") {
  CHECK(sweep::gcd_grid_mismatches(80, 80) == 0);
  CHECK(sweep::gcd_grid_mismatches_serial(80, 80) == 0);
}

TEST_CASE("parallel falsification search returns the least witness") {
  const auto at9 = sweep::falsification_search_parallel(Natural(9), 200);
  REQUIRE(at9.has_value());
  CHECK(*at9 == theo::FalsificationWitness{3, 1});
  CHECK_FALSE(sweep::falsification_search_parallel(Natural(17), 2000)
                  .has_value());
  for (std::uint64_t n = 1; n <= 50; ++n) {
    CHECK(sweep::falsification_search_parallel(Natural(n), 60) ==
          theo::falsification_search(Natural(n), 60));
  }
}
