#include "theo/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <numeric>
#include <stdexcept>

#include "theo/anthyphairesis.hpp"
#include "theo/arith.hpp"

namespace theo::sweep {

namespace {

void tally_verdict(std::uint64_t n, VerdictCounts& counts) {
  switch (classify_tag(Natural(n))) {
    case VerdictTag::Rational: ++counts.rational; break;
    case VerdictTag::Irrational: ++counts.irrational; break;
    case VerdictTag::Inconclusive: ++counts.inconclusive; break;
  }
}

void merge(VerdictCounts& into, const VerdictCounts& from) {
  into.rational += from.rational;
  into.irrational += from.irrational;
  into.inconclusive += from.inconclusive;
}

bool odd_square_violates(std::uint64_t m) {
  const Natural square = Natural(m) * m;
  if (mod8(square).value() != 1) {
    return true;
  }
  const GnomonParts parts = gnomon_decompose(Natural((m - 1) / 2));
  return parts.unit != 1 || 8 * parts.eights + parts.unit != square;
}

void scan_case(std::uint64_t n, AgreementScan& s) {
  const Natural nn(n);
  const VerdictTag tag = classify_tag(nn);
  const bool truth = oracle_classify(nn).is_rational();

  if ((tag == VerdictTag::Rational && !truth) ||
      (tag == VerdictTag::Irrational && truth)) {
    ++s.theodorus_oracle_mismatches;
  }

  // The open cases, stated directly: strip 4s, core odd and 1 mod 8, core
  // not a square.
  Natural core = nn;
  while (core % 4 == 0) {
    core /= 4;
  }
  const bool open = core % 2 == 1 && core % 8 == 1 && !isqrt(core).exact;
  if (open != (tag == VerdictTag::Inconclusive)) {
    ++s.characterization_mismatches;
  }

  const NaiveClassification naive = naive_boys_tree(nn);
  const VerdictTag naive_tag = tag_of(naive.verdict);
  if (naive_tag == VerdictTag::Inconclusive) {
    ++s.naive_inconclusive_count;
  }
  if (tag != VerdictTag::Inconclusive && naive_tag != tag) {
    ++s.naive_theodorus_disagreements;
  }
  if ((naive_tag == VerdictTag::Rational) != truth) {
    ++s.naive_oracle_mismatches;
  }

  if (tag == VerdictTag::Inconclusive) {
    ++s.inconclusive_count;
    if (s.first_inconclusive == 0 || n < s.first_inconclusive) {
      s.first_inconclusive = n;
    }
  }
}

void merge(AgreementScan& into, const AgreementScan& from) {
  into.theodorus_oracle_mismatches += from.theodorus_oracle_mismatches;
  into.characterization_mismatches += from.characterization_mismatches;
  into.naive_theodorus_disagreements += from.naive_theodorus_disagreements;
  into.naive_oracle_mismatches += from.naive_oracle_mismatches;
  into.naive_inconclusive_count += from.naive_inconclusive_count;
  into.inconclusive_count += from.inconclusive_count;
  if (from.first_inconclusive != 0 &&
      (into.first_inconclusive == 0 ||
       from.first_inconclusive < into.first_inconclusive)) {
    into.first_inconclusive = from.first_inconclusive;
  }
}

bool falsification_disagrees(std::uint64_t n, std::uint64_t q_bound) {
  const Natural nn(n);
  const bool found = falsification_search(nn, q_bound).has_value();
  return found != oracle_classify(nn).is_rational();
}

void surd_case(std::uint64_t n, std::uint64_t max_states, SurdScanResult& r) {
  const Natural nn(n);
  const IsqrtResult s = isqrt(nn);
  try {
    const SurdRun run = anthyphairesis_surd(nn, max_states);
    const bool terminated = run.outcome == SurdOutcome::TerminatesAsInteger;
    if (terminated != s.exact) {
      ++r.dichotomy_mismatches;
    }
    if (!terminated &&
        (run.period.empty() || run.period.back() != 2 * s.root)) {
      ++r.last_quotient_mismatches;
    }
  } catch (const BudgetExceeded&) {
    ++r.budget_failures;
  }
}

void merge(SurdScanResult& into, const SurdScanResult& from) {
  into.dichotomy_mismatches += from.dichotomy_mismatches;
  into.budget_failures += from.budget_failures;
  into.last_quotient_mismatches += from.last_quotient_mismatches;
}

bool gcd_cell_disagrees(std::uint64_t a, std::uint64_t b) {
  return anthyphairesis_int(Natural(a), Natural(b)).gcd != std::gcd(a, b);
}

}  // namespace

VerdictCounts count_verdicts_serial(std::uint64_t range_max) {
  VerdictCounts counts;
  for (std::uint64_t n = 1; n <= range_max; ++n) {
    tally_verdict(n, counts);
  }
  return counts;
}

VerdictCounts count_verdicts(std::uint64_t range_max) {
#ifdef _OPENMP
  VerdictCounts counts;
#pragma omp parallel
  {
    VerdictCounts local;
#pragma omp for schedule(static) nowait
    for (std::uint64_t n = 1; n <= range_max; ++n) {
      tally_verdict(n, local);
    }
#pragma omp critical
    merge(counts, local);
  }
  return counts;
#else
  return count_verdicts_serial(range_max);
#endif
}

std::uint64_t odd_squares_remainder_one_serial(std::uint64_t max_odd) {
  std::uint64_t violations = 0;
  for (std::uint64_t m = 1; m <= max_odd; m += 2) {
    if (odd_square_violates(m)) {
      ++violations;
    }
  }
  return violations;
}

std::uint64_t odd_squares_remainder_one(std::uint64_t max_odd) {
#ifdef _OPENMP
  if (max_odd == 0) {
    return 0;
  }
  std::uint64_t violations = 0;
  const std::uint64_t odds = (max_odd + 1) / 2;
#pragma omp parallel
  {
    std::uint64_t local = 0;
#pragma omp for schedule(static) nowait
    for (std::uint64_t i = 0; i < odds; ++i) {
      if (odd_square_violates(2 * i + 1)) {
        ++local;
      }
    }
#pragma omp critical
    violations += local;
  }
  return violations;
#else
  return odd_squares_remainder_one_serial(max_odd);
#endif
}

AgreementScan agreement_scan_serial(std::uint64_t range_max) {
  AgreementScan scan;
  scan.range_max = range_max;
  for (std::uint64_t n = 1; n <= range_max; ++n) {
    scan_case(n, scan);
  }
  return scan;
}

AgreementScan agreement_scan(std::uint64_t range_max) {
#ifdef _OPENMP
  AgreementScan scan;
  scan.range_max = range_max;
#pragma omp parallel
  {
    AgreementScan local;
#pragma omp for schedule(static) nowait
    for (std::uint64_t n = 1; n <= range_max; ++n) {
      scan_case(n, local);
    }
#pragma omp critical
    merge(scan, local);
  }
  return scan;
#else
  return agreement_scan_serial(range_max);
#endif
}

std::uint64_t falsification_mismatches_serial(std::uint64_t n_max,
                                              std::uint64_t q_bound) {
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (falsification_disagrees(n, q_bound)) {
      ++mismatches;
    }
  }
  return mismatches;
}

std::uint64_t falsification_mismatches(std::uint64_t n_max,
                                       std::uint64_t q_bound) {
#ifdef _OPENMP
  std::uint64_t mismatches = 0;
#pragma omp parallel
  {
    std::uint64_t local = 0;
#pragma omp for schedule(static) nowait
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (falsification_disagrees(n, q_bound)) {
        ++local;
      }
    }
#pragma omp critical
    mismatches += local;
  }
  return mismatches;
#else
  return falsification_mismatches_serial(n_max, q_bound);
#endif
}

SurdScanResult surd_scan_serial(std::uint64_t n_max, std::uint64_t max_states) {
  SurdScanResult result;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    surd_case(n, max_states, result);
  }
  return result;
}

SurdScanResult surd_scan(std::uint64_t n_max, std::uint64_t max_states) {
#ifdef _OPENMP
  SurdScanResult result;
#pragma omp parallel
  {
    SurdScanResult local;
#pragma omp for schedule(static) nowait
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      surd_case(n, max_states, local);
    }
#pragma omp critical
    merge(result, local);
  }
  return result;
#else
  return surd_scan_serial(n_max, max_states);
#endif
}

std::uint64_t gcd_grid_mismatches_serial(std::uint64_t a_max,
                                         std::uint64_t b_max) {
  std::uint64_t mismatches = 0;
  for (std::uint64_t a = 1; a <= a_max; ++a) {
    for (std::uint64_t b = 1; b <= b_max; ++b) {
      if (gcd_cell_disagrees(a, b)) {
        ++mismatches;
      }
    }
  }
  return mismatches;
}

std::uint64_t gcd_grid_mismatches(std::uint64_t a_max, std::uint64_t b_max) {
#ifdef _OPENMP
  std::uint64_t mismatches = 0;
  const std::uint64_t cells = a_max * b_max;
#pragma omp parallel
  {
    std::uint64_t local = 0;
#pragma omp for schedule(static) nowait
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
      if (gcd_cell_disagrees(idx / b_max + 1, idx % b_max + 1)) {
        ++local;
      }
    }
#pragma omp critical
    mismatches += local;
  }
  return mismatches;
#else
  return gcd_grid_mismatches_serial(a_max, b_max);
#endif
}

std::optional<FalsificationWitness> falsification_search_parallel(
    const Natural& n, std::uint64_t bound) {
#ifdef _OPENMP
  if (n == 0 || bound == 0) {
    throw std::domain_error("falsification_search: n and bound must be >= 1");
  }
  std::uint64_t best = 0;
#pragma omp parallel
  {
    std::uint64_t local = 0;
#pragma omp for schedule(static) nowait
    for (std::uint64_t q = 1; q <= bound; ++q) {
      // static scheduling hands each thread one ascending block, so its
      // first hit is its block minimum and the rest can be skipped
      if (local == 0 && isqrt(n * q * q).exact) {
        local = q;
      }
    }
    if (local != 0) {
#pragma omp critical
      if (best == 0 || local < best) {
        best = local;
      }
    }
  }
  if (best == 0) {
    return std::nullopt;
  }
  const Natural q(best);
  return FalsificationWitness{isqrt(n * q * q).root, q};
#else
  return falsification_search(n, bound);
#endif
}

}  // namespace theo::sweep
