#include "theo/anthyphairesis.hpp"

#include <map>

#include "theo/arith.hpp"

namespace theo {

SubtractionRun anthyphairesis_int(const Natural& a, const Natural& b) {
  if (a == 0 || b == 0) {
    throw std::domain_error("anthyphairesis_int: magnitudes must be >= 1");
  }
  SubtractionRun run{a, b, {}, Natural(0)};
  Natural hi = a >= b ? a : b;
  Natural lo = a >= b ? b : a;
  for (;;) {
    Natural times = hi / lo;
    Natural rest = hi - times * lo;
    run.steps.push_back({hi, lo, times});
    if (rest == 0) {
      run.gcd = lo;
      return run;
    }
    hi = std::move(lo);
    lo = std::move(rest);
  }
}

bool commensurable(const Natural& a, const Natural& b) {
  if (a == 0 || b == 0) {
    throw std::domain_error("commensurable: magnitudes must be >= 1");
  }
  return true;
}

SurdRun anthyphairesis_surd(const Natural& n, std::uint64_t max_states) {
  if (n == 0) {
    throw std::domain_error("anthyphairesis_surd: n must be >= 1");
  }
  IsqrtResult s = isqrt(n);
  if (s.exact) {
    // (sqrt(n), 1) = (root, 1): the unit measures the side in root steps.
    return {n, {s.root}, {}, SurdOutcome::TerminatesAsInteger, s.root};
  }

  const Natural& a0 = s.root;
  std::vector<Natural> quotients;
  std::map<std::pair<Natural, Natural>, std::size_t> seen;

  Natural p = 0;
  Natural q = 1;
  for (std::uint64_t i = 0; i < max_states; ++i) {
    auto [it, inserted] = seen.emplace(std::make_pair(p, q), quotients.size());
    if (!inserted) {
      const std::size_t start = it->second;
      SurdRun run{n, {}, {}, SurdOutcome::Periodic, Natural(0)};
      run.prefix.assign(quotients.begin(),
                        quotients.begin() + static_cast<std::ptrdiff_t>(start));
      run.period.assign(quotients.begin() + static_cast<std::ptrdiff_t>(start),
                        quotients.end());
      return run;
    }
    // floor((p + sqrt(n)) / q) = floor((p + a0) / q) for q >= 1 and
    // non-square n, so the quotient needs no radical arithmetic.
    Natural a = (p + a0) / q;
    Natural next_p = a * q - p;
    Natural num = n - next_p * next_p;
    if (num <= 0 || num % q != 0) {
      throw std::logic_error("anthyphairesis_surd: state invariant broken");
    }
    Natural next_q = num / q;
    if (next_p < 0 || next_p > a0 + next_q) {
      throw std::logic_error("anthyphairesis_surd: state out of range");
    }
    quotients.push_back(std::move(a));
    p = std::move(next_p);
    q = std::move(next_q);
  }
  throw BudgetExceeded("anthyphairesis_surd: no repeated state within " +
                       std::to_string(max_states) + " states for n = " +
                       n.str());
}

std::vector<Natural> unroll(const SurdRun& run, std::size_t count) {
  std::vector<Natural> out;
  out.reserve(count);
  for (const Natural& a : run.prefix) {
    if (out.size() == count) return out;
    out.push_back(a);
  }
  if (run.period.empty()) {
    return out;  // terminated run: finite expansion
  }
  while (out.size() < count) {
    for (const Natural& a : run.period) {
      if (out.size() == count) break;
      out.push_back(a);
    }
  }
  return out;
}

std::pair<Natural, Natural> fold_convergent(const std::vector<Natural>& quotients) {
  Natural h_prev = 1, h_prev2 = 0;  // numerators
  Natural k_prev = 0, k_prev2 = 1;  // denominators
  for (const Natural& a : quotients) {
    Natural h = a * h_prev + h_prev2;
    Natural k = a * k_prev + k_prev2;
    h_prev2 = std::move(h_prev);
    h_prev = std::move(h);
    k_prev2 = std::move(k_prev);
    k_prev = std::move(k);
  }
  return {h_prev, k_prev};
}

}  // namespace theo
