#include "theo/classify.hpp"

#include <stdexcept>
#include <utility>

namespace theo {

EvenReduction reduce_even(const Natural& n) {
  if (n == 0) {
    throw std::domain_error("reduce_even: n must be >= 1");
  }
  Natural core = n;
  Natural factor = 1;
  while (core % 4 == 0) {
    core /= 4;
    factor *= 2;
  }
  return {std::move(core), std::move(factor)};
}

VerdictTag tag_of(const Verdict& v) {
  if (std::holds_alternative<ProvedRational>(v)) return VerdictTag::Rational;
  if (std::holds_alternative<ProvedIrrational>(v)) return VerdictTag::Irrational;
  return VerdictTag::Inconclusive;
}

namespace {

Reason irrational_reason(const Natural& core, const Natural& factor,
                         Reason core_reason) {
  if (factor > 1) {
    return ReducedTo{core, factor};
  }
  return core_reason;
}

}  // namespace

VerdictTag classify_tag(const Natural& n) {
  if (n == 0) {
    throw std::domain_error("classify_tag: n must be >= 1");
  }
  Natural core = n;
  while (core % 4 == 0) {
    core /= 4;
  }
  if (core % 2 == 0) {
    return VerdictTag::Irrational;
  }
  const unsigned rem = (core % 8).convert_to<unsigned>();
  if (rem != 1) {
    return VerdictTag::Irrational;
  }
  return isqrt(core).exact ? VerdictTag::Rational : VerdictTag::Inconclusive;
}

TraceCase theodorus_classify(const Natural& n) {
  if (n == 0) {
    throw std::domain_error("theodorus_classify: n must be >= 1");
  }
  TraceCase tc{n, {}, Inconclusive{}};

  Natural core = n;
  Natural factor = 1;
  while (core % 4 == 0) {
    Natural reduced = core / 4;
    tc.steps.push_back({StepKind::Reduce, core, reduced});
    core = std::move(reduced);
    factor *= 2;
  }

  const Natural core_parity = core % 2;
  tc.steps.push_back({StepKind::ParityCheck, core, core_parity});
  if (core_parity == 0) {
    tc.verdict = ProvedIrrational{irrational_reason(core, factor, TwiceOddCore{})};
    return tc;
  }

  const Mod8Class rem = mod8(core);
  tc.steps.push_back({StepKind::Mod8Check, core, Natural(rem.value())});
  if (rem.value() != 1) {
    tc.verdict =
        ProvedIrrational{irrational_reason(core, factor, OddRemainderNot1{rem})};
    return tc;
  }

  IsqrtResult s = isqrt(core);
  tc.steps.push_back({StepKind::SquareTest, core, s.root});
  if (s.exact) {
    tc.verdict = ProvedRational{factor * s.root};
  } else {
    tc.verdict = Inconclusive{};
  }
  return tc;
}

NaiveClassification naive_boys_tree(const Natural& n) {
  TraceCase tc = theodorus_classify(n);
  if (std::holds_alternative<Inconclusive>(tc.verdict)) {
    return {ProvedIrrational{NotASquare{}}, true};
  }
  return {std::move(tc.verdict), false};
}

OddWitness odd_witness_reduction(const Natural& p, const Natural& q) {
  if (q == 0) {
    throw std::domain_error("odd_witness_reduction: q must be >= 1");
  }
  Natural rp = p;
  Natural rq = q;
  while (rp % 2 == 0 && rq % 2 == 0) {
    rp /= 2;
    rq /= 2;
  }
  return {std::move(rp), std::move(rq)};
}

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Subtract: return "subtract";
    case StepKind::ParityCheck: return "parity_check";
    case StepKind::Mod8Check: return "mod8_check";
    case StepKind::SquareTest: return "square_test";
    case StepKind::Reduce: return "reduce";
  }
  return "unknown";
}

namespace {

struct AnnotationVisitor {
  std::string operator()(const ProvedRational& v) const {
    return "rational: root " + v.root.str();
  }
  std::string operator()(const ProvedIrrational& v) const {
    return std::visit(*this, v.reason);
  }
  std::string operator()(const Inconclusive&) const {
    return "inconclusive: 1 mod 8 but not a perfect square";
  }
  std::string operator()(const OddRemainderNot1& r) const {
    return "irrational: odd remainder " + std::to_string(r.remainder.value()) +
           " is not 1";
  }
  std::string operator()(const TwiceOddCore&) const {
    return "irrational: twice an odd number";
  }
  std::string operator()(const ReducedTo& r) const {
    return "irrational: reduces to " + r.factor.str() + "^2 * " + r.core.str();
  }
  std::string operator()(const NotASquare&) const {
    return "irrational: not a perfect square (asserted)";
  }
};

struct ReasonLabelVisitor {
  std::string operator()(const OddRemainderNot1&) const {
    return "odd_remainder_not_1";
  }
  std::string operator()(const TwiceOddCore&) const { return "twice_odd_core"; }
  std::string operator()(const ReducedTo& r) const {
    return "reduced_to core=" + r.core.str() + " factor=" + r.factor.str();
  }
  std::string operator()(const NotASquare&) const { return "not_a_square"; }
};

}  // namespace

std::string verdict_annotation(const Verdict& v) {
  return std::visit(AnnotationVisitor{}, v);
}

std::string verdict_label(const Verdict& v) {
  switch (tag_of(v)) {
    case VerdictTag::Rational: return "proved_rational";
    case VerdictTag::Irrational: return "proved_irrational";
    case VerdictTag::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string reason_label(const Verdict& v) {
  if (const auto* irr = std::get_if<ProvedIrrational>(&v)) {
    return std::visit(ReasonLabelVisitor{}, irr->reason);
  }
  if (const auto* rat = std::get_if<ProvedRational>(&v)) {
    return "root=" + rat->root.str();
  }
  return "";
}

}  // namespace theo
