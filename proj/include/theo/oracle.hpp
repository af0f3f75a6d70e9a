#pragma once

// Ground truth: sqrt(n) is rational exactly when n is a perfect square, plus
// a brute-force search for counterexamples to n*q^2 = p^2 at desk scale.

#include <cstdint>
#include <optional>

#include "theo/natural.hpp"

namespace theo {

struct OracleVerdict {
  std::optional<Natural> root;  // engaged iff sqrt(n) is rational

  bool is_rational() const { return root.has_value(); }

  friend bool operator==(const OracleVerdict&, const OracleVerdict&) = default;
};

// Throws std::domain_error for n = 0.
OracleVerdict oracle_classify(const Natural& n);

struct FalsificationWitness {
  Natural p;
  Natural q;

  friend bool operator==(const FalsificationWitness&,
                         const FalsificationWitness&) = default;
};

// Least q <= bound with n*q^2 a perfect square p^2, if any. Perfect squares
// yield (root, 1); for non-squares the search comes back empty for every
// bound. Deterministic: q ascending, p fixed by the integer square root.
std::optional<FalsificationWitness> falsification_search(const Natural& n,
                                                         std::uint64_t bound);

struct IntegralityComparison {
  bool is_integer_root;
  bool is_rational_root;
};

// The two predicates coincide on integer inputs; having both spelled out
// keeps "sqrt(n) is an integer" and "sqrt(n) is rational" from being
// silently conflated in client code and tests.
IntegralityComparison distinct_from_integrality(const Natural& n);

}  // namespace theo
