#include "theo/oracle.hpp"

#include <stdexcept>

#include "theo/arith.hpp"

namespace theo {

OracleVerdict oracle_classify(const Natural& n) {
  if (n == 0) {
    throw std::domain_error("oracle_classify: n must be >= 1");
  }
  IsqrtResult s = isqrt(n);
  if (s.exact) {
    return {std::move(s.root)};
  }
  return {std::nullopt};
}

std::optional<FalsificationWitness> falsification_search(const Natural& n,
                                                         std::uint64_t bound) {
  if (n == 0 || bound == 0) {
    throw std::domain_error("falsification_search: n and bound must be >= 1");
  }
  for (std::uint64_t q = 1; q <= bound; ++q) {
    IsqrtResult s = isqrt(n * q * q);
    if (s.exact) {
      return FalsificationWitness{std::move(s.root), Natural(q)};
    }
  }
  return std::nullopt;
}

IntegralityComparison distinct_from_integrality(const Natural& n) {
  if (n == 0) {
    throw std::domain_error("distinct_from_integrality: n must be >= 1");
  }
  return {isqrt(n).exact, oracle_classify(n).is_rational()};
}

}  // namespace theo
