#include "theo/arith.hpp"

#include <stdexcept>

namespace theo {

namespace {

void require_nonnegative(const Natural& n, const char* where) {
  if (n < 0) {
    throw std::domain_error(std::string(where) + ": negative input " + n.str());
  }
}

}  // namespace

Parity parity(const Natural& n) {
  require_nonnegative(n, "parity");
  return (n % 2) == 1 ? Parity::Odd : Parity::Even;
}

Mod8Class::Mod8Class(unsigned remainder) : rem_(remainder) {
  if (remainder >= 8) {
    throw std::domain_error("mod-8 remainder out of range");
  }
}

Mod8Class mod8(const Natural& n) {
  require_nonnegative(n, "mod8");
  return Mod8Class((n % 8).convert_to<unsigned>());
}

IsqrtResult isqrt(const Natural& n) {
  require_nonnegative(n, "isqrt");
  if (n == 0) {
    return {Natural(0), true};
  }
  // Start above the root and descend; Newton on integers is monotone from
  // above, so the first non-decreasing step lands on floor(sqrt(n)).
  const unsigned bits = boost::multiprecision::msb(n);
  Natural x = Natural(1) << (bits / 2 + 1);
  for (;;) {
    Natural next = (x + n / x) >> 1;
    if (next >= x) {
      break;
    }
    x = next;
  }
  return {x, x * x == n};
}

Natural triangular(const Natural& k) {
  require_nonnegative(k, "triangular");
  return k * (k + 1) / 2;
}

GnomonParts gnomon_decompose(const Natural& k) {
  return {triangular(k), Natural(1)};
}

}  // namespace theo
