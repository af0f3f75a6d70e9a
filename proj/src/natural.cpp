#include "theo/natural.hpp"

#include <limits>
#include <stdexcept>

namespace theo {

Natural parse_natural(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty string is not a natural number");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a nonnegative decimal integer: '" +
                                  std::string(text) + "'");
    }
  }
  return Natural(std::string(text));
}

std::uint64_t to_u64(const Natural& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) {
    throw std::range_error("value does not fit in 64 bits: " + n.str());
  }
  return n.convert_to<std::uint64_t>();
}

}  // namespace theo
