#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace theo {

// Arbitrary-precision nonnegative integer. Every quantity in this library is
// one of these; negative values are rejected at the parsing boundary and the
// algorithms never produce them.
using Natural = boost::multiprecision::cpp_int;

// Parses a plain decimal string (digits only, no sign, no whitespace).
// Throws std::invalid_argument otherwise.
Natural parse_natural(std::string_view text);

// Checked narrowing for enumeration loops. Throws std::range_error when the
// value does not fit in 64 bits.
std::uint64_t to_u64(const Natural& n);

}  // namespace theo
