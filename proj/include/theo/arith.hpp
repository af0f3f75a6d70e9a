#pragma once

// Exact integer primitives: integer square root, residues mod 2 and mod 8,
// triangular numbers and the gnomon identity (2k+1)^2 = 8*T(k) + 1.

#include "theo/natural.hpp"

namespace theo {

enum class Parity { Even, Odd };

Parity parity(const Natural& n);

// Residue class of an integer modulo 8.
class Mod8Class {
 public:
  explicit Mod8Class(unsigned remainder);

  unsigned value() const { return rem_; }

  friend bool operator==(const Mod8Class&, const Mod8Class&) = default;

 private:
  unsigned rem_;
};

Mod8Class mod8(const Natural& n);

struct IsqrtResult {
  Natural root;  // floor(sqrt(n)): root^2 <= n < (root+1)^2
  bool exact;    // root^2 == n
};

// Integer square root by Newton iteration on integers. Exact for any size of
// input; no floating point anywhere.
IsqrtResult isqrt(const Natural& n);

// k(k+1)/2
Natural triangular(const Natural& k);

struct GnomonParts {
  Natural eights;  // number of width-8 rectangles, = triangular(k)
  Natural unit;    // always 1
};

// Decomposition witnessing (2k+1)^2 = 8*triangular(k) + 1: the square of an
// odd number splits into width-8 rectangles plus a single unit square.
GnomonParts gnomon_decompose(const Natural& k);

}  // namespace theo
