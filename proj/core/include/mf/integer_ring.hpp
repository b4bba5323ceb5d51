#pragma once

#include <cstdint>
#include <string>

#include "mf/verdict.hpp"

namespace mf {

// The integers as a witnessed backend: every answer is a Verdict, and a
// Falsified verdict carries an arithmetic certificate that is re-checked when
// it is produced.
struct IntegerRing {
  std::string name() const { return "int"; }
};

// Scans a = 0, 1, -1, 2, -2, ... up to |a| <= bound. a x a = a has an integer
// solution iff a^2 divides a, which is decided exactly.
Verdict is_vnr(const IntegerRing& z, std::int64_t bound = 64);

// Refutes "every R/xR has a projective cover" at x = 2: the idempotents of Z
// are 0 and 1, 0 -> Z/2 is not onto, and for 1 the kernel 2Z is not
// superfluous because 2Z + 3Z = Z with 3Z != Z.
Verdict has_all_cyclic_covers(const IntegerRing& z);

// J(Z) = 0 and the only idempotents are 0 and 1, both lifting trivially.
Verdict idempotents_lift_mod_radical(const IntegerRing& z);

}  // namespace mf
