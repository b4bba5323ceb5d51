#pragma once

#include <variant>

#include "mf/integer_ring.hpp"
#include "mf/report.hpp"
#include "mf/ring.hpp"

namespace mf {

using RingHandle = std::variant<FiniteRing, IntegerRing>;

Verdict is_vnr(const RingHandle& ring);

// Every R/xR has a projective cover. Finite rings are scanned over all x,
// sharing work between elements with equal xR; Falsified carries x.
Verdict has_all_cyclic_covers(const FiniteRing& ring);

// Computes "every cyclically presented module has a cover" and "R/J regular
// with idempotents lifting" independently and throws EquivalenceViolation
// if they disagree.
Report covers_vs_regularity(const RingHandle& ring);

}  // namespace mf
