#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mf/element_set.hpp"
#include "mf/ring.hpp"
#include "mf/verdict.hpp"

namespace mf {

using RightIdealSet = ElementSet;

std::vector<Elem> units(const FiniteRing& ring);
std::vector<Elem> idempotents(const FiniteRing& ring);

// J(R), re-verified: two-sided, every member nilpotent, and J(R/J) = 0.
// Throws AxiomViolation if any of those fail.
RightIdealSet jacobson_radical(const FiniteRing& ring);

RightIdealSet principal_right_ideal(const FiniteRing& ring, Elem x);
RightIdealSet principal_left_ideal(const FiniteRing& ring, Elem x);
RightIdealSet right_ideal(const FiniteRing& ring, std::span<const Elem> generators);
RightIdealSet ideal_sum(const FiniteRing& ring, const RightIdealSet& a, const RightIdealSet& b);
// {x * j : j in J}
RightIdealSet left_multiple(const FiniteRing& ring, Elem x, const RightIdealSet& ideal);

bool is_right_ideal(const FiniteRing& ring, const ElementSet& set);
// Smallest (r, i) with r*i outside the set, if the right ideal is not two-sided.
std::optional<std::pair<Elem, Elem>> two_sided_violation(const FiniteRing& ring,
                                                         const RightIdealSet& ideal);

bool is_nilpotent(const FiniteRing& ring, Elem a);

struct CancellationResult {
  bool cancellative = false;
  std::optional<Elem> witness;  // nonzero b with a*b = 0 (or b*a = 0)
};
CancellationResult is_left_cancellative(const FiniteRing& ring, Elem a);
CancellationResult is_right_cancellative(const FiniteRing& ring, Elem a);

struct QuotientRing {
  FiniteRing ring;
  std::vector<Elem> projection;      // element of R -> coset index
  std::vector<Elem> representative;  // coset index -> smallest element of R in it
};

// R/I with cosets indexed by their smallest representative. Throws
// NotTwoSided with a witness pair when I is only a right ideal.
QuotientRing quotient_ring(const FiniteRing& ring, const RightIdealSet& ideal,
                           const std::string& ideal_label = "I");

// Exhaustive: for every a some x with axa = a. Falsified carries the first a.
Verdict is_vnr(const FiniteRing& ring);

// Every idempotent of R/I is the image of an idempotent of R. Falsified
// carries (coset index, smallest representative).
Verdict idempotents_lift(const FiniteRing& ring, const RightIdealSet& ideal);

}  // namespace mf
