#pragma once

#include <functional>
#include <optional>

#include "mf/module.hpp"

namespace mf {

// Commutative square
//   B --lambda--> A
//   |pi_n         |pi_m
//   N --epsilon-> M
struct SquareData {
  ModuleHom lambda;
  ModuleHom pi_n;
  ModuleHom pi_m;
  ModuleHom epsilon;
};

struct SquareResult {
  bool preimage_equals_image = false;  // pi_m^-1(epsilon(N)) = lambda(B)
  bool kernels_match = false;          // lambda(ker pi_n) = ker pi_m
  bool cokernels_iso = false;          // induced coker(lambda) -> coker(epsilon) is bijective
  friend bool operator==(const SquareResult&, const SquareResult&) = default;
};

// Checks the hypotheses (HypothesisViolated naming the failing one), decides
// the three conditions separately and throws EquivalenceViolation if they
// disagree.
SquareResult check_square(const SquareData& square);

// Squares R --a--> R over N = nR inside M = R/xR: pi_M is the projection,
// pi_N sends 1 to n and lambda sends 1 to any a with pi_M(a) = n. Visits one
// square per distinct xR, element n of R/xR and lift a; returns the count.
struct GeneratedSquare {
  Elem x = 0;
  Elem n = 0;
  Elem a = 0;
  SquareData square;
};
std::size_t for_each_generated_square(const FiniteRing& ring,
                                      const std::function<void(const GeneratedSquare&)>& visit);

// Exhaustive: N + L = M forces L = M for every submodule L.
bool is_superfluous(const Submodule& n, const FiniteModule& m);
// Fast path for a submodule of eR given as a set of ring elements: N is
// superfluous in eR iff N is contained in eJ(R).
bool is_superfluous_in_summand(const FiniteRing& ring, Elem e, const RightIdealSet& n);

struct ProjectiveCover {
  Elem idempotent = 0;
  RightIdealSet summand;  // eR
  RightIdealSet kernel;   // eR intersected with I
};

// Cover of R/I of the form eR -> R/I, with e the smallest-index idempotent such
// that eR + I = R and eR cap I lies in eJ(R). Throws NoCover if none exists.
ProjectiveCover projective_cover(const FiniteRing& ring, const RightIdealSet& ideal);

struct CyclicCover {
  ProjectiveCover cover;
  FiniteModule source;  // eR
  ModuleHom map;        // restriction of R -> R/xR, verified onto with superfluous kernel
};
CyclicCover projective_cover_cyclic(const FiniteRing& ring, Elem x);

// Cover of an arbitrary cyclic module: with g the smallest generator, the cover
// of R/ann(g) followed by r -> g*r. Throws NotCyclic.
struct ModuleCover {
  Elem generator = 0;
  ProjectiveCover cover;
  FiniteModule source;
  ModuleHom map;
};
ModuleCover cover_of_cyclic(const FiniteModule& m);

// pi: R_R -> M surjective. True iff pi^-1(N) is isomorphic to R_R.
bool is_pi_exact(const Submodule& n, const ModuleHom& pi);

struct ExactnessResult {
  bool exact = false;
  Elem cover_m = 0;        // idempotent covering M
  Elem cover_n = 0;        // idempotent covering N
  Elem lambda_image = 0;   // lambda(cover_n) in cover_m R
  SquareResult square;
};
ExactnessResult is_exact_submodule(const Submodule& n, const FiniteModule& m);

struct PresentationResult {
  bool presented = false;
  std::optional<Elem> x;
  std::optional<ModuleHom> isomorphism;  // R/xR -> M
};
PresentationResult is_cyclically_presented(const FiniteModule& m);

}  // namespace mf
