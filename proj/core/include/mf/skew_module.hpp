#pragma once

#include <span>
#include <vector>

#include "mf/element_set.hpp"
#include "mf/report.hpp"
#include "mf/skew_poly.hpp"

namespace mf {

using Submodule = ElementSet;

// The right module R/fR over R = F_q[x; sigma]. A coset is indexed by its
// left-division remainder r (deg r < deg f) as sum idx(r_i) q^i.
class SkewQuotient {
 public:
  explicit SkewQuotient(SkewPoly f);

  const SkewPoly& modulus() const { return f_; }
  std::size_t size() const { return size_; }
  SkewPoly element(Elem i) const;
  Elem index_of(const SkewPoly& r) const;
  Elem add(Elem a, Elem b) const;

  // Generators of the right action: x, then the F_p-basis t^k of F_q.
  std::size_t action_count() const { return actions_.size() / size_; }
  Elem act(Elem m, std::size_t a) const { return actions_[a * size_ + m]; }

  Submodule generated(std::span<const Elem> seeds) const;
  // (gR + fR)/fR
  Submodule image_of_ideal(const SkewPoly& g) const;
  // Every submodule, sorted by (size, members).
  std::vector<Submodule> submodules() const;

 private:
  SkewPoly f_;
  std::size_t size_ = 0;
  std::vector<Elem> actions_;
};

struct DivisorPoset {
  std::vector<Submodule> submodules;
  std::vector<SkewPoly> divisors;     // monic left divisors of f, by degree
  std::vector<std::size_t> matching;  // divisors[i] R / fR = submodules[matching[i]]
  bool bijective = false;
  bool order_preserving = false;
  std::size_t maximal_chains = 0;     // in the Hasse diagram of the submodules
};

// Requires deg f >= 1; SizeExceeded when q^deg f exceeds the module cap.
DivisorPoset divisor_poset(const SkewPoly& f);
Report pi_exact_poset(const SkewPoly& f);

// Monic k with {r : u r in fR} = kR, for u with uR + fR = R.
SkewPoly presentation_kernel(const SkewPoly& f, const SkewPoly& u);

// Requires c != 0 in aR cap bR (PreconditionFailed). Checks aR + bR = dR and,
// inside R/cR, aR/cR + bR/cR = dR/cR with dR/cR isomorphic to R/hR, c = d h.
Report sum_closure_check(const SkewPoly& a, const SkewPoly& b, const SkewPoly& c);

}  // namespace mf
