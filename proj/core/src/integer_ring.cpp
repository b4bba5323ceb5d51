#include "mf/integer_ring.hpp"

#include <vector>

#include "mf/error.hpp"

namespace mf {

namespace {

bool divides(std::int64_t d, std::int64_t n) { return d == 0 ? n == 0 : n % d == 0; }

// Integer idempotents among |e| <= bound; e^2 = e forces e(e-1) = 0 in a
// domain, so the scan only confirms {0, 1}.
std::vector<std::int64_t> small_idempotents(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t e = -bound; e <= bound; ++e) {
    if (e * e == e) out.push_back(e);
  }
  return out;
}

}  // namespace

Verdict is_vnr(const IntegerRing&, std::int64_t bound) {
  for (std::int64_t k = 0; k <= 2 * bound; ++k) {
    const std::int64_t a = (k % 2 == 1) ? (k + 1) / 2 : -k / 2;
    if (!divides(a * a, a)) {
      // Certificate: a x a = a^2 x is a multiple of a^2, and a is not.
      if (a % (a * a) == 0) throw EquivalenceViolation("divisibility certificate failed");
      return Verdict::falsified(
          {a}, "a*x*a = " + std::to_string(a * a) + "*x has no integer solution equal to " +
                   std::to_string(a) + " since " + std::to_string(a * a) + " does not divide " +
                   std::to_string(a));
    }
  }
  return Verdict::unknown(static_cast<std::uint64_t>(bound),
                          "every |a| <= bound is regular; no decision beyond the bound");
}

Verdict has_all_cyclic_covers(const IntegerRing&) {
  const std::int64_t x = 2;
  const std::vector<std::int64_t> idem = small_idempotents(16);
  if (idem != std::vector<std::int64_t>{0, 1}) {
    throw EquivalenceViolation("unexpected integer idempotents");
  }
  // e = 0: 0 -> Z/2Z misses the class of 1.
  const bool zero_onto = divides(x, 1);
  // e = 1: kernel xZ = 2Z. With L = 3Z: 1 = 2*2 + 3*(-1) so 2Z + 3Z = Z, and 3 does not divide 1.
  const std::int64_t u = 2;
  const std::int64_t v = -1;
  const bool sum_is_whole = x * u + 3 * v == 1;
  const bool l_proper = !divides(3, 1);
  if (zero_onto || !sum_is_whole || !l_proper) {
    throw EquivalenceViolation("cover refutation certificate failed");
  }
  return Verdict::falsified(
      {x}, "R/2R has no projective cover: covers have the form eR -> R/2R with e in {0,1}; "
           "e=0 is not onto; e=1 has kernel 2Z, not superfluous since 2*2 + 3*(-1) = 1 "
           "gives 2Z + 3Z = Z while 3Z != Z");
}

Verdict idempotents_lift_mod_radical(const IntegerRing&) {
  return Verdict::verified("J(Z) = 0, so R/J = R and every idempotent is its own lift");
}

}  // namespace mf
