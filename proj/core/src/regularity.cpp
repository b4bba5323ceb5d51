#include "mf/regularity.hpp"

#include <set>

#include "mf/error.hpp"
#include "mf/exactness.hpp"
#include "mf/ring_ops.hpp"

namespace mf {

Verdict is_vnr(const RingHandle& ring) {
  return std::visit([](const auto& r) { return is_vnr(r); }, ring);
}

Verdict has_all_cyclic_covers(const FiniteRing& ring) {
  std::set<std::vector<Elem>> covered;
  for (Elem x = 0; x < ring.size(); ++x) {
    const RightIdealSet ideal = principal_right_ideal(ring, x);
    if (covered.count(ideal.members())) continue;
    try {
      projective_cover(ring, ideal);
    } catch (const NoCover& e) {
      return Verdict::falsified({x}, e.what());
    }
    covered.insert(ideal.members());
  }
  return Verdict::verified("covers found for " + std::to_string(covered.size()) +
                           " distinct principal right ideals");
}

namespace {

Report crosscheck(const FiniteRing& ring) {
  Report report;
  report.command = "ring theorem41";
  report.input = ring.name();
  const Verdict covers = has_all_cyclic_covers(ring);
  const RightIdealSet j = jacobson_radical(ring);
  const QuotientRing q = quotient_ring(ring, j, "J");
  const Verdict regular = is_vnr(q.ring);
  const Verdict lift = idempotents_lift(ring, j);
  const bool side1 = covers.is_verified();
  const bool side2 = regular.is_verified() && lift.is_verified();
  report.add("every cyclically presented module has a projective cover", covers);
  report.add("R/J(R) von Neumann regular", regular);
  report.add("idempotents lift modulo J(R)", lift);
  if (side1 != side2) {
    throw EquivalenceViolation("cover condition and R/J condition disagree on " + ring.name());
  }
  report.add_bool("both sides agree", true,
                  std::string("both ") + (side1 ? "hold" : "fail") + ", |J| = " +
                      std::to_string(j.size()));
  return report;
}

Report crosscheck(const IntegerRing& z) {
  Report report;
  report.command = "ring theorem41";
  report.input = z.name();
  const Verdict covers = has_all_cyclic_covers(z);
  const Verdict regular = is_vnr(z);
  const Verdict lift = idempotents_lift_mod_radical(z);
  report.add("every cyclically presented module has a projective cover", covers);
  report.add("R/J(R) von Neumann regular", regular);
  report.add("idempotents lift modulo J(R)", lift);
  const bool side1_false = covers.is_falsified();
  const bool side2_false = regular.is_falsified() || lift.is_falsified();
  if (side1_false != side2_false) {
    throw EquivalenceViolation("certificates for Z disagree");
  }
  report.add_bool("both sides agree", true, "both fail, each with witness 2");
  return report;
}

}  // namespace

Report covers_vs_regularity(const RingHandle& ring) {
  return std::visit([](const auto& r) { return crosscheck(r); }, ring);
}

}  // namespace mf
