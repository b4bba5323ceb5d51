#include "mf/reproductions.hpp"

#include <algorithm>

#include "mf/exactness.hpp"
#include "mf/module.hpp"
#include "mf/quat_order.hpp"
#include "mf/ring_ops.hpp"
#include "mf/ring_spec.hpp"

namespace mf {

namespace {

std::string listing(const FiniteRing& ring, const ElementSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.members().size(); ++i) {
    out += (i ? ", " : "") + ring.format(set.members()[i]);
  }
  return out + "}";
}

ElementSet ring_subset(const FiniteRing& ring, std::initializer_list<Elem> members) {
  return ElementSet::from_members(ring.size(), std::vector<Elem>(members));
}

Elem element_with_representative(const FiniteModule& m, std::size_t tuple) {
  Elem i = 0;
  while (m.representative(i) != tuple) ++i;
  return i;
}

}  // namespace

Report reproduce_triangular_example() {
  Report report;
  report.command = "examples reproduce 46";
  report.input = "tri:2:zmod:2";
  const FiniteRing ring = build_ring("tri:2:zmod:2");
  // Index a*4 + b*2 + c for [[a,b],[0,c]].
  constexpr Elem kE22 = 1, kE12 = 2, kE11 = 4;
  const std::vector<Elem> display_order = {0, 2, 4, 6, 1, 3, 5, 7};

  const RightIdealSet m_ideal = principal_right_ideal(ring, kE11);
  const RightIdealSet n_ideal = principal_right_ideal(ring, kE12);
  report.lines.push_back("M_R = " + ring.format(kE11) + "R = " + listing(ring, m_ideal));
  report.lines.push_back("N_R = " + ring.format(kE12) + "R = " + listing(ring, n_ideal));

  bool ideals_match = true;
  const std::vector<ElementSet> expected = {
      ring_subset(ring, {0}),          n_ideal,
      m_ideal,                         m_ideal,
      ring_subset(ring, {0, 1}),       ring_subset(ring, {0, 3}),
      ElementSet::full(ring.size()),   ElementSet::full(ring.size())};
  std::vector<RightIdealSet> size_four;
  for (std::size_t i = 0; i < display_order.size(); ++i) {
    const RightIdealSet ideal = principal_right_ideal(ring, display_order[i]);
    report.lines.push_back(ring.format(display_order[i]) + "R = " + listing(ring, ideal));
    ideals_match = ideals_match && ideal == expected[i];
    if (ideal.size() == 4) size_four.push_back(ideal);
  }
  report.add_bool("eight principal right ideals", ideals_match);

  const FiniteModule m = ideal_module(ring, m_ideal, "M_R");
  const Submodule n = cyclic_submodule(m, element_with_representative(m, kE12));
  const ExactnessResult exact = is_exact_submodule(n, m);
  report.add_bool("N_R is an exact submodule of M_R", exact.exact,
                  "covers " + ring.format(exact.cover_n) + "R -> N_R, " +
                      ring.format(exact.cover_m) + "R -> M_R");

  const FiniteModule n_module = ideal_module(ring, n_ideal, "N_R");
  const FiniteModule e22 = ideal_module(ring, principal_right_ideal(ring, kE22), "E22R");
  report.add_bool("N_R is isomorphic to E22 R", is_isomorphic(n_module, e22).isomorphic);

  const FiniteModule quotient(
      ring, 1, std::vector<std::size_t>(m_ideal.members().begin(), m_ideal.members().end()),
      std::vector<std::size_t>(n_ideal.members().begin(), n_ideal.members().end()), "M_R/N_R",
      "N_R");
  std::string classes = "M_R/N_R = {";
  for (Elem i = 0; i < quotient.size(); ++i) classes += (i ? ", " : "") + quotient.format(i);
  report.lines.push_back(classes + "}");

  const bool xr_is_m = !size_four.empty() &&
                       std::all_of(size_four.begin(), size_four.end(),
                                   [&](const RightIdealSet& i) { return i == m_ideal; });
  report.add_bool("every xR with |xR| = 4 equals M_R", xr_is_m);
  const FiniteModule r_mod_x = quotient_module(ring, m_ideal, "R/xR");
  std::string r_classes = "R/xR = {";
  for (Elem i = 0; i < r_mod_x.size(); ++i) r_classes += (i ? ", " : "") + r_mod_x.format(i);
  report.lines.push_back(r_classes + "}");

  const RightIdealSet ann_quotient = annihilator(quotient);
  const RightIdealSet ann_r_mod_x = annihilator(r_mod_x);
  report.lines.push_back("ann(M_R/N_R) = " + listing(ring, ann_quotient));
  report.lines.push_back("ann(R/xR) = " + listing(ring, ann_r_mod_x));
  report.add_bool("ann(M_R/N_R) has the four listed elements",
                  ann_quotient == ring_subset(ring, {0, kE22, kE12, kE12 + kE22}));
  report.add_bool("ann(R/xR) = M_R", ann_r_mod_x == m_ideal);

  const PresentationResult presented = is_cyclically_presented(quotient);
  report.lines.push_back(presented.presented ? "M_R/N_R is cyclically presented"
                                             : "M_R/N_R not cyclically presented");
  report.add_bool("M_R/N_R not cyclically presented", !presented.presented,
                  presented.presented ? "presented by " + ring.format(*presented.x) : "");
  return report;
}

Report reproduce_matrix_dvr_example() {
  Report report;
  report.command = "examples reproduce 45";
  report.input = "mat:2:zmod:9";
  const FiniteRing ring = build_ring("mat:2:zmod:9");
  // Index a*729 + b*81 + c*9 + d for [[a,b],[c,d]].
  constexpr Elem kX = 732, kE22 = 1;
  const CyclicCover cover = projective_cover_cyclic(ring, kX);
  const Elem e = cover.cover.idempotent;
  const RightIdealSet e_radical = left_multiple(ring, e, ring.radical());
  report.lines.push_back("x = " + ring.format(kX) + ", |xR| = " +
                         std::to_string(principal_right_ideal(ring, kX).size()));
  report.lines.push_back("cover idempotent e = " + ring.format(e) + ", |eR| = " +
                         std::to_string(cover.cover.summand.size()));
  report.lines.push_back("|ker| = " + std::to_string(cover.cover.kernel.size()) +
                         ", |eJ(R)| = " + std::to_string(e_radical.size()));
  report.add_bool("cover idempotent is E22", e == kE22, ring.format(e));
  report.add_bool("kernel of the cover equals eJ(R)", cover.cover.kernel == e_radical);

  const Submodule kernel = cover.map.kernel();
  report.add_bool("kernel is superfluous in eR", is_superfluous(kernel, cover.source));
  const bool iso = is_isomorphic(cover.source, regular_module(ring)).isomorphic;
  report.add_bool("eR is not isomorphic to R_R", !iso);
  return report;
}

Report reproduce_quaternion_example() {
  Report report = verify_presentation_dependence();
  report.command = "examples reproduce 36";
  return report;
}

}  // namespace mf
