#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mf/module.hpp"
#include "mf/report.hpp"

namespace mf {

// End(M_R) as an explicit finite ring: element i is the i-th endomorphism in
// hom enumeration order (so 0 is the zero map), addition is pointwise and
// multiplication is composition, (s t)(m) = s(t(m)). Requires |M| <= 256
// (SizeExceeded) and M != 0 (TrivialRing).
class EndoRing {
 public:
  explicit EndoRing(const FiniteModule& m);

  const FiniteModule& module() const;
  const FiniteRing& ring() const;
  std::size_t size() const;
  const ModuleHom& endomorphism(Elem s) const;
  Elem apply(Elem s, Elem m) const { return endomorphism(s)(m); }
  Elem index_of(const std::vector<Elem>& map) const;
  Submodule image(Elem s) const;  // s(M)

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// M is M-projective: every hom M -> M/K lifts along M -> M/K. Exhaustive.
bool is_quasi_projective(const EndoRing& e);
// The surjection R^t -> M on a generating set splits.
bool is_projective(const FiniteModule& m);

struct SplitEpiResult {
  bool split = false;     // pi_2 s : M -> (1-e)M has a section
  bool sum_full = false;  // eE + sE = E
};

// Decides both sides independently; EquivalenceViolation if they differ.
SplitEpiResult split_epi_equivalence(const EndoRing& e, Elem idempotent, Elem s);
// Every (idempotent, s) pair.
Report split_epi_sweep(const EndoRing& e);

// Idempotents e <-> decompositions M = e(M) + (1-e)(M): each pair is direct
// and distinct idempotents give distinct pairs.
Report decomposition_check(const EndoRing& e);

struct SummandFamilies {
  std::vector<Submodule> split;            // F: e(M) with eE + sE = E
  std::vector<Submodule> split_minimal;
  bool split_minima_isomorphic = false;
  bool quasi_projective = false;
  std::vector<Submodule> onto;             // submodules N with N + s(M) = M
  std::vector<Submodule> onto_summands;    // the direct summands among them
  std::vector<Submodule> onto_summands_minimal;
  bool families_equal = false;             // split == onto_summands
  bool minima_isomorphic = false;
  bool minima_minimal_in_onto = false;
};

// Split-summand family and its minima; valid for every M.
SummandFamilies split_summand_family(const EndoRing& e, Elem s);
// Adds the onto and onto-summand families. HypothesisViolated unless M is
// quasi-projective.
SummandFamilies minimal_summands(const EndoRing& e, Elem s);
Report minimal_summands_report(const EndoRing& e, Elem s);

// For quasi-projective M, the four correspondences between submodules g(M)
// and right ideals gE. HypothesisViolated when M is not quasi-projective,
// EquivalenceViolation on any disagreement.
Report endo_correspondence_suite(const EndoRing& e, Elem s);

// For projective M and every idempotent e: e(M) -> M/s(M) is a projective
// cover iff eE -> E/sE is one. HypothesisViolated unless M is projective.
Report cover_transfer_check(const EndoRing& e, Elem s);

struct EndoCorpusEntry {
  std::string label;
  FiniteModule module;
};

// Small modules over the example rings: regular modules, summands eR,
// quotients and semisimple sums, plus one module that is not quasi-projective
// (Z/4 + Z/2 over Z/4, listed last).
std::vector<EndoCorpusEntry> endo_corpus();

}  // namespace mf
