#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mf/element_set.hpp"
#include "mf/ring.hpp"
#include "mf/ring_ops.hpp"

namespace mf {

using Submodule = ElementSet;

// A finite right module presented as a subquotient S/Q of R^k, where S and Q
// are submodules of the free module R^k and Q is contained in S. Tuples of
// R^k are identified by their base-|R| index (first coordinate most
// significant). Module elements are the classes of S/Q, indexed in order of
// their smallest tuple, so index 0 is zero.
class FiniteModule {
 public:
  // S/Q from explicit member lists of tuple indices. Both must be submodules.
  FiniteModule(FiniteRing ring, std::size_t rank, const std::vector<std::size_t>& s_members,
               const std::vector<std::size_t>& q_members, std::string name,
               std::string q_label = "K");

  const FiniteRing& ring() const;
  std::size_t size() const;
  const std::string& name() const;
  std::size_t rank() const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem act(Elem m, Elem r) const;
  std::string format(Elem m) const;

  // Smallest tuple of the class, and its coordinates in R.
  std::size_t representative(Elem m) const;
  std::vector<Elem> coordinates(Elem m) const;
  // Class of a tuple in S; throws PreconditionFailed for tuples outside S.
  Elem class_of(std::size_t tuple) const;
  bool in_carrier(std::size_t tuple) const;

  const std::vector<std::size_t>& s_members() const;
  const std::vector<std::size_t>& q_members() const;

  // For R/I built by quotient_module: the ideal I.
  const std::optional<RightIdealSet>& quotient_ideal() const;
  void set_quotient_ideal(RightIdealSet ideal);

  bool same_as(const FiniteModule& other) const { return data_ == other.data_; }

 private:
  struct Data;
  std::shared_ptr<Data> data_;
};

// Module axioms on all (m, m', r) and (m, r, s) triples when the count is at
// most 2^20, otherwise on a fixed-seed sample. Throws AxiomViolation.
void verify_module_axioms(const FiniteModule& m);

FiniteModule regular_module(const FiniteRing& ring);
FiniteModule ideal_module(const FiniteRing& ring, const RightIdealSet& ideal,
                          const std::string& name);
FiniteModule quotient_module(const FiniteRing& ring, const RightIdealSet& ideal,
                             const std::string& name);
FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b);

class ModuleHom {
 public:
  ModuleHom(FiniteModule source, FiniteModule target, std::vector<Elem> map);

  const FiniteModule& source() const { return source_; }
  const FiniteModule& target() const { return target_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(Elem m) const { return map_[m]; }

  Submodule image() const;
  Submodule kernel() const;
  Submodule image_of(const Submodule& s) const;
  Submodule preimage_of(const Submodule& s) const;
  bool is_injective() const;
  bool is_surjective() const;
  // Additive and equivariant on every pair; the constructor does not check.
  bool is_homomorphism() const;

  friend bool operator==(const ModuleHom& a, const ModuleHom& b) { return a.map_ == b.map_; }

 private:
  FiniteModule source_;
  FiniteModule target_;
  std::vector<Elem> map_;
};

ModuleHom compose(const ModuleHom& outer, const ModuleHom& inner);
ModuleHom identity_hom(const FiniteModule& m);
ModuleHom zero_hom(const FiniteModule& source, const FiniteModule& target);

struct CyclicModule {
  FiniteModule module;
  ModuleHom projection;  // R_R -> R/xR
};

CyclicModule cyclic_module(const FiniteRing& ring, Elem x);
// R/I with its canonical surjection from R_R.
CyclicModule cyclic_quotient(const FiniteRing& ring, const RightIdealSet& ideal,
                             const std::string& name);

// Submodule generated by `gens`.
Submodule generated_submodule(const FiniteModule& m, const std::vector<Elem>& gens);
Submodule cyclic_submodule(const FiniteModule& m, Elem g);
Submodule submodule_sum(const FiniteModule& m, const Submodule& a, const Submodule& b);
bool is_submodule(const FiniteModule& m, const ElementSet& set);

// Every submodule, sorted by (size, members). Throws SizeExceeded when |M|
// exceeds the module cap or the lattice exceeds the enumeration cap.
std::vector<Submodule> submodules(const FiniteModule& m);

// The submodule viewed as a module, with its inclusion into `m`.
struct SubmoduleEmbedding {
  FiniteModule module;
  ModuleHom inclusion;
};
SubmoduleEmbedding submodule_module(const FiniteModule& m, const Submodule& n,
                                    const std::string& name);

// M/N with the canonical surjection.
struct QuotientModule {
  FiniteModule module;
  ModuleHom projection;
};
QuotientModule quotient_by(const FiniteModule& m, const Submodule& n, const std::string& name);

// Minimal generating set found greedily (smallest index outside the current span).
std::vector<Elem> generating_set(const FiniteModule& m);
// Smallest m with mR = M, if any.
std::optional<Elem> cyclic_generator(const FiniteModule& m);
// {r : g*r = 0}
RightIdealSet element_annihilator(const FiniteModule& m, Elem g);

// Enumerates every homomorphism M -> N in lexicographic order of the images
// of generating_set(M), so the zero map comes first. The visitor returns
// false to stop. Throws SizeExceeded if |N|^t exceeds the enumeration cap.
void for_each_hom(const FiniteModule& source, const FiniteModule& target,
                  const std::function<bool(const ModuleHom&)>& visit);
std::vector<ModuleHom> hom_set(const FiniteModule& source, const FiniteModule& target);

// Hom from R_R determined by 1 -> m.
ModuleHom hom_from_regular(const FiniteModule& regular, const FiniteModule& target, Elem image);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<ModuleHom> witness;
};
IsomorphismResult is_isomorphic(const FiniteModule& a, const FiniteModule& b);

// {r : m*r = 0 for all m}; AxiomViolation if it fails to be two-sided for a
// module built as R/I.
RightIdealSet annihilator(const FiniteModule& m);

}  // namespace mf
