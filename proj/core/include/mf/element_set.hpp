#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mf {

// Index of an element in some enumerated carrier (ring or module). Index 0 is
// always the zero element.
using Elem = std::uint32_t;

// A subset of an enumerated carrier, stored both as a sorted member list and
// as a membership mask. `generators` is a witness list: the set is the closure
// of the generators under whatever operations define it (right ideal,
// submodule, ...). Equality ignores the generators.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : mask_(universe, false) {}

  static ElementSet from_mask(std::vector<bool> mask, std::vector<Elem> generators = {});
  static ElementSet from_members(std::size_t universe, std::span<const Elem> members,
                                 std::vector<Elem> generators = {});
  static ElementSet zero(std::size_t universe);
  static ElementSet full(std::size_t universe);

  std::size_t universe() const { return mask_.size(); }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem e) const { return e < mask_.size() && mask_[e]; }
  const std::vector<Elem>& members() const { return members_; }
  const std::vector<bool>& mask() const { return mask_; }
  const std::vector<Elem>& generators() const { return generators_; }
  void set_generators(std::vector<Elem> g) { generators_ = std::move(g); }

  bool is_full() const { return members_.size() == mask_.size(); }
  bool is_zero() const { return members_.size() == 1 && members_[0] == 0; }
  bool subset_of(const ElementSet& other) const;

  // Inserts `e`; returns false if already present.
  bool insert(Elem e);

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.mask_ == b.mask_;
  }
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
    return a.members_ < b.members_;
  }

  // Keeps `members_` sorted after a sequence of `insert` calls.
  void normalize() { std::sort(members_.begin(), members_.end()); }

 private:
  std::vector<bool> mask_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
};

ElementSet set_intersection(const ElementSet& a, const ElementSet& b);

// Additive span helpers shared by rings, modules and the skew-polynomial
// quotient modules. `add` must be the addition of a finite abelian group on
// indices 0..universe-1 with 0 as identity.
namespace detail {

// Extends the subgroup `s` (which must already be a subgroup) to s + <t>.
template <class Add>
void extend_subgroup(ElementSet& s, Elem t, const Add& add) {
  if (s.contains(t)) return;
  const std::vector<Elem> base = s.members();
  Elem multiple = t;
  while (!s.contains(multiple)) {
    for (Elem b : base) s.insert(add(b, multiple));
    multiple = add(multiple, t);
  }
}

template <class Add>
ElementSet additive_span(std::size_t universe, std::span<const Elem> seeds, const Add& add) {
  ElementSet s(universe);
  s.insert(0);
  for (Elem t : seeds) extend_subgroup(s, t, add);
  s.normalize();
  return s;
}

// Smallest subgroup containing `seeds` that is closed under every operator in
// `actions` (each a callable Elem -> Elem that is additive).
template <class Add, class Act>
ElementSet operator_closure(std::size_t universe, std::span<const Elem> seeds, const Add& add,
                            std::size_t action_count, const Act& act) {
  ElementSet s(universe);
  s.insert(0);
  for (Elem t : seeds) extend_subgroup(s, t, add);
  // Members are appended by insert; walk the growing list once.
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    const Elem m = s.members()[i];
    for (std::size_t a = 0; a < action_count; ++a) extend_subgroup(s, act(m, a), add);
  }
  s.normalize();
  return s;
}

// Sum of two subgroups.
template <class Add>
ElementSet subgroup_sum(const ElementSet& a, const ElementSet& b, const Add& add) {
  ElementSet s = a;
  for (Elem t : b.members()) extend_subgroup(s, t, add);
  s.normalize();
  return s;
}

}  // namespace detail
}  // namespace mf
