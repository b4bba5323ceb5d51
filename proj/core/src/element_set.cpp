#include "mf/element_set.hpp"

namespace mf {

ElementSet ElementSet::from_mask(std::vector<bool> mask, std::vector<Elem> generators) {
  ElementSet s;
  s.mask_ = std::move(mask);
  for (std::size_t i = 0; i < s.mask_.size(); ++i) {
    if (s.mask_[i]) s.members_.push_back(static_cast<Elem>(i));
  }
  s.generators_ = std::move(generators);
  return s;
}

ElementSet ElementSet::from_members(std::size_t universe, std::span<const Elem> members,
                                    std::vector<Elem> generators) {
  ElementSet s(universe);
  for (Elem m : members) s.insert(m);
  s.normalize();
  s.generators_ = std::move(generators);
  return s;
}

ElementSet ElementSet::zero(std::size_t universe) {
  ElementSet s(universe);
  s.insert(0);
  return s;
}

ElementSet ElementSet::full(std::size_t universe) {
  return from_mask(std::vector<bool>(universe, true));
}

bool ElementSet::insert(Elem e) {
  if (mask_[e]) return false;
  mask_[e] = true;
  members_.push_back(e);
  return true;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (Elem m : members_) {
    if (!other.contains(m)) return false;
  }
  return true;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet s(a.universe());
  for (Elem m : a.members()) {
    if (b.contains(m)) s.insert(m);
  }
  return s;
}

}  // namespace mf
