#include "mf/ring_ops.hpp"

#include "mf/error.hpp"

namespace mf {

namespace {

class QuotientStructure final : public RingStructure {
 public:
  QuotientStructure(FiniteRing parent, std::vector<Elem> projection,
                    std::vector<Elem> representative, std::string label)
      : parent_(std::move(parent)),
        projection_(std::move(projection)),
        representative_(std::move(representative)),
        label_(std::move(label)) {}

  std::size_t order() const override { return representative_.size(); }
  Elem add(Elem a, Elem b) const override {
    return projection_[parent_.add(representative_[a], representative_[b])];
  }
  Elem neg(Elem a) const override { return projection_[parent_.neg(representative_[a])]; }
  Elem mul(Elem a, Elem b) const override {
    return projection_[parent_.mul(representative_[a], representative_[b])];
  }
  Elem one() const override { return projection_[parent_.one()]; }
  std::string format(Elem a) const override {
    return parent_.format(representative_[a]) + "+" + label_;
  }
  std::string name() const override { return parent_.name() + "/" + label_; }

 private:
  FiniteRing parent_;
  std::vector<Elem> projection_;
  std::vector<Elem> representative_;
  std::string label_;
};

auto ring_add(const FiniteRing& ring) {
  return [&ring](Elem a, Elem b) { return ring.add(a, b); };
}

}  // namespace

std::vector<Elem> units(const FiniteRing& ring) { return ring.unit_list(); }
std::vector<Elem> idempotents(const FiniteRing& ring) { return ring.idempotent_list(); }

bool is_nilpotent(const FiniteRing& ring, Elem a) {
  Elem power = a;
  for (std::size_t k = 0; k <= ring.size(); ++k) {
    if (power == 0) return true;
    power = ring.mul(power, a);
  }
  return false;
}

RightIdealSet jacobson_radical(const FiniteRing& ring) {
  RightIdealSet radical = ring.radical();
  if (!is_right_ideal(ring, radical)) throw AxiomViolation("radical of " + ring.name() + " is not a right ideal");
  if (auto bad = two_sided_violation(ring, radical)) {
    throw AxiomViolation("radical of " + ring.name() + " is not two-sided");
  }
  for (Elem j : radical.members()) {
    if (!is_nilpotent(ring, j)) {
      throw AxiomViolation("radical element " + ring.format(j) + " is not nilpotent");
    }
  }
  if (!radical.is_zero()) {
    const QuotientRing q = quotient_ring(ring, radical, "J");
    if (!q.ring.radical().is_zero()) {
      throw AxiomViolation("R/J(R) has nonzero radical for " + ring.name());
    }
  }
  std::vector<Elem> gens;
  {
    ElementSet span(ring.size());
    span.insert(0);
    for (Elem j : radical.members()) {
      if (span.contains(j)) continue;
      gens.push_back(j);
      span = right_ideal(ring, gens);
    }
  }
  radical.set_generators(std::move(gens));
  return radical;
}

RightIdealSet right_ideal(const FiniteRing& ring, std::span<const Elem> generators) {
  std::vector<Elem> seeds;
  seeds.reserve(generators.size() * ring.size());
  for (Elem g : generators) {
    for (Elem r = 0; r < ring.size(); ++r) seeds.push_back(ring.mul(g, r));
  }
  ElementSet ideal = detail::additive_span(ring.size(), seeds, ring_add(ring));
  ideal.set_generators({generators.begin(), generators.end()});
  return ideal;
}

RightIdealSet principal_right_ideal(const FiniteRing& ring, Elem x) {
  const Elem g[] = {x};
  return right_ideal(ring, g);
}

RightIdealSet principal_left_ideal(const FiniteRing& ring, Elem x) {
  ElementSet ideal(ring.size());
  for (Elem r = 0; r < ring.size(); ++r) ideal.insert(ring.mul(r, x));
  ideal.normalize();
  ideal.set_generators({x});
  return ideal;
}

RightIdealSet ideal_sum(const FiniteRing& ring, const RightIdealSet& a, const RightIdealSet& b) {
  ElementSet s = detail::subgroup_sum(a, b, ring_add(ring));
  std::vector<Elem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  s.set_generators(std::move(gens));
  return s;
}

RightIdealSet left_multiple(const FiniteRing& ring, Elem x, const RightIdealSet& ideal) {
  ElementSet s(ring.size());
  for (Elem j : ideal.members()) s.insert(ring.mul(x, j));
  s.normalize();
  return s;
}

bool is_right_ideal(const FiniteRing& ring, const ElementSet& set) {
  if (!set.contains(0)) return false;
  for (Elem a : set.members()) {
    for (Elem b : set.members()) {
      if (!set.contains(ring.add(a, b))) return false;
    }
    for (Elem r = 0; r < ring.size(); ++r) {
      if (!set.contains(ring.mul(a, r))) return false;
    }
  }
  return true;
}

std::optional<std::pair<Elem, Elem>> two_sided_violation(const FiniteRing& ring,
                                                         const RightIdealSet& ideal) {
  for (Elem r = 0; r < ring.size(); ++r) {
    for (Elem i : ideal.members()) {
      if (!ideal.contains(ring.mul(r, i))) return std::make_pair(r, i);
    }
  }
  return std::nullopt;
}

CancellationResult is_left_cancellative(const FiniteRing& ring, Elem a) {
  if (a == 0) return {false, ring.one()};
  for (Elem b = 1; b < ring.size(); ++b) {
    if (ring.mul(a, b) == 0) return {false, b};
  }
  return {true, std::nullopt};
}

CancellationResult is_right_cancellative(const FiniteRing& ring, Elem a) {
  if (a == 0) return {false, ring.one()};
  for (Elem b = 1; b < ring.size(); ++b) {
    if (ring.mul(b, a) == 0) return {false, b};
  }
  return {true, std::nullopt};
}

QuotientRing quotient_ring(const FiniteRing& ring, const RightIdealSet& ideal,
                           const std::string& ideal_label) {
  if (auto bad = two_sided_violation(ring, ideal)) {
    throw NotTwoSided(ring.format(bad->first) + " * " + ring.format(bad->second) +
                      " leaves the ideal");
  }
  const std::size_t n = ring.size();
  const Elem unset = static_cast<Elem>(n);
  std::vector<Elem> projection(n, unset);
  std::vector<Elem> representative;
  for (Elem r = 0; r < n; ++r) {
    if (projection[r] != unset) continue;
    const Elem coset = static_cast<Elem>(representative.size());
    representative.push_back(r);
    for (Elem i : ideal.members()) projection[ring.add(r, i)] = coset;
  }
  if (representative.size() * ideal.size() != n) {
    throw AxiomViolation("coset count mismatch in " + ring.name() + "/" + ideal_label);
  }
  auto structure = std::make_shared<QuotientStructure>(ring, projection, representative,
                                                       ideal_label);
  return QuotientRing{FiniteRing(std::move(structure)), std::move(projection),
                      std::move(representative)};
}

Verdict is_vnr(const FiniteRing& ring) {
  for (Elem a = 0; a < ring.size(); ++a) {
    bool regular = false;
    for (Elem x = 0; x < ring.size() && !regular; ++x) {
      regular = ring.mul(ring.mul(a, x), a) == a;
    }
    if (!regular) {
      return Verdict::falsified({a}, "no x with a*x*a = a for a = " + ring.format(a));
    }
  }
  return Verdict::verified("every element of " + ring.name() + " is regular");
}

Verdict idempotents_lift(const FiniteRing& ring, const RightIdealSet& ideal) {
  const QuotientRing q = quotient_ring(ring, ideal);
  std::vector<bool> lifted(q.ring.size(), false);
  for (Elem e : ring.idempotent_list()) lifted[q.projection[e]] = true;
  for (Elem c : q.ring.idempotent_list()) {
    if (!lifted[c]) {
      return Verdict::falsified({c, q.representative[c]},
                                "idempotent " + q.ring.format(c) + " has no idempotent preimage");
    }
  }
  return Verdict::verified(std::to_string(q.ring.idempotent_list().size()) +
                           " idempotents of the quotient lift");
}

}  // namespace mf
