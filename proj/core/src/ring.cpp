#include "mf/ring.hpp"

#include <random>

#include "mf/error.hpp"
#include "mf/limits.hpp"

namespace mf {

namespace {

constexpr std::size_t kTableLimit = 256;

std::string triple_text(const RingStructure& s, Elem a, Elem b, Elem c) {
  return "(" + s.format(a) + ", " + s.format(b) + ", " + s.format(c) + ")";
}

void check_triple(const RingStructure& s, Elem a, Elem b, Elem c) {
  const Elem ab = s.mul(a, b);
  const Elem bc = s.mul(b, c);
  if (s.mul(ab, c) != s.mul(a, bc)) {
    throw AxiomViolation("multiplication not associative at " + triple_text(s, a, b, c));
  }
  if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))) {
    throw AxiomViolation("addition not associative at " + triple_text(s, a, b, c));
  }
  if (s.mul(a, s.add(b, c)) != s.add(ab, s.mul(a, c))) {
    throw AxiomViolation("left distributivity fails at " + triple_text(s, a, b, c));
  }
  if (s.mul(s.add(a, b), c) != s.add(s.mul(a, c), bc)) {
    throw AxiomViolation("right distributivity fails at " + triple_text(s, a, b, c));
  }
}

void check_single(const RingStructure& s, Elem a) {
  if (s.add(0, a) != a) throw AxiomViolation("index 0 is not the additive identity");
  if (s.add(a, s.neg(a)) != 0) throw AxiomViolation("negation fails at " + s.format(a));
  const Elem one = s.one();
  if (s.mul(one, a) != a || s.mul(a, one) != a) {
    throw AxiomViolation("identity fails at " + s.format(a));
  }
}

}  // namespace

void verify_ring_axioms(const RingStructure& s, std::size_t exhaustive_limit,
                        std::size_t samples) {
  const std::size_t n = s.order();
  if (n < 2 || s.one() == 0) {
    throw AxiomViolation("ring " + s.name() + " has 1 = 0");
  }
  for (Elem a = 0; a < n; ++a) check_single(s, a);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (s.add(a, b) != s.add(b, a)) {
        throw AxiomViolation("addition not commutative at " + triple_text(s, a, b, 0));
      }
      if (n > exhaustive_limit) break;
    }
  }
  if (n <= exhaustive_limit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check_triple(s, a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t i = 0; i < samples; ++i) check_triple(s, pick(rng), pick(rng), pick(rng));
  }
  const std::vector<Elem> basis = s.basis();
  for (Elem a : basis)
    for (Elem b : basis)
      for (Elem c : basis) check_triple(s, a, b, c);
}

struct FiniteRing::Data {
  std::shared_ptr<const RingStructure> structure;
  std::string name;
  std::size_t order = 0;
  Elem one = 0;
  std::vector<Elem> add_table;
  std::vector<Elem> mul_table;
  std::vector<Elem> inverse;  // order() marks "not a unit"
  std::vector<Elem> units;
  std::vector<Elem> idempotents;
  ElementSet radical;

  Elem add(Elem a, Elem b) const {
    return add_table.empty() ? structure->add(a, b) : add_table[a * order + b];
  }
  Elem mul(Elem a, Elem b) const {
    return mul_table.empty() ? structure->mul(a, b) : mul_table[a * order + b];
  }
};

FiniteRing::FiniteRing(std::shared_ptr<const RingStructure> structure) {
  auto d = std::make_shared<Data>();
  d->structure = std::move(structure);
  d->name = d->structure->name();
  d->order = d->structure->order();
  require_within(d->order, size_cap(kDefaultRingCap), "ring " + d->name);
  verify_ring_axioms(*d->structure);
  d->one = d->structure->one();
  const std::size_t n = d->order;

  if (n <= kTableLimit) {
    d->add_table.resize(n * n);
    d->mul_table.resize(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        d->add_table[a * n + b] = d->structure->add(a, b);
        d->mul_table[a * n + b] = d->structure->mul(a, b);
      }
    }
  }

  // In a finite ring a one-sided inverse is two-sided; both sides are still
  // checked so the recorded inverse is a genuine two-sided witness.
  const Elem none = static_cast<Elem>(n);
  d->inverse.assign(n, none);
  for (Elem a = 1; a < n; ++a) {
    if (d->inverse[a] != none) continue;
    for (Elem b = 1; b < n; ++b) {
      if (d->mul(a, b) == d->one) {
        if (d->mul(b, a) != d->one) {
          throw AxiomViolation("one-sided inverse for " + d->structure->format(a));
        }
        d->inverse[a] = b;
        d->inverse[b] = a;
        break;
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (d->inverse[a] != none) d->units.push_back(a);
    if (d->mul(a, a) == a) d->idempotents.push_back(a);
  }

  d->radical = ElementSet(n);
  for (Elem x = 0; x < n; ++x) {
    bool quasi_regular = true;
    for (Elem r = 0; r < n && quasi_regular; ++r) {
      const Elem t = d->add(d->one, d->structure->neg(d->mul(x, r)));
      quasi_regular = d->inverse[t] != none;
    }
    if (quasi_regular) d->radical.insert(x);
  }
  d->radical.normalize();
  data_ = std::move(d);
}

std::size_t FiniteRing::size() const { return data_->order; }
Elem FiniteRing::one() const { return data_->one; }
Elem FiniteRing::add(Elem a, Elem b) const { return data_->add(a, b); }
Elem FiniteRing::neg(Elem a) const { return data_->structure->neg(a); }
Elem FiniteRing::mul(Elem a, Elem b) const { return data_->mul(a, b); }
std::string FiniteRing::format(Elem a) const { return data_->structure->format(a); }
const std::string& FiniteRing::name() const { return data_->name; }
const RingStructure& FiniteRing::structure() const { return *data_->structure; }

bool FiniteRing::is_unit(Elem a) const { return data_->inverse[a] != data_->order; }

Elem FiniteRing::inverse(Elem a) const {
  if (!is_unit(a)) throw PreconditionFailed(format(a) + " is not a unit");
  return data_->inverse[a];
}

const std::vector<Elem>& FiniteRing::unit_list() const { return data_->units; }
const std::vector<Elem>& FiniteRing::idempotent_list() const { return data_->idempotents; }
const ElementSet& FiniteRing::radical() const { return data_->radical; }

}  // namespace mf
