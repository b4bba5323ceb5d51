#include "mf/module.hpp"

#include <map>
#include <random>
#include <set>

#include "mf/error.hpp"
#include "mf/limits.hpp"

namespace mf {

namespace {

constexpr std::size_t kTableLimit = std::size_t{1} << 20;
constexpr std::size_t kNotInCarrier = static_cast<std::size_t>(-1);

std::size_t tuple_count(std::size_t n, std::size_t rank, const std::string& what) {
  const std::size_t cap = size_cap(kDefaultEnumerationCap);
  std::size_t total = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    total *= n;
    require_within(total, cap, what + " ambient tuples");
  }
  return total;
}

// Coordinate arithmetic on R^k tuple indices.
class TupleOps {
 public:
  TupleOps(const FiniteRing& ring, std::size_t rank) : ring_(ring), n_(ring.size()), rank_(rank) {}

  std::vector<Elem> decode(std::size_t t) const {
    std::vector<Elem> c(rank_);
    for (std::size_t i = rank_; i-- > 0;) {
      c[i] = static_cast<Elem>(t % n_);
      t /= n_;
    }
    return c;
  }
  std::size_t encode(const std::vector<Elem>& c) const {
    std::size_t t = 0;
    for (Elem x : c) t = t * n_ + x;
    return t;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    if (rank_ == 1) return ring_.add(static_cast<Elem>(a), static_cast<Elem>(b));
    auto x = decode(a);
    const auto y = decode(b);
    for (std::size_t i = 0; i < rank_; ++i) x[i] = ring_.add(x[i], y[i]);
    return encode(x);
  }
  std::size_t neg(std::size_t a) const {
    if (rank_ == 1) return ring_.neg(static_cast<Elem>(a));
    auto x = decode(a);
    for (auto& v : x) v = ring_.neg(v);
    return encode(x);
  }
  std::size_t act(std::size_t a, Elem r) const {
    if (rank_ == 1) return ring_.mul(static_cast<Elem>(a), r);
    auto x = decode(a);
    for (auto& v : x) v = ring_.mul(v, r);
    return encode(x);
  }

 private:
  const FiniteRing& ring_;
  std::size_t n_;
  std::size_t rank_;
};

}  // namespace

struct FiniteModule::Data {
  FiniteRing ring;
  std::size_t rank = 1;
  std::string name;
  std::string q_label;
  std::vector<std::size_t> s_members;
  std::vector<std::size_t> q_members;
  std::vector<std::size_t> class_of;  // per ambient tuple
  std::vector<std::size_t> reps;
  std::vector<Elem> add_table;
  std::vector<Elem> neg_table;
  std::vector<Elem> act_table;
  std::optional<RightIdealSet> quotient_ideal;

  explicit Data(FiniteRing r) : ring(std::move(r)) {}

  TupleOps ops() const { return TupleOps(ring, rank); }
  Elem cls(std::size_t t) const { return static_cast<Elem>(class_of[t]); }
  Elem raw_add(Elem a, Elem b) const { return cls(ops().add(reps[a], reps[b])); }
  Elem raw_neg(Elem a) const { return cls(ops().neg(reps[a])); }
  Elem raw_act(Elem m, Elem r) const { return cls(ops().act(reps[m], r)); }
};

FiniteModule::FiniteModule(FiniteRing ring, std::size_t rank,
                           const std::vector<std::size_t>& s_members,
                           const std::vector<std::size_t>& q_members, std::string name,
                           std::string q_label) {
  auto d = std::make_shared<Data>(std::move(ring));
  d->rank = rank;
  d->name = std::move(name);
  d->q_label = std::move(q_label);
  const std::size_t n = d->ring.size();
  const std::size_t total = tuple_count(n, rank, d->name);
  d->s_members = s_members;
  d->q_members = q_members;
  std::sort(d->s_members.begin(), d->s_members.end());
  std::sort(d->q_members.begin(), d->q_members.end());

  std::vector<bool> in_s(total, false);
  for (std::size_t t : d->s_members) in_s.at(t) = true;
  std::vector<bool> in_q(total, false);
  for (std::size_t t : d->q_members) {
    if (!in_s.at(t)) throw AxiomViolation(d->name + ": Q is not contained in S");
    in_q[t] = true;
  }
  const TupleOps ops(d->ring, rank);
  for (const auto* set : {&d->s_members, &d->q_members}) {
    const auto& mask = set == &d->s_members ? in_s : in_q;
    if (set->empty() || !mask[0]) throw AxiomViolation(d->name + ": subgroup misses zero");
    if (set->size() == total) continue;
    for (std::size_t t : *set) {
      for (Elem r = 0; r < n; ++r) {
        if (!mask[ops.act(t, r)]) throw AxiomViolation(d->name + ": not closed under the action");
      }
    }
  }

  d->class_of.assign(total, kNotInCarrier);
  for (std::size_t s : d->s_members) {
    if (d->class_of[s] != kNotInCarrier) continue;
    const std::size_t c = d->reps.size();
    d->reps.push_back(s);
    for (std::size_t q : d->q_members) {
      const std::size_t t = ops.add(s, q);
      if (!in_s[t]) throw AxiomViolation(d->name + ": S is not closed under addition");
      d->class_of[t] = c;
    }
  }
  if (d->reps.size() * d->q_members.size() != d->s_members.size()) {
    throw AxiomViolation(d->name + ": Q is not a subgroup of S");
  }

  const std::size_t m = d->reps.size();
  if (m * m <= kTableLimit && m * n <= kTableLimit) {
    d->add_table.resize(m * m);
    d->neg_table.resize(m);
    d->act_table.resize(m * n);
    for (Elem a = 0; a < m; ++a) {
      d->neg_table[a] = d->raw_neg(a);
      for (Elem b = 0; b < m; ++b) d->add_table[a * m + b] = d->raw_add(a, b);
      for (Elem r = 0; r < n; ++r) d->act_table[a * n + r] = d->raw_act(a, r);
    }
  }
  data_ = std::move(d);
  verify_module_axioms(*this);
}

const FiniteRing& FiniteModule::ring() const { return data_->ring; }
std::size_t FiniteModule::size() const { return data_->reps.size(); }
const std::string& FiniteModule::name() const { return data_->name; }
std::size_t FiniteModule::rank() const { return data_->rank; }

Elem FiniteModule::add(Elem a, Elem b) const {
  return data_->add_table.empty() ? data_->raw_add(a, b) : data_->add_table[a * size() + b];
}
Elem FiniteModule::neg(Elem a) const {
  return data_->neg_table.empty() ? data_->raw_neg(a) : data_->neg_table[a];
}
Elem FiniteModule::act(Elem m, Elem r) const {
  return data_->act_table.empty() ? data_->raw_act(m, r)
                                  : data_->act_table[m * data_->ring.size() + r];
}

std::string FiniteModule::format(Elem m) const {
  const auto c = coordinates(m);
  std::string text;
  if (c.size() == 1) {
    text = data_->ring.format(c[0]);
  } else {
    text = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) text += ",";
      text += data_->ring.format(c[i]);
    }
    text += ")";
  }
  if (data_->q_members.size() > 1) text += "+" + data_->q_label;
  return text;
}

std::size_t FiniteModule::representative(Elem m) const { return data_->reps.at(m); }
std::vector<Elem> FiniteModule::coordinates(Elem m) const {
  return data_->ops().decode(representative(m));
}

Elem FiniteModule::class_of(std::size_t tuple) const {
  if (!in_carrier(tuple)) {
    throw PreconditionFailed("tuple " + std::to_string(tuple) + " is outside " + name());
  }
  return data_->cls(tuple);
}

bool FiniteModule::in_carrier(std::size_t tuple) const {
  return tuple < data_->class_of.size() && data_->class_of[tuple] != kNotInCarrier;
}

const std::vector<std::size_t>& FiniteModule::s_members() const { return data_->s_members; }
const std::vector<std::size_t>& FiniteModule::q_members() const { return data_->q_members; }

const std::optional<RightIdealSet>& FiniteModule::quotient_ideal() const {
  return data_->quotient_ideal;
}
void FiniteModule::set_quotient_ideal(RightIdealSet ideal) {
  if (size() * ideal.size() != ring().size()) {
    throw AxiomViolation(name() + ": |M| * |I| != |R|");
  }
  data_->quotient_ideal = std::move(ideal);
}

void verify_module_axioms(const FiniteModule& m) {
  const std::size_t size = m.size();
  const FiniteRing& r = m.ring();
  const std::size_t n = r.size();
  auto check = [&](Elem a, Elem b, Elem x, Elem y) {
    if (m.act(m.add(a, b), x) != m.add(m.act(a, x), m.act(b, x)) ||
        m.act(a, r.add(x, y)) != m.add(m.act(a, x), m.act(a, y)) ||
        m.act(a, r.mul(x, y)) != m.act(m.act(a, x), y)) {
      throw AxiomViolation(m.name() + ": module axiom fails at " + m.format(a) + ", " +
                           m.format(b) + ", " + r.format(x) + ", " + r.format(y));
    }
  };
  for (Elem a = 0; a < size; ++a) {
    if (m.act(a, r.one()) != a) throw AxiomViolation(m.name() + ": 1 does not act trivially");
  }
  if (size * size * n <= kTableLimit && size * n * n <= kTableLimit) {
    for (Elem a = 0; a < size; ++a)
      for (Elem x = 0; x < n; ++x) {
        for (Elem b = 0; b < size; ++b) check(a, b, x, x);
        for (Elem y = 0; y < n; ++y) check(a, a, x, y);
      }
    return;
  }
  std::mt19937_64 rng(0x5eedu);
  std::uniform_int_distribution<Elem> pm(0, static_cast<Elem>(size - 1));
  std::uniform_int_distribution<Elem> pr(0, static_cast<Elem>(n - 1));
  for (int i = 0; i < 20000; ++i) check(pm(rng), pm(rng), pr(rng), pr(rng));
}

FiniteModule regular_module(const FiniteRing& ring) {
  std::vector<std::size_t> all(ring.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return FiniteModule(ring, 1, all, {0}, "R_R");
}

FiniteModule ideal_module(const FiniteRing& ring, const RightIdealSet& ideal,
                          const std::string& name) {
  std::vector<std::size_t> s(ideal.members().begin(), ideal.members().end());
  return FiniteModule(ring, 1, s, {0}, name);
}

FiniteModule quotient_module(const FiniteRing& ring, const RightIdealSet& ideal,
                             const std::string& name) {
  std::vector<std::size_t> all(ring.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::size_t> q(ideal.members().begin(), ideal.members().end());
  const auto slash = name.find('/');
  FiniteModule m(ring, 1, all, q, name, slash == std::string::npos ? "K" : name.substr(slash + 1));
  m.set_quotient_ideal(ideal);
  return m;
}

FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b) {
  if (!a.ring().same_as(b.ring())) throw PreconditionFailed("direct sum over different rings");
  const std::size_t n = a.ring().size();
  std::size_t shift = 1;
  for (std::size_t i = 0; i < b.rank(); ++i) shift *= n;
  auto product = [shift](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    std::vector<std::size_t> out;
    out.reserve(x.size() * y.size());
    for (std::size_t s : x)
      for (std::size_t t : y) out.push_back(s * shift + t);
    return out;
  };
  return FiniteModule(a.ring(), a.rank() + b.rank(), product(a.s_members(), b.s_members()),
                      product(a.q_members(), b.q_members()), a.name() + "+" + b.name());
}

ModuleHom::ModuleHom(FiniteModule source, FiniteModule target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.size()) throw PreconditionFailed("hom map has the wrong length");
}

Submodule ModuleHom::image() const { return image_of(Submodule::full(source_.size())); }

Submodule ModuleHom::kernel() const {
  ElementSet k(source_.size());
  for (Elem m = 0; m < map_.size(); ++m) {
    if (map_[m] == 0) k.insert(m);
  }
  return k;
}

Submodule ModuleHom::image_of(const Submodule& s) const {
  ElementSet out(target_.size());
  for (Elem m : s.members()) out.insert(map_[m]);
  out.normalize();
  return out;
}

Submodule ModuleHom::preimage_of(const Submodule& s) const {
  ElementSet out(source_.size());
  for (Elem m = 0; m < map_.size(); ++m) {
    if (s.contains(map_[m])) out.insert(m);
  }
  return out;
}

bool ModuleHom::is_injective() const { return kernel().size() == 1; }
bool ModuleHom::is_surjective() const { return image().is_full(); }

bool ModuleHom::is_homomorphism() const {
  const std::size_t n = source_.ring().size();
  for (Elem a = 0; a < source_.size(); ++a) {
    for (Elem b = 0; b < source_.size(); ++b) {
      if (map_[source_.add(a, b)] != target_.add(map_[a], map_[b])) return false;
    }
    for (Elem r = 0; r < n; ++r) {
      if (map_[source_.act(a, r)] != target_.act(map_[a], r)) return false;
    }
  }
  return true;
}

ModuleHom compose(const ModuleHom& outer, const ModuleHom& inner) {
  std::vector<Elem> map(inner.source().size());
  for (Elem m = 0; m < map.size(); ++m) map[m] = outer(inner(m));
  return ModuleHom(inner.source(), outer.target(), std::move(map));
}

ModuleHom identity_hom(const FiniteModule& m) {
  std::vector<Elem> map(m.size());
  for (Elem i = 0; i < map.size(); ++i) map[i] = i;
  return ModuleHom(m, m, std::move(map));
}

ModuleHom zero_hom(const FiniteModule& source, const FiniteModule& target) {
  return ModuleHom(source, target, std::vector<Elem>(source.size(), 0));
}

CyclicModule cyclic_quotient(const FiniteRing& ring, const RightIdealSet& ideal,
                             const std::string& name) {
  FiniteModule q = quotient_module(ring, ideal, name);
  FiniteModule reg = regular_module(ring);
  std::vector<Elem> map(ring.size());
  for (Elem r = 0; r < ring.size(); ++r) map[r] = q.class_of(r);
  ModuleHom pi(reg, q, std::move(map));
  return CyclicModule{std::move(q), std::move(pi)};
}

CyclicModule cyclic_module(const FiniteRing& ring, Elem x) {
  return cyclic_quotient(ring, principal_right_ideal(ring, x), "R/xR");
}

Submodule generated_submodule(const FiniteModule& m, const std::vector<Elem>& gens) {
  std::vector<Elem> seeds;
  for (Elem g : gens) {
    for (Elem r = 0; r < m.ring().size(); ++r) seeds.push_back(m.act(g, r));
  }
  Submodule s = detail::additive_span(m.size(), seeds,
                                      [&m](Elem a, Elem b) { return m.add(a, b); });
  s.set_generators(gens);
  return s;
}

Submodule cyclic_submodule(const FiniteModule& m, Elem g) {
  ElementSet s(m.size());
  for (Elem r = 0; r < m.ring().size(); ++r) s.insert(m.act(g, r));
  s.normalize();
  s.set_generators({g});
  return s;
}

Submodule submodule_sum(const FiniteModule& m, const Submodule& a, const Submodule& b) {
  Submodule s = detail::subgroup_sum(a, b, [&m](Elem x, Elem y) { return m.add(x, y); });
  std::vector<Elem> gens = a.generators();
  for (Elem g : b.generators()) {
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  s.set_generators(std::move(gens));
  return s;
}

bool is_submodule(const FiniteModule& m, const ElementSet& set) {
  if (!set.contains(0)) return false;
  for (Elem a : set.members()) {
    for (Elem b : set.members()) {
      if (!set.contains(m.add(a, b))) return false;
    }
    for (Elem r = 0; r < m.ring().size(); ++r) {
      if (!set.contains(m.act(a, r))) return false;
    }
  }
  return true;
}

std::vector<Submodule> submodules(const FiniteModule& m) {
  require_within(m.size(), size_cap(kDefaultModuleCap), "module " + m.name());
  const std::size_t lattice_cap = size_cap(kDefaultEnumerationCap);
  std::vector<Submodule> cyclics;
  std::set<std::vector<Elem>> seen_cyclic;
  for (Elem g = 0; g < m.size(); ++g) {
    Submodule c = cyclic_submodule(m, g);
    if (seen_cyclic.insert(c.members()).second) cyclics.push_back(std::move(c));
  }
  std::vector<Submodule> all = cyclics;
  std::set<std::vector<Elem>> seen = seen_cyclic;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const Submodule& c : cyclics) {
      if (c.subset_of(all[i])) continue;
      Submodule s = submodule_sum(m, all[i], c);
      if (seen.insert(s.members()).second) {
        all.push_back(std::move(s));
        require_within(all.size(), lattice_cap, "submodule lattice of " + m.name());
      }
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

SubmoduleEmbedding submodule_module(const FiniteModule& m, const Submodule& n,
                                    const std::string& name) {
  std::vector<std::size_t> s;
  for (std::size_t t : m.s_members()) {
    if (n.contains(m.class_of(t))) s.push_back(t);
  }
  FiniteModule sub(m.ring(), m.rank(), s, m.q_members(), name);
  std::vector<Elem> map(sub.size());
  for (Elem i = 0; i < sub.size(); ++i) map[i] = m.class_of(sub.representative(i));
  ModuleHom inclusion(sub, m, std::move(map));
  return SubmoduleEmbedding{std::move(sub), std::move(inclusion)};
}

QuotientModule quotient_by(const FiniteModule& m, const Submodule& n, const std::string& name) {
  std::vector<std::size_t> q;
  for (std::size_t t : m.s_members()) {
    if (n.contains(m.class_of(t))) q.push_back(t);
  }
  const auto slash = name.find('/');
  FiniteModule quotient(m.ring(), m.rank(), m.s_members(), q, name,
                        slash == std::string::npos ? "K" : name.substr(slash + 1));
  std::vector<Elem> map(m.size());
  for (Elem i = 0; i < m.size(); ++i) map[i] = quotient.class_of(m.representative(i));
  ModuleHom projection(m, quotient, std::move(map));
  return QuotientModule{std::move(quotient), std::move(projection)};
}

std::vector<Elem> generating_set(const FiniteModule& m) {
  std::vector<Elem> gens;
  Submodule span = Submodule::zero(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = submodule_sum(m, span, cyclic_submodule(m, x));
  }
  return gens;
}

std::optional<Elem> cyclic_generator(const FiniteModule& m) {
  for (Elem g = 0; g < m.size(); ++g) {
    if (cyclic_submodule(m, g).is_full()) return g;
  }
  return std::nullopt;
}

RightIdealSet element_annihilator(const FiniteModule& m, Elem g) {
  ElementSet ann(m.ring().size());
  for (Elem r = 0; r < m.ring().size(); ++r) {
    if (m.act(g, r) == 0) ann.insert(r);
  }
  ann.set_generators({});
  return ann;
}

void for_each_hom(const FiniteModule& source, const FiniteModule& target,
                  const std::function<bool(const ModuleHom&)>& visit) {
  if (!source.ring().same_as(target.ring())) {
    throw PreconditionFailed("homomorphisms between modules over different rings");
  }
  const FiniteRing& ring = source.ring();
  const std::size_t n = ring.size();
  const std::vector<Elem> gens = generating_set(source);
  const std::size_t t = gens.size();
  const std::size_t cap = size_cap(kDefaultEnumerationCap);
  std::size_t domain = 1;
  std::size_t candidates = 1;
  for (std::size_t i = 0; i < t; ++i) {
    domain *= n;
    candidates *= target.size();
    require_within(domain, cap, "presentation of " + source.name());
    require_within(candidates, cap, "homomorphisms " + source.name() + " -> " + target.name());
  }

  // Coefficient tuples (r_1..r_t) for each element, and additive generators
  // of the relation subgroup {(r_i) : sum g_i r_i = 0}.
  std::vector<std::vector<Elem>> rep(source.size());
  ElementSet relations(domain);
  relations.insert(0);
  std::vector<std::vector<Elem>> relation_gens;
  const TupleOps ops(ring, t);
  for (std::size_t tuple = 0; tuple < domain; ++tuple) {
    const auto coeffs = ops.decode(tuple);
    Elem value = 0;
    for (std::size_t i = 0; i < t; ++i) value = source.add(value, source.act(gens[i], coeffs[i]));
    if (rep[value].empty()) rep[value] = coeffs;
    if (value == 0 && !relations.contains(static_cast<Elem>(tuple))) {
      relation_gens.push_back(coeffs);
      detail::extend_subgroup(relations, static_cast<Elem>(tuple),
                              [&ops](Elem a, Elem b) { return static_cast<Elem>(ops.add(a, b)); });
    }
  }
  if (t == 0) rep[0] = {};

  std::vector<Elem> images(t, 0);
  std::vector<Elem> map(source.size());
  for (std::size_t c = 0; c < candidates; ++c) {
    bool valid = true;
    for (const auto& rel : relation_gens) {
      Elem v = 0;
      for (std::size_t i = 0; i < t; ++i) v = target.add(v, target.act(images[i], rel[i]));
      if (v != 0) {
        valid = false;
        break;
      }
    }
    if (valid) {
      for (Elem m = 0; m < source.size(); ++m) {
        Elem v = 0;
        for (std::size_t i = 0; i < t; ++i) v = target.add(v, target.act(images[i], rep[m][i]));
        map[m] = v;
      }
      if (!visit(ModuleHom(source, target, map))) return;
    }
    for (std::size_t i = t; i-- > 0;) {
      if (++images[i] < target.size()) break;
      images[i] = 0;
    }
  }
}

std::vector<ModuleHom> hom_set(const FiniteModule& source, const FiniteModule& target) {
  std::vector<ModuleHom> homs;
  for_each_hom(source, target, [&homs](const ModuleHom& h) {
    homs.push_back(h);
    return true;
  });
  return homs;
}

ModuleHom hom_from_regular(const FiniteModule& regular, const FiniteModule& target, Elem image) {
  if (regular.size() != regular.ring().size() || regular.rank() != 1) {
    throw PreconditionFailed(regular.name() + " is not R_R");
  }
  std::vector<Elem> map(regular.size());
  for (Elem r = 0; r < map.size(); ++r) map[r] = target.act(image, r);
  return ModuleHom(regular, target, std::move(map));
}

IsomorphismResult is_isomorphic(const FiniteModule& a, const FiniteModule& b) {
  IsomorphismResult result;
  if (a.size() != b.size()) return result;
  for_each_hom(a, b, [&result](const ModuleHom& h) {
    if (!h.is_injective()) return true;
    result.isomorphic = true;
    result.witness = h;
    return false;
  });
  return result;
}

RightIdealSet annihilator(const FiniteModule& m) {
  const FiniteRing& ring = m.ring();
  ElementSet ann(ring.size());
  for (Elem r = 0; r < ring.size(); ++r) {
    bool kills = true;
    for (Elem x = 0; x < m.size() && kills; ++x) kills = m.act(x, r) == 0;
    if (kills) ann.insert(r);
  }
  if (!is_right_ideal(ring, ann) || two_sided_violation(ring, ann)) {
    throw AxiomViolation("annihilator of " + m.name() + " is not a two-sided ideal");
  }
  return ann;
}

}  // namespace mf
