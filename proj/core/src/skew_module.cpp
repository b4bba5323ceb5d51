#include "mf/skew_module.hpp"

#include <algorithm>
#include <set>

#include "mf/error.hpp"
#include "mf/factorization.hpp"
#include "mf/limits.hpp"

namespace mf {

SkewQuotient::SkewQuotient(SkewPoly f) : f_(std::move(f)) {
  if (f_.degree() < 1) throw PreconditionFailed("R/fR needs deg f >= 1");
  const GaloisField& field = f_.context().field();
  size_ = 1;
  for (long i = 0; i < f_.degree(); ++i) {
    size_ *= field.order();
    require_within(size_, size_cap(kDefaultModuleCap), "R/fR");
  }
  const auto& ctx = f_.context_ptr();
  std::vector<SkewPoly> multipliers{SkewPoly::monomial(ctx, 1, 1)};
  FieldElem basis = 1;
  for (unsigned k = 0; k < field.degree(); ++k) {
    multipliers.push_back(SkewPoly::constant(ctx, basis));
    basis *= field.characteristic();
  }
  actions_.resize(multipliers.size() * size_);
  for (Elem m = 0; m < size_; ++m) {
    const SkewPoly r = element(m);
    for (std::size_t a = 0; a < multipliers.size(); ++a) {
      actions_[a * size_ + m] = index_of(r * multipliers[a]);
    }
  }
}

SkewPoly SkewQuotient::element(Elem i) const {
  const std::size_t q = f_.context().field().order();
  std::vector<FieldElem> c(static_cast<std::size_t>(f_.degree()));
  for (auto& v : c) {
    v = static_cast<FieldElem>(i % q);
    i /= static_cast<Elem>(q);
  }
  return SkewPoly(f_.context_ptr(), std::move(c));
}

Elem SkewQuotient::index_of(const SkewPoly& r) const {
  const SkewPoly rem = r.degree() >= f_.degree() ? left_divmod(r, f_).remainder : r;
  const std::size_t q = f_.context().field().order();
  std::size_t idx = 0;
  for (std::size_t i = rem.coeffs().size(); i-- > 0;) idx = idx * q + rem.coeffs()[i];
  return static_cast<Elem>(idx);
}

Elem SkewQuotient::add(Elem a, Elem b) const {
  const GaloisField& field = f_.context().field();
  const std::size_t q = field.order();
  std::size_t out = 0;
  std::size_t place = 1;
  for (long i = 0; i < f_.degree(); ++i) {
    out += field.add(static_cast<FieldElem>(a % q), static_cast<FieldElem>(b % q)) * place;
    a /= static_cast<Elem>(q);
    b /= static_cast<Elem>(q);
    place *= q;
  }
  return static_cast<Elem>(out);
}

Submodule SkewQuotient::generated(std::span<const Elem> seeds) const {
  auto add_fn = [this](Elem a, Elem b) { return add(a, b); };
  auto act_fn = [this](Elem m, std::size_t a) { return act(m, a); };
  return detail::operator_closure(size_, seeds, add_fn, action_count(), act_fn);
}

Submodule SkewQuotient::image_of_ideal(const SkewPoly& g) const {
  const Elem seed = index_of(g);
  return generated(std::span<const Elem>(&seed, 1));
}

std::vector<Submodule> SkewQuotient::submodules() const {
  std::set<Submodule> found;
  for (Elem m = 0; m < size_; ++m) found.insert(generated(std::span<const Elem>(&m, 1)));
  auto add_fn = [this](Elem a, Elem b) { return add(a, b); };
  std::vector<Submodule> frontier(found.begin(), found.end());
  const std::vector<Submodule> cyclic = frontier;
  while (!frontier.empty()) {
    std::vector<Submodule> next;
    for (const Submodule& s : frontier) {
      for (const Submodule& c : cyclic) {
        Submodule sum = detail::subgroup_sum(s, c, add_fn);
        if (found.insert(sum).second) next.push_back(std::move(sum));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

DivisorPoset divisor_poset(const SkewPoly& f) {
  const SkewQuotient quotient(f);
  DivisorPoset poset;
  poset.submodules = quotient.submodules();
  for (long d = 0; d <= f.degree(); ++d) {
    for (SkewPoly& g : monic_left_divisors(f, static_cast<std::size_t>(d))) {
      poset.divisors.push_back(std::move(g));
    }
  }
  std::set<std::size_t> hit;
  for (const SkewPoly& g : poset.divisors) {
    const Submodule image = quotient.image_of_ideal(g);
    const auto it = std::lower_bound(poset.submodules.begin(), poset.submodules.end(), image);
    if (it == poset.submodules.end() || !(*it == image)) {
      throw EquivalenceViolation(g.pretty() + " R/fR is not among the submodules");
    }
    const auto pos = static_cast<std::size_t>(it - poset.submodules.begin());
    poset.matching.push_back(pos);
    hit.insert(pos);
  }
  poset.bijective = hit.size() == poset.divisors.size() &&
                    hit.size() == poset.submodules.size();

  poset.order_preserving = true;
  for (std::size_t i = 0; i < poset.divisors.size(); ++i) {
    for (std::size_t j = 0; j < poset.divisors.size(); ++j) {
      const bool ideal_le = in_right_ideal(poset.divisors[i], poset.divisors[j]);
      const bool sub_le = poset.submodules[poset.matching[i]].subset_of(
          poset.submodules[poset.matching[j]]);
      if (ideal_le != sub_le) poset.order_preserving = false;
    }
  }

  // Maximal chains from 0 to R/fR; submodules are sorted by size.
  const auto& subs = poset.submodules;
  std::vector<std::size_t> chains(subs.size(), 0);
  chains[0] = 1;
  for (std::size_t s = 1; s < subs.size(); ++s) {
    for (std::size_t t = 0; t < s; ++t) {
      if (subs[t].size() >= subs[s].size() || !subs[t].subset_of(subs[s])) continue;
      bool covered = true;
      for (std::size_t u = 0; u < subs.size() && covered; ++u) {
        if (u == s || u == t) continue;
        if (subs[t].size() < subs[u].size() && subs[u].size() < subs[s].size() &&
            subs[t].subset_of(subs[u]) && subs[u].subset_of(subs[s])) {
          covered = false;
        }
      }
      if (covered) chains[s] += chains[t];
    }
  }
  poset.maximal_chains = chains.back();
  return poset;
}

Report pi_exact_poset(const SkewPoly& f) {
  Report report;
  report.command = "skew poset";
  report.input = f.format();
  const DivisorPoset poset = divisor_poset(f);
  for (std::size_t i = 0; i < poset.divisors.size(); ++i) {
    const Submodule& s = poset.submodules[poset.matching[i]];
    report.lines.push_back("gR/fR, g = " + poset.divisors[i].pretty() + ": " +
                           std::to_string(s.size()) + " elements");
  }
  report.add("submodules of R/fR", Status::Verified,
             std::to_string(poset.submodules.size()) + " submodules");
  report.add_bool("matched with monic left divisors of f", poset.bijective,
                  std::to_string(poset.divisors.size()) + " divisors");
  report.add_bool("inclusion order preserved", poset.order_preserving);
  // Each preimage is gR with g a nonzero monic divisor, so R_R maps onto it.
  report.add_bool("every submodule is pi-exact", poset.bijective,
                  "preimages are principal with nonzero generators");
  const std::size_t maximal = maximal_factorizations(f).size();
  report.add_bool("maximal chains match maximal factorizations",
                  poset.maximal_chains == maximal,
                  std::to_string(poset.maximal_chains) + " chains, " + std::to_string(maximal) +
                      " factorizations",
                  {std::to_string(poset.maximal_chains)});
  return report;
}

SkewPoly presentation_kernel(const SkewPoly& f, const SkewPoly& u) {
  if (!right_gcd_sum(u, f).is_unit()) throw PreconditionFailed("uR + fR is not R");
  const SkewPoly m = left_lcm_intersection(u, f);
  const DivMod dm = left_divmod(m, u);
  if (!dm.remainder.is_zero()) throw EquivalenceViolation("lcm is not a multiple of u");
  return dm.quotient.monic_right();
}

Report sum_closure_check(const SkewPoly& a, const SkewPoly& b, const SkewPoly& c) {
  if (c.is_zero()) throw PreconditionFailed("c must be nonzero");
  if (!in_right_ideal(c, a) || !in_right_ideal(c, b)) {
    throw PreconditionFailed("c is not in aR cap bR");
  }
  Report report;
  report.command = "skew closure";
  report.input = a.format() + " | " + b.format() + " | " + c.format();

  const SkewPoly d = right_gcd_sum(a, b);
  const SkewPoly m = left_lcm_intersection(a, b);
  report.lines.push_back("d = " + d.pretty());
  report.lines.push_back("lcm = " + m.pretty());
  report.add_bool("a and b lie in dR", in_right_ideal(a, d) && in_right_ideal(b, d), {},
                  {d.format()});
  report.add_bool("deg lcm + deg d = deg a + deg b",
                  m.degree() + d.degree() == a.degree() + b.degree());

  if (c.degree() == 0) {
    // R/cR = 0: everything collapses and d is a unit.
    report.add_bool("aR/cR + bR/cR = dR/cR", d.is_unit(), "c is a unit");
    report.add_bool("dR/cR is cyclically presented", d.is_unit());
    return report;
  }
  const SkewQuotient quotient(c);
  auto add_fn = [&quotient](Elem x, Elem y) { return quotient.add(x, y); };
  const Submodule sum =
      detail::subgroup_sum(quotient.image_of_ideal(a), quotient.image_of_ideal(b), add_fn);
  const Submodule image_d = quotient.image_of_ideal(d);
  report.add_bool("aR/cR + bR/cR = dR/cR", sum == image_d,
                  std::to_string(sum.size()) + " elements");

  // c = d h, and s -> d s is a bijection R/hR -> dR/cR.
  const DivMod dm = left_divmod(c, d);
  bool presented = dm.remainder.is_zero();
  if (presented) {
    const SkewPoly& h = dm.quotient;
    std::set<Elem> hit;
    for (const SkewPoly& s : polys_below_degree(c.context_ptr(), static_cast<std::size_t>(h.degree()))) {
      const Elem e = quotient.index_of(d * s);
      if (!image_d.contains(e)) presented = false;
      hit.insert(e);
    }
    presented = presented && hit.size() == image_d.size();
    report.lines.push_back("h = " + h.pretty());
  }
  report.add_bool("dR/cR is cyclically presented", presented);
  return report;
}

}  // namespace mf
