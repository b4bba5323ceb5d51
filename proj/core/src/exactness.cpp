#include "mf/exactness.hpp"

#include <map>
#include <set>

#include "mf/error.hpp"

namespace mf {

namespace {

// Coset index of every element of `m` modulo the subgroup `s`.
std::vector<Elem> coset_ids(const FiniteModule& m, const Submodule& s) {
  const Elem unset = static_cast<Elem>(m.size());
  std::vector<Elem> ids(m.size(), unset);
  Elem next = 0;
  for (Elem a = 0; a < m.size(); ++a) {
    if (ids[a] != unset) continue;
    for (Elem t : s.members()) ids[m.add(a, t)] = next;
    ++next;
  }
  return ids;
}

}  // namespace

SquareResult check_square(const SquareData& sq) {
  const FiniteModule& b = sq.lambda.source();
  const FiniteModule& a = sq.lambda.target();
  const FiniteModule& n = sq.pi_n.target();
  const FiniteModule& m = sq.pi_m.target();
  if (!sq.pi_n.source().same_as(b) || !sq.pi_m.source().same_as(a) ||
      !sq.epsilon.source().same_as(n) || !sq.epsilon.target().same_as(m)) {
    throw HypothesisViolated("square maps do not share their modules");
  }
  if (!sq.pi_n.is_surjective()) throw HypothesisViolated("pi_N is not surjective");
  if (!sq.pi_m.is_surjective()) throw HypothesisViolated("pi_M is not surjective");
  if (!sq.epsilon.is_injective()) throw HypothesisViolated("epsilon is not injective");
  for (Elem x = 0; x < b.size(); ++x) {
    if (sq.pi_m(sq.lambda(x)) != sq.epsilon(sq.pi_n(x))) {
      throw HypothesisViolated("square does not commute at " + b.format(x));
    }
  }

  SquareResult r;
  const Submodule image = sq.lambda.image();
  r.preimage_equals_image = sq.pi_m.preimage_of(sq.epsilon.image()) == image;
  r.kernels_match = sq.lambda.image_of(sq.pi_n.kernel()) == sq.pi_m.kernel();

  // Induced map on cosets, built from representatives.
  const std::vector<Elem> left = coset_ids(a, image);
  const std::vector<Elem> right = coset_ids(m, sq.epsilon.image());
  const std::size_t left_count = *std::max_element(left.begin(), left.end()) + 1;
  const std::size_t right_count = *std::max_element(right.begin(), right.end()) + 1;
  const Elem unset = static_cast<Elem>(right_count);
  std::vector<Elem> induced(left_count, unset);
  for (Elem x = 0; x < a.size(); ++x) {
    const Elem target = right[sq.pi_m(x)];
    if (induced[left[x]] == unset) {
      induced[left[x]] = target;
    } else if (induced[left[x]] != target) {
      throw EquivalenceViolation("induced cokernel map is not well defined");
    }
  }
  std::set<Elem> hit(induced.begin(), induced.end());
  r.cokernels_iso = hit.size() == left_count && hit.size() == right_count;

  if (r.preimage_equals_image != r.kernels_match || r.kernels_match != r.cokernels_iso) {
    throw EquivalenceViolation("square conditions disagree: (a)=" +
                               std::to_string(r.preimage_equals_image) +
                               " (b)=" + std::to_string(r.kernels_match) +
                               " (c)=" + std::to_string(r.cokernels_iso));
  }
  return r;
}

std::size_t for_each_generated_square(const FiniteRing& ring,
                                      const std::function<void(const GeneratedSquare&)>& visit) {
  std::set<std::vector<Elem>> seen;
  std::size_t count = 0;
  for (Elem x = 0; x < ring.size(); ++x) {
    if (!seen.insert(principal_right_ideal(ring, x).members()).second) continue;
    const CyclicModule m = cyclic_module(ring, x);
    const FiniteModule& regular = m.projection.source();
    for (Elem n = 0; n < m.module.size(); ++n) {
      const SubmoduleEmbedding sub =
          submodule_module(m.module, cyclic_submodule(m.module, n), "nR");
      Elem n_in_sub = 0;
      while (sub.inclusion(n_in_sub) != n) ++n_in_sub;
      const ModuleHom pi_n = hom_from_regular(regular, sub.module, n_in_sub);
      for (Elem a = 0; a < ring.size(); ++a) {
        if (m.projection(a) != n) continue;
        visit(GeneratedSquare{x, n, a,
                              SquareData{hom_from_regular(regular, regular, a), pi_n,
                                         m.projection, sub.inclusion}});
        ++count;
      }
    }
  }
  return count;
}

bool is_superfluous(const Submodule& n, const FiniteModule& m) {
  for (const Submodule& l : submodules(m)) {
    if (l.is_full()) continue;
    if (submodule_sum(m, n, l).is_full()) return false;
  }
  return true;
}

bool is_superfluous_in_summand(const FiniteRing& ring, Elem e, const RightIdealSet& n) {
  return n.subset_of(left_multiple(ring, e, ring.radical()));
}

ProjectiveCover projective_cover(const FiniteRing& ring, const RightIdealSet& ideal) {
  const std::size_t size = ring.size();
  for (Elem e : ring.idempotent_list()) {
    RightIdealSet summand = principal_right_ideal(ring, e);
    RightIdealSet kernel = set_intersection(summand, ideal);
    kernel.normalize();
    // |eR + I| = |eR| |I| / |eR cap I|
    if (summand.size() * ideal.size() != size * kernel.size()) continue;
    if (!is_superfluous_in_summand(ring, e, kernel)) continue;
    return ProjectiveCover{e, std::move(summand), std::move(kernel)};
  }
  throw NoCover("no idempotent gives a cover of " + ring.name() + "/I");
}

CyclicCover projective_cover_cyclic(const FiniteRing& ring, Elem x) {
  const CyclicModule q = cyclic_module(ring, x);
  ProjectiveCover cover = projective_cover(ring, principal_right_ideal(ring, x));
  FiniteModule source = ideal_module(ring, cover.summand, "eR");
  std::vector<Elem> map(source.size());
  for (Elem i = 0; i < source.size(); ++i) {
    map[i] = q.projection(static_cast<Elem>(source.representative(i)));
  }
  ModuleHom restricted(source, q.module, std::move(map));
  if (!restricted.is_surjective()) {
    throw EquivalenceViolation("cover map for " + ring.format(x) + " is not onto");
  }
  ElementSet kernel_in_ring(ring.size());
  const Submodule kernel = restricted.kernel();
  for (Elem k : kernel.members()) {
    kernel_in_ring.insert(static_cast<Elem>(source.representative(k)));
  }
  kernel_in_ring.normalize();
  if (!(kernel_in_ring == cover.kernel) ||
      !is_superfluous_in_summand(ring, cover.idempotent, kernel_in_ring)) {
    throw EquivalenceViolation("cover kernel for " + ring.format(x) + " is not superfluous");
  }
  return CyclicCover{std::move(cover), std::move(source), std::move(restricted)};
}

ModuleCover cover_of_cyclic(const FiniteModule& m) {
  const auto g = cyclic_generator(m);
  if (!g) throw NotCyclic(m.name() + " is not cyclic");
  const FiniteRing& ring = m.ring();
  ProjectiveCover cover = projective_cover(ring, element_annihilator(m, *g));
  FiniteModule source = ideal_module(ring, cover.summand, "eR");
  std::vector<Elem> map(source.size());
  for (Elem i = 0; i < source.size(); ++i) {
    map[i] = m.act(*g, static_cast<Elem>(source.representative(i)));
  }
  ModuleHom pi(source, m, std::move(map));
  return ModuleCover{*g, std::move(cover), std::move(source), std::move(pi)};
}

bool is_pi_exact(const Submodule& n, const ModuleHom& pi) {
  const FiniteRing& ring = pi.source().ring();
  if (pi.source().size() != ring.size() || pi.source().rank() != 1) {
    throw PreconditionFailed("presentation must start at R_R");
  }
  if (!pi.is_surjective()) throw PreconditionFailed("presentation is not surjective");
  const Submodule pre = pi.preimage_of(n);
  const FiniteModule lifted = ideal_module(ring, pre, "pi^-1(N)");
  return is_isomorphic(lifted, regular_module(ring)).isomorphic;
}

ExactnessResult is_exact_submodule(const Submodule& n, const FiniteModule& m) {
  if (!is_submodule(m, n)) throw PreconditionFailed("N is not a submodule of " + m.name());
  const SubmoduleEmbedding sub = submodule_module(m, n, "N");
  const ModuleCover cm = cover_of_cyclic(m);
  const ModuleCover cn = cover_of_cyclic(sub.module);
  const FiniteRing& ring = m.ring();
  const Elem e_n = cn.cover.idempotent;
  const Elem target = sub.inclusion(sub.module.act(cn.generator, e_n));

  // Homs e_N R -> e_M R are a -> (e_N r -> a r) with a in e_M R and a e_N = a.
  std::optional<Elem> lambda_image;
  for (Elem a : cm.cover.summand.members()) {
    if (ring.mul(a, e_n) != a) continue;
    if (m.act(cm.generator, a) != target) continue;
    lambda_image = a;
    break;
  }
  if (!lambda_image) {
    throw EquivalenceViolation("no commuting lift between covers of " + m.name());
  }
  std::vector<Elem> map(cn.source.size());
  for (Elem i = 0; i < cn.source.size(); ++i) {
    const Elem p = static_cast<Elem>(cn.source.representative(i));
    map[i] = cm.source.class_of(ring.mul(*lambda_image, p));
  }
  const ModuleHom lambda(cn.source, cm.source, std::move(map));
  const SquareData square{lambda, cn.map, cm.map, sub.inclusion};

  ExactnessResult result;
  result.cover_m = cm.cover.idempotent;
  result.cover_n = e_n;
  result.lambda_image = *lambda_image;
  result.square = check_square(square);
  result.exact = result.square.kernels_match;
  return result;
}

PresentationResult is_cyclically_presented(const FiniteModule& m) {
  const FiniteRing& ring = m.ring();
  std::set<std::vector<Elem>> tried;
  for (Elem x = 0; x < ring.size(); ++x) {
    const RightIdealSet ideal = principal_right_ideal(ring, x);
    if (ideal.size() * m.size() != ring.size()) continue;
    if (!tried.insert(ideal.members()).second) continue;
    const FiniteModule q = quotient_module(ring, ideal, "R/xR");
    auto iso = is_isomorphic(q, m);
    if (iso.isomorphic) return PresentationResult{true, x, std::move(iso.witness)};
  }
  return {};
}

}  // namespace mf
