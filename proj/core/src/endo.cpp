#include "mf/endo.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "mf/error.hpp"
#include "mf/exactness.hpp"
#include "mf/limits.hpp"
#include "mf/ring_ops.hpp"
#include "mf/ring_spec.hpp"

namespace mf {

namespace {

constexpr std::size_t kEndoModuleCap = 256;
constexpr std::size_t kEndoRingCap = 1024;

// Element of `sub` for each element of the ambient module (size() if outside).
std::vector<Elem> inverse_inclusion(const SubmoduleEmbedding& e) {
  const Elem outside = static_cast<Elem>(e.inclusion.target().size());
  std::vector<Elem> back(e.inclusion.target().size(), outside);
  for (Elem i = 0; i < e.module.size(); ++i) back[e.inclusion(i)] = i;
  return back;
}

std::vector<Submodule> minimal_members(const std::vector<Submodule>& family) {
  std::vector<Submodule> out;
  for (const Submodule& a : family) {
    const bool minimal = std::none_of(family.begin(), family.end(), [&a](const Submodule& b) {
      return b.size() < a.size() && b.subset_of(a);
    });
    if (minimal) out.push_back(a);
  }
  return out;
}

bool pairwise_isomorphic(const FiniteModule& m, const std::vector<Submodule>& family) {
  for (std::size_t i = 1; i < family.size(); ++i) {
    const FiniteModule a = submodule_module(m, family[0], "N").module;
    const FiniteModule b = submodule_module(m, family[i], "N'").module;
    if (!is_isomorphic(a, b).isomorphic) return false;
  }
  return true;
}

bool is_direct_summand(const FiniteModule& m, const Submodule& n,
                       const std::vector<Submodule>& all) {
  return std::any_of(all.begin(), all.end(), [&](const Submodule& l) {
    return set_intersection(l, n).is_zero() && submodule_sum(m, l, n).is_full();
  });
}

void insert_unique(std::vector<Submodule>& v, Submodule s) {
  if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(std::move(s));
}

std::string count_detail(std::size_t cases, std::size_t holding) {
  return std::to_string(cases) + " cases, " + std::to_string(holding) + " with both sides true";
}

}  // namespace

struct EndoRing::Data {
  FiniteModule module;
  std::vector<ModuleHom> maps;
  std::map<std::vector<Elem>, Elem> index;
  std::optional<FiniteRing> ring;
};

EndoRing::EndoRing(const FiniteModule& m) {
  if (m.size() == 1) throw TrivialRing("End(0) is the zero ring");
  require_within(m.size(), size_cap(kEndoModuleCap), "module for End(M)");
  auto data = std::make_shared<Data>(Data{m, {}, {}, std::nullopt});
  for_each_hom(m, m, [&data](const ModuleHom& h) {
    data->index.emplace(h.map(), static_cast<Elem>(data->maps.size()));
    data->maps.push_back(h);
    return true;
  });
  const std::size_t n = data->maps.size();
  require_within(n, size_cap(kEndoRingCap), "End(" + m.name() + ")");
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<Elem> buffer(m.size());
  for (Elem s = 0; s < n; ++s) {
    const auto& fs = data->maps[s].map();
    for (Elem t = 0; t < n; ++t) {
      const auto& ft = data->maps[t].map();
      for (Elem x = 0; x < m.size(); ++x) buffer[x] = m.add(fs[x], ft[x]);
      add[s * n + t] = data->index.at(buffer);
      for (Elem x = 0; x < m.size(); ++x) buffer[x] = fs[ft[x]];
      mul[s * n + t] = data->index.at(buffer);
    }
  }
  std::vector<Elem> identity(m.size());
  for (Elem x = 0; x < m.size(); ++x) identity[x] = x;
  const Elem one = data->index.at(identity);
  const std::vector<Elem> gens = generating_set(m);
  std::vector<std::string> labels;
  for (const ModuleHom& h : data->maps) {
    std::string label = "[";
    for (std::size_t i = 0; i < gens.size(); ++i) label += (i ? "," : "") + m.format(h(gens[i]));
    labels.push_back(label + "]");
  }
  data->ring.emplace(make_table_ring(n, std::move(add), std::move(mul), one, std::move(labels),
                                     "End(" + m.name() + ")"));
  data_ = std::move(data);
}

const FiniteModule& EndoRing::module() const { return data_->module; }
const FiniteRing& EndoRing::ring() const { return *data_->ring; }
std::size_t EndoRing::size() const { return data_->maps.size(); }
const ModuleHom& EndoRing::endomorphism(Elem s) const { return data_->maps.at(s); }

Elem EndoRing::index_of(const std::vector<Elem>& map) const {
  const auto it = data_->index.find(map);
  if (it == data_->index.end()) throw PreconditionFailed("map is not an endomorphism");
  return it->second;
}

Submodule EndoRing::image(Elem s) const { return endomorphism(s).image(); }

bool is_quasi_projective(const EndoRing& e) {
  const FiniteModule& m = e.module();
  for (const Submodule& k : submodules(m)) {
    const QuotientModule q = quotient_by(m, k, "M/K");
    std::set<std::vector<Elem>> lifted;
    for (Elem h = 0; h < e.size(); ++h) lifted.insert(compose(q.projection, e.endomorphism(h)).map());
    bool all = true;
    for_each_hom(m, q.module, [&](const ModuleHom& g) {
      all = lifted.count(g.map()) > 0;
      return all;
    });
    if (!all) return false;
  }
  return true;
}

bool is_projective(const FiniteModule& m) {
  const FiniteRing& ring = m.ring();
  const std::optional<Elem> cyclic = cyclic_generator(m);
  const std::vector<Elem> gens = cyclic ? std::vector<Elem>{*cyclic} : generating_set(m);
  if (gens.empty()) return true;
  FiniteModule free = regular_module(ring);
  for (std::size_t i = 1; i < gens.size(); ++i) free = direct_sum(free, regular_module(ring));
  std::vector<Elem> map(free.size());
  for (Elem x = 0; x < free.size(); ++x) {
    const std::vector<Elem> c = free.coordinates(x);
    Elem v = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) v = m.add(v, m.act(gens[i], c[i]));
    map[x] = v;
  }
  const ModuleHom p(free, m, std::move(map));
  bool split = false;
  for_each_hom(m, free, [&](const ModuleHom& s) {
    split = true;
    for (Elem x = 0; x < m.size() && split; ++x) split = p(s(x)) == x;
    return !split;
  });
  return split;
}

SplitEpiResult split_epi_equivalence(const EndoRing& e, Elem idempotent, Elem s) {
  const FiniteRing& ring = e.ring();
  if (ring.mul(idempotent, idempotent) != idempotent) {
    throw PreconditionFailed(ring.format(idempotent) + " is not idempotent");
  }
  const FiniteModule& m = e.module();
  const Elem complement = ring.sub(ring.one(), idempotent);
  const SubmoduleEmbedding m2 = submodule_module(m, e.image(complement), "(1-e)M");
  const std::vector<Elem> back = inverse_inclusion(m2);

  // pi_2 s as a map M -> M2.
  std::vector<Elem> pi2s(m.size());
  for (Elem x = 0; x < m.size(); ++x) pi2s[x] = back[e.apply(complement, e.apply(s, x))];

  SplitEpiResult r;
  for_each_hom(m2.module, m, [&](const ModuleHom& t) {
    bool section = true;
    for (Elem y = 0; y < m2.module.size() && section; ++y) section = pi2s[t(y)] == y;
    r.split = section;
    return !section;
  });
  r.sum_full = ideal_sum(ring, principal_right_ideal(ring, idempotent),
                         principal_right_ideal(ring, s))
                   .is_full();
  if (r.split != r.sum_full) {
    throw EquivalenceViolation("split epimorphism and eE + sE = E disagree at e = " +
                               ring.format(idempotent) + ", s = " + ring.format(s));
  }
  return r;
}

Report split_epi_sweep(const EndoRing& e) {
  Report report;
  report.command = "endo split";
  report.input = e.module().name();
  std::size_t cases = 0, holding = 0;
  for (Elem idem : e.ring().idempotent_list()) {
    for (Elem s = 0; s < e.size(); ++s) {
      ++cases;
      if (split_epi_equivalence(e, idem, s).split) ++holding;
    }
  }
  report.add("pi_2 s splits iff eE + sE = E", Status::Verified, count_detail(cases, holding));
  return report;
}

Report decomposition_check(const EndoRing& e) {
  Report report;
  report.command = "endo decompositions";
  report.input = e.module().name();
  const FiniteRing& ring = e.ring();
  const FiniteModule& m = e.module();
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> pairs;
  bool direct = true;
  for (Elem idem : ring.idempotent_list()) {
    const Submodule m1 = e.image(idem);
    const Submodule m2 = e.image(ring.sub(ring.one(), idem));
    direct = direct && set_intersection(m1, m2).is_zero() && submodule_sum(m, m1, m2).is_full();
    pairs.emplace(m1.members(), m2.members());
  }
  report.add_bool("each idempotent gives a direct decomposition", direct);
  report.add_bool("distinct idempotents give distinct decompositions",
                  pairs.size() == ring.idempotent_list().size(),
                  std::to_string(pairs.size()) + " decompositions");
  return report;
}

SummandFamilies split_summand_family(const EndoRing& e, Elem s) {
  SummandFamilies f;
  for (Elem idem : e.ring().idempotent_list()) {
    if (split_epi_equivalence(e, idem, s).split) insert_unique(f.split, e.image(idem));
  }
  std::sort(f.split.begin(), f.split.end());
  f.split_minimal = minimal_members(f.split);
  f.split_minima_isomorphic = pairwise_isomorphic(e.module(), f.split_minimal);
  return f;
}

SummandFamilies minimal_summands(const EndoRing& e, Elem s) {
  if (!is_quasi_projective(e)) {
    throw HypothesisViolated(e.module().name() + " is not quasi-projective");
  }
  SummandFamilies f = split_summand_family(e, s);
  f.quasi_projective = true;
  const FiniteModule& m = e.module();
  const Submodule image = e.image(s);
  const std::vector<Submodule> all = submodules(m);
  for (const Submodule& n : all) {
    if (!submodule_sum(m, n, image).is_full()) continue;
    f.onto.push_back(n);
    if (is_direct_summand(m, n, all)) f.onto_summands.push_back(n);
  }
  f.onto_summands_minimal = minimal_members(f.onto_summands);
  f.families_equal = f.onto_summands == f.split;
  f.minima_isomorphic = pairwise_isomorphic(m, f.onto_summands_minimal);
  const std::vector<Submodule> onto_minimal = minimal_members(f.onto);
  f.minima_minimal_in_onto = std::all_of(
      f.onto_summands_minimal.begin(), f.onto_summands_minimal.end(), [&](const Submodule& n) {
        return std::find(onto_minimal.begin(), onto_minimal.end(), n) != onto_minimal.end();
      });
  return f;
}

Report minimal_summands_report(const EndoRing& e, Elem s) {
  Report report;
  report.command = "endo minimal";
  report.input = e.module().name() + ", s = " + e.ring().format(s);
  const SummandFamilies f = minimal_summands(e, s);
  const FiniteModule& m = e.module();
  auto describe = [&m](const Submodule& n) {
    std::string out = "{";
    for (std::size_t i = 0; i < n.members().size(); ++i) {
      out += (i ? ", " : "") + m.format(n.members()[i]);
    }
    return out + "}";
  };
  for (const Submodule& n : f.onto_summands_minimal) report.lines.push_back("minimal: " + describe(n));
  report.add_bool("split summands have minimal elements", !f.split_minimal.empty(),
                  std::to_string(f.split.size()) + " split summands");
  report.add_bool("minimal split summands are isomorphic", f.split_minima_isomorphic);
  report.add_bool("split summands = summands mapping onto M/s(M)", f.families_equal);
  report.add_bool("minimal summands mapping onto M/s(M) are isomorphic", f.minima_isomorphic);
  report.add_bool("they are minimal among all submodules mapping onto M/s(M)",
                  f.minima_minimal_in_onto, std::to_string(f.onto.size()) + " submodules map onto");
  return report;
}

Report endo_correspondence_suite(const EndoRing& e, Elem s) {
  if (!is_quasi_projective(e)) {
    throw HypothesisViolated(e.module().name() + " is not quasi-projective");
  }
  Report report;
  report.command = "endo suite";
  report.input = e.module().name() + ", s = " + e.ring().format(s);
  const FiniteRing& ring = e.ring();
  const FiniteModule& m = e.module();
  const Submodule image_s = e.image(s);
  const RightIdealSet ideal_s = principal_right_ideal(ring, s);
  const std::vector<Submodule> all = submodules(m);
  const auto& idems = ring.idempotent_list();

  std::size_t onto_both = 0, summand_both = 0;
  for (Elem g = 0; g < e.size(); ++g) {
    const Submodule image_g = e.image(g);
    const RightIdealSet ideal_g = principal_right_ideal(ring, g);
    const bool onto_m = submodule_sum(m, image_g, image_s).is_full();
    const bool onto_e = ideal_sum(ring, ideal_g, ideal_s).is_full();
    if (onto_m != onto_e) {
      throw EquivalenceViolation("g(M) onto M/s(M) and gE onto E/sE disagree at g = " + ring.format(g));
    }
    onto_both += onto_m;
    const bool summand_e = std::any_of(idems.begin(), idems.end(), [&](Elem f) {
      return principal_right_ideal(ring, f) == ideal_g;
    });
    const bool summand_m = is_direct_summand(m, image_g, all);
    if (summand_e != summand_m) {
      throw EquivalenceViolation("summand conditions disagree at g = " + ring.format(g));
    }
    summand_both += summand_m;
  }
  report.add("g(M) maps onto M/s(M) iff gE maps onto E/sE", Status::Verified,
             count_detail(e.size(), onto_both));
  report.add("gE is a summand of E iff g(M) is a summand of M", Status::Verified,
             count_detail(e.size(), summand_both));

  std::vector<FiniteModule> images, ideals;
  for (Elem idem : idems) {
    images.push_back(submodule_module(m, e.image(idem), "e(M)").module);
    ideals.push_back(ideal_module(ring, principal_right_ideal(ring, idem), "eE"));
  }
  std::size_t iso_both = 0;
  for (std::size_t i = 0; i < idems.size(); ++i) {
    for (std::size_t j = 0; j < idems.size(); ++j) {
      const bool iso_m = is_isomorphic(images[i], images[j]).isomorphic;
      const bool iso_e = is_isomorphic(ideals[i], ideals[j]).isomorphic;
      if (iso_m != iso_e) {
        throw EquivalenceViolation("isomorphism conditions disagree at e = " +
                                   ring.format(idems[i]) + ", e' = " + ring.format(idems[j]));
      }
      iso_both += iso_m;
    }
  }
  report.add("e(M) and e'(M) isomorphic iff eE and e'E are", Status::Verified,
             count_detail(idems.size() * idems.size(), iso_both));

  std::size_t superfluous_both = 0;
  for (Elem idem : idems) {
    const SubmoduleEmbedding sub = submodule_module(m, e.image(idem), "e(M)");
    const std::vector<Elem> back = inverse_inclusion(sub);
    const Submodule meet = set_intersection(e.image(idem), image_s);
    ElementSet kernel(sub.module.size());
    for (Elem x : meet.members()) kernel.insert(back[x]);
    kernel.normalize();
    const bool sup_m = is_superfluous(kernel, sub.module);
    const RightIdealSet kernel_e = set_intersection(principal_right_ideal(ring, idem), ideal_s);
    const bool sup_e = is_superfluous_in_summand(ring, idem, kernel_e);
    if (sup_m != sup_e) {
      throw EquivalenceViolation("superfluity of kernels disagrees at e = " + ring.format(idem));
    }
    superfluous_both += sup_m;
  }
  report.add("kernel on e(M) superfluous iff kernel on eE superfluous", Status::Verified,
             count_detail(idems.size(), superfluous_both));
  return report;
}

Report cover_transfer_check(const EndoRing& e, Elem s) {
  if (!is_projective(e.module())) {
    throw HypothesisViolated(e.module().name() + " is not projective");
  }
  Report report;
  report.command = "endo covers";
  report.input = e.module().name() + ", s = " + e.ring().format(s);
  const FiniteRing& ring = e.ring();
  const FiniteModule& m = e.module();
  const Submodule image_s = e.image(s);
  const RightIdealSet ideal_s = principal_right_ideal(ring, s);
  std::vector<std::string> covers;
  for (Elem idem : ring.idempotent_list()) {
    const Submodule image_e = e.image(idem);
    const SubmoduleEmbedding sub = submodule_module(m, image_e, "e(M)");
    const std::vector<Elem> back = inverse_inclusion(sub);
    const Submodule meet = set_intersection(image_e, image_s);
    ElementSet kernel(sub.module.size());
    for (Elem x : meet.members()) kernel.insert(back[x]);
    kernel.normalize();
    const bool cover_m =
        submodule_sum(m, image_e, image_s).is_full() && is_superfluous(kernel, sub.module);
    const RightIdealSet ideal_e = principal_right_ideal(ring, idem);
    const bool cover_e = ideal_sum(ring, ideal_e, ideal_s).is_full() &&
                         is_superfluous_in_summand(ring, idem, set_intersection(ideal_e, ideal_s));
    if (cover_m != cover_e) {
      throw EquivalenceViolation("cover conditions disagree at e = " + ring.format(idem));
    }
    if (cover_m) covers.push_back(ring.format(idem));
  }
  report.add("e(M) covers M/s(M) iff eE covers E/sE", Status::Verified,
             std::to_string(covers.size()) + " covering idempotents", covers);
  return report;
}

std::vector<EndoCorpusEntry> endo_corpus() {
  std::vector<EndoCorpusEntry> out;
  const FiniteRing tri = build_ring("tri:2:zmod:2");
  // E11 = 4, E12 = 2, E22 = 1 in the coordinate order (a, b, c).
  out.push_back({"tri:2:zmod:2 R_R", regular_module(tri)});
  out.push_back({"tri:2:zmod:2 E11R", ideal_module(tri, principal_right_ideal(tri, 4), "E11R")});
  out.push_back({"tri:2:zmod:2 E22R", ideal_module(tri, principal_right_ideal(tri, 1), "E22R")});
  {
    const RightIdealSet m = principal_right_ideal(tri, 4);
    const RightIdealSet n = principal_right_ideal(tri, 2);
    out.push_back({"tri:2:zmod:2 M/N",
                   FiniteModule(tri, 1, std::vector<std::size_t>(m.members().begin(), m.members().end()),
                                std::vector<std::size_t>(n.members().begin(), n.members().end()),
                                "M/N", "N")});
  }
  const FiniteRing z4 = build_ring("zmod:4");
  out.push_back({"zmod:4 R_R", regular_module(z4)});
  out.push_back({"zmod:4 R/2R", quotient_module(z4, principal_right_ideal(z4, 2), "R/2R")});
  const FiniteRing z6 = build_ring("zmod:6");
  out.push_back({"zmod:6 R/2R+R/3R",
                 direct_sum(quotient_module(z6, principal_right_ideal(z6, 2), "R/2R"),
                            quotient_module(z6, principal_right_ideal(z6, 3), "R/3R"))});
  const FiniteRing m2 = build_ring("mat:2:zmod:2");
  out.push_back({"mat:2:zmod:2 R_R", regular_module(m2)});
  // E11 has entries (1,0,0,0): index 8.
  out.push_back({"mat:2:zmod:2 E11R", ideal_module(m2, principal_right_ideal(m2, 8), "E11R")});
  const FiniteRing z2 = build_ring("zmod:2");
  out.push_back({"zmod:2 R+R", direct_sum(regular_module(z2), regular_module(z2))});
  out.push_back({"zmod:4 R+R/2R",
                 direct_sum(regular_module(z4), quotient_module(z4, principal_right_ideal(z4, 2), "R/2R"))});
  return out;
}

}  // namespace mf
