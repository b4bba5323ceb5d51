#include <algorithm>
#include <gtest/gtest.h>

#include "mf/endo.hpp"
#include "mf/error.hpp"
#include "mf/ring_ops.hpp"
#include "mf/ring_spec.hpp"

namespace {

using mf::Elem;
using mf::EndoRing;
using mf::FiniteModule;

TEST(EndoRing, RegularModuleOfTriangularRing) {
  const mf::FiniteRing r = mf::build_ring("tri:2:zmod:2");
  const EndoRing e(mf::regular_module(r));
  ASSERT_EQ(e.size(), 8u);
  // s -> s(1) is a ring isomorphism End(R_R) -> R.
  std::vector<Elem> at_one(e.size());
  for (Elem s = 0; s < e.size(); ++s) at_one[s] = e.apply(s, r.one());
  for (Elem s = 0; s < e.size(); ++s) {
    for (Elem t = 0; t < e.size(); ++t) {
      EXPECT_EQ(at_one[e.ring().mul(s, t)], r.mul(at_one[s], at_one[t]));
      EXPECT_EQ(at_one[e.ring().add(s, t)], r.add(at_one[s], at_one[t]));
    }
  }
  EXPECT_EQ(at_one[e.ring().one()], r.one());
  EXPECT_EQ(e.ring().idempotent_list().size(), mf::idempotents(r).size());
}

TEST(EndoRing, ZeroModuleIsRejected) {
  const mf::FiniteRing r = mf::build_ring("zmod:2");
  const FiniteModule zero = mf::quotient_module(r, mf::principal_right_ideal(r, 1), "0");
  EXPECT_THROW(EndoRing{zero}, mf::TrivialRing);
}

TEST(EndoCorpus, QuasiProjectivityAndProjectivity) {
  const auto corpus = mf::endo_corpus();
  ASSERT_GE(corpus.size(), 10u);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const EndoRing e(corpus[i].module);
    EXPECT_EQ(mf::is_quasi_projective(e), i + 1 < corpus.size()) << corpus[i].label;
  }
  const FiniteModule& last = corpus.back().module;
  EXPECT_FALSE(mf::is_projective(last));
  EXPECT_TRUE(mf::is_projective(corpus.front().module));
}

TEST(EndoCorpus, SemisimpleQuotientsAreQuasiProjectiveButNotProjective) {
  const mf::FiniteRing z4 = mf::build_ring("zmod:4");
  const FiniteModule m = mf::quotient_module(z4, mf::principal_right_ideal(z4, 2), "R/2R");
  EXPECT_TRUE(mf::is_quasi_projective(EndoRing(m)));
  EXPECT_FALSE(mf::is_projective(m));
}

TEST(SplitEpi, AllPairsOnTriangularRegularModule) {
  const EndoRing e(mf::regular_module(mf::build_ring("tri:2:zmod:2")));
  std::size_t cases = 0;
  for (Elem idem : e.ring().idempotent_list()) {
    for (Elem s = 0; s < e.size(); ++s) {
      const mf::SplitEpiResult r = mf::split_epi_equivalence(e, idem, s);
      EXPECT_EQ(r.split, r.sum_full);
      ++cases;
    }
  }
  EXPECT_EQ(cases, 6u * 8u);
  const auto& idems = e.ring().idempotent_list();
  Elem non_idempotent = 0;
  while (std::find(idems.begin(), idems.end(), non_idempotent) != idems.end()) ++non_idempotent;
  EXPECT_THROW(mf::split_epi_equivalence(e, non_idempotent, 0), mf::PreconditionFailed);
}

TEST(Suite, TriangularE11RAllPairs) {
  const mf::FiniteRing r = mf::build_ring("tri:2:zmod:2");
  const EndoRing e(mf::ideal_module(r, mf::principal_right_ideal(r, 4), "E11R"));
  for (Elem s = 0; s < e.size(); ++s) {
    EXPECT_EQ(mf::endo_correspondence_suite(e, s).status(), mf::Status::Verified);
    EXPECT_EQ(mf::cover_transfer_check(e, s).status(), mf::Status::Verified);
  }
}

TEST(Suite, ProjectiveSummandOverMat2Zmod2) {
  const mf::FiniteRing r = mf::build_ring("mat:2:zmod:2");
  const EndoRing e(mf::ideal_module(r, mf::principal_right_ideal(r, 8), "E11R"));
  for (Elem s = 0; s < e.size(); ++s) {
    EXPECT_EQ(mf::endo_correspondence_suite(e, s).status(), mf::Status::Verified);
    EXPECT_EQ(mf::cover_transfer_check(e, s).status(), mf::Status::Verified);
  }
}

TEST(Suite, RequiresQuasiProjectivity) {
  const EndoRing e(mf::endo_corpus().back().module);
  EXPECT_THROW(mf::endo_correspondence_suite(e, 0), mf::HypothesisViolated);
  EXPECT_THROW(mf::minimal_summands(e, 0), mf::HypothesisViolated);
  EXPECT_THROW(mf::cover_transfer_check(e, 0), mf::HypothesisViolated);
}

TEST(MinimalSummands, ZeroEndomorphismGivesM) {
  const mf::FiniteRing r = mf::build_ring("tri:2:zmod:2");
  const EndoRing e(mf::regular_module(r));
  const mf::SummandFamilies f = mf::minimal_summands(e, 0);
  ASSERT_EQ(f.onto_summands_minimal.size(), 1u);
  EXPECT_TRUE(f.onto_summands_minimal[0].is_full());
  EXPECT_TRUE(f.families_equal);
}

TEST(MinimalSummands, TriangularLeftMultiplicationByE12) {
  const mf::FiniteRing r = mf::build_ring("tri:2:zmod:2");
  const EndoRing e(mf::regular_module(r));
  Elem s = 0;
  while (e.apply(s, r.one()) != 2) ++s;  // left multiplication by E12
  const mf::SummandFamilies f = mf::minimal_summands(e, s);
  EXPECT_FALSE(f.onto_summands_minimal.empty());
  EXPECT_TRUE(f.minima_isomorphic);
  EXPECT_TRUE(f.minima_minimal_in_onto);
  EXPECT_TRUE(f.families_equal);
  // s(R) = E12 R = J(R), so the only summand mapping onto R/J(R) is R itself.
  ASSERT_EQ(f.onto_summands_minimal.size(), 1u);
  EXPECT_TRUE(f.onto_summands_minimal[0].is_full());
}

TEST(Decompositions, IdempotentsMatchDecompositions) {
  for (const auto& entry : mf::endo_corpus()) {
    const EndoRing e(entry.module);
    EXPECT_EQ(mf::decomposition_check(e).status(), mf::Status::Verified) << entry.label;
  }
}

}  // namespace
