#include <gtest/gtest.h>

#include "mf/error.hpp"
#include "mf/exactness.hpp"
#include "mf/ring_ops.hpp"
#include "mf/ring_spec.hpp"

namespace {

using mf::Elem;
using mf::FiniteModule;
using mf::FiniteRing;

// Index a*4 + b*2 + c for [[a,b],[0,c]].
constexpr Elem kE22 = 1, kE12 = 2, kE11 = 4;

struct Triangular {
  FiniteRing ring = mf::build_ring("tri:2:zmod:2");
  mf::RightIdealSet m_ideal = mf::principal_right_ideal(ring, kE11);
  mf::RightIdealSet n_ideal = mf::principal_right_ideal(ring, kE12);
  FiniteModule m = mf::ideal_module(ring, m_ideal, "M_R");

  Elem element(std::size_t tuple) const {
    Elem i = 0;
    while (m.representative(i) != tuple) ++i;
    return i;
  }
};

TEST(Submodules, TriangularMHasThree) {
  const Triangular t;
  const auto subs = mf::submodules(t.m);
  ASSERT_EQ(subs.size(), 3u);
  EXPECT_TRUE(subs[0].is_zero());
  EXPECT_EQ(subs[1], mf::cyclic_submodule(t.m, t.element(kE12)));
  EXPECT_TRUE(subs[2].is_full());
}

TEST(Submodules, KleinFourHasFive) {
  const FiniteRing z2 = mf::build_ring("zmod:2");
  const FiniteModule v = mf::direct_sum(mf::regular_module(z2), mf::regular_module(z2));
  // Subgroups of (Z/2)^2: 0, three lines, everything.
  EXPECT_EQ(mf::submodules(v).size(), 5u);
}

TEST(Homs, EndomorphismsOfTriangularRegularModule) {
  const FiniteRing r = mf::build_ring("tri:2:zmod:2");
  const FiniteModule rr = mf::regular_module(r);
  const auto homs = mf::hom_set(rr, rr);
  ASSERT_EQ(homs.size(), 8u);
  // Each endomorphism is left multiplication by its value at 1.
  for (const auto& h : homs) {
    const Elem a = h(r.one());
    for (Elem x = 0; x < r.size(); ++x) EXPECT_EQ(h(x), r.mul(a, x));
  }
  EXPECT_TRUE(homs.front() == mf::zero_hom(rr, rr));
}

TEST(Homs, NIsomorphicToE22R) {
  const Triangular t;
  const FiniteModule n = mf::ideal_module(t.ring, t.n_ideal, "N_R");
  const FiniteModule e = mf::ideal_module(t.ring, mf::principal_right_ideal(t.ring, kE22), "E22R");
  // phi: [[0,c],[0,0]] -> [[0,0],[0,c]]
  std::vector<Elem> phi(2);
  for (Elem i = 0; i < 2; ++i) {
    const std::size_t target = n.representative(i) == kE12 ? kE22 : 0;
    phi[i] = e.class_of(target);
  }
  bool found = false;
  for (const auto& h : mf::hom_set(n, e)) found = found || h.map() == phi;
  EXPECT_TRUE(found);
  EXPECT_TRUE(mf::is_isomorphic(n, e).isomorphic);
}

TEST(Square, TriangularIdentityCovers) {
  const Triangular t;
  const auto n = mf::submodule_module(t.m, mf::cyclic_submodule(t.m, t.element(kE12)), "N");
  const mf::SquareData sq{n.inclusion, mf::identity_hom(n.module), mf::identity_hom(t.m),
                          n.inclusion};
  const mf::SquareResult r = mf::check_square(sq);
  EXPECT_TRUE(r.preimage_equals_image && r.kernels_match && r.cokernels_iso);
}

TEST(Square, RejectsNonCommutingSquares) {
  const FiniteRing z4 = mf::build_ring("zmod:4");
  const auto q = mf::cyclic_module(z4, 2);
  const FiniteModule& r = q.projection.source();
  const auto sub = mf::submodule_module(q.module, mf::cyclic_submodule(q.module, 1), "N");
  const mf::SquareData sq{mf::hom_from_regular(r, r, 0), mf::hom_from_regular(r, sub.module, 1),
                          q.projection, sub.inclusion};
  EXPECT_THROW(mf::check_square(sq), mf::HypothesisViolated);
}

TEST(Square, GeneratedInstancesAgree) {
  for (const char* spec : {"zmod:8", "tri:2:zmod:2", "mat:2:zmod:2"}) {
    std::size_t agree = 0;
    const std::size_t count = mf::for_each_generated_square(
        mf::build_ring(spec), [&agree](const mf::GeneratedSquare& g) {
          const mf::SquareResult r = mf::check_square(g.square);
          agree += r.preimage_equals_image == r.kernels_match && r.kernels_match == r.cokernels_iso;
        });
    EXPECT_GT(count, 0u);
    EXPECT_EQ(agree, count) << spec;
  }
}

TEST(Superfluous, RadicalOfTriangular) {
  const FiniteRing r = mf::build_ring("tri:2:zmod:2");
  EXPECT_TRUE(mf::is_superfluous(r.radical(), mf::regular_module(r)));
  EXPECT_FALSE(mf::is_superfluous(mf::principal_right_ideal(r, kE11), mf::regular_module(r)));
}

TEST(Superfluous, EJInEROverZmod9Matrices) {
  const FiniteRing r = mf::build_ring("mat:2:zmod:9");
  const mf::RightIdealSet er = mf::principal_right_ideal(r, kE22);
  const mf::RightIdealSet ej = mf::left_multiple(r, kE22, r.radical());
  EXPECT_TRUE(mf::is_superfluous_in_summand(r, kE22, ej));
  // Exhaustive check on eR as a module.
  const FiniteModule m = mf::ideal_module(r, er, "eR");
  mf::ElementSet ej_in_m(m.size());
  for (Elem x : ej.members()) ej_in_m.insert(m.class_of(x));
  ej_in_m.normalize();
  EXPECT_TRUE(mf::is_superfluous(ej_in_m, m));
}

TEST(Covers, TruncatedDvrCoverIsE22) {
  const FiniteRing r = mf::build_ring("mat:2:zmod:9");
  const mf::CyclicCover c = mf::projective_cover_cyclic(r, 732);  // diag(1,3)
  EXPECT_EQ(r.format(732), "[[1,0],[0,3]]");
  EXPECT_EQ(c.cover.idempotent, kE22);
  EXPECT_EQ(c.cover.kernel, mf::left_multiple(r, kE22, r.radical()));
  EXPECT_FALSE(mf::is_isomorphic(c.source, mf::regular_module(r)).isomorphic);
}

TEST(Exactness, TriangularNIsExactInM) {
  const Triangular t;
  const auto res = mf::is_exact_submodule(mf::cyclic_submodule(t.m, t.element(kE12)), t.m);
  EXPECT_TRUE(res.exact);
  EXPECT_EQ(res.cover_m, kE11);
  EXPECT_EQ(res.cover_n, kE22);
}

TEST(Exactness, ZeroSubmoduleNeedsInjectiveCover) {
  // Over Z/4, R/2R has cover R -> R/2R with kernel 2R != 0, so 0 is not exact.
  const FiniteRing z4 = mf::build_ring("zmod:4");
  const FiniteModule m = mf::quotient_module(z4, mf::principal_right_ideal(z4, 2), "R/2R");
  EXPECT_FALSE(mf::is_exact_submodule(mf::ElementSet::zero(m.size()), m).exact);
  // Over Z/6, R/3R is covered by 4R with zero kernel.
  const FiniteRing z6 = mf::build_ring("zmod:6");
  const FiniteModule m6 = mf::quotient_module(z6, mf::principal_right_ideal(z6, 3), "R/3R");
  EXPECT_TRUE(mf::is_exact_submodule(mf::ElementSet::zero(m6.size()), m6).exact);
}

TEST(Presentation, TriangularQuotientNotCyclicallyPresented) {
  const Triangular t;
  const FiniteModule q(t.ring, 1,
                       std::vector<std::size_t>(t.m_ideal.members().begin(), t.m_ideal.members().end()),
                       std::vector<std::size_t>(t.n_ideal.members().begin(), t.n_ideal.members().end()),
                       "M/N", "N");
  EXPECT_EQ(q.size(), 2u);
  EXPECT_FALSE(mf::is_cyclically_presented(q).presented);
  // ann differs from ann(R/xR) for every x with |R/xR| = 2.
  const mf::RightIdealSet ann = mf::annihilator(q);
  EXPECT_EQ(ann.members(), (std::vector<Elem>{0, 1, 2, 3}));
}

TEST(Presentation, TriangularMIsPresentedByE22) {
  // R = E11 R + E22 R, so r -> E11 r induces R/E22 R ~ M_R.
  const Triangular t;
  const FiniteRing& r = t.ring;
  const mf::RightIdealSet e22r = mf::principal_right_ideal(r, kE22);
  for (Elem x = 0; x < r.size(); ++x) {
    EXPECT_EQ(r.mul(kE11, x) == 0, e22r.contains(x)) << x;
  }
  const auto res = mf::is_cyclically_presented(t.m);
  ASSERT_TRUE(res.presented);
  EXPECT_EQ(mf::principal_right_ideal(r, *res.x), e22r);
}

TEST(Presentation, ZeroModuleIsPresentedByOne) {
  const FiniteRing z4 = mf::build_ring("zmod:4");
  const FiniteModule zero = mf::quotient_module(z4, mf::principal_right_ideal(z4, 1), "0");
  const auto res = mf::is_cyclically_presented(zero);
  ASSERT_TRUE(res.presented);
  EXPECT_TRUE(z4.is_unit(*res.x));
}

TEST(PiExactness, QuotientsByPiExactSubmodulesArePresented) {
  for (const char* spec : {"zmod:8", "zmod:12", "tri:2:zmod:2", "prod:zmod:2,zmod:4"}) {
    const FiniteRing r = mf::build_ring(spec);
    for (Elem x = 0; x < r.size(); ++x) {
      const mf::CyclicModule m = mf::cyclic_module(r, x);
      for (const mf::Submodule& n : mf::submodules(m.module)) {
        if (!mf::is_pi_exact(n, m.projection)) continue;
        const FiniteModule q = mf::quotient_by(m.module, n, "M/N").module;
        EXPECT_TRUE(mf::is_cyclically_presented(q).presented) << spec << " x=" << x;
      }
    }
  }
}

TEST(Schanuel, TwoPresentationsGiveIsomorphicSums) {
  // R + xR and R + x'R are isomorphic whenever R/xR ~ R/x'R.
  const FiniteRing r = mf::build_ring("zmod:8");
  const FiniteModule rr = mf::regular_module(r);
  for (Elem x = 0; x < r.size(); ++x) {
    for (Elem y = x + 1; y < r.size(); ++y) {
      const FiniteModule qx = mf::cyclic_module(r, x).module;
      const FiniteModule qy = mf::cyclic_module(r, y).module;
      if (!mf::is_isomorphic(qx, qy).isomorphic) continue;
      const FiniteModule sx = mf::direct_sum(rr, mf::ideal_module(r, mf::principal_right_ideal(r, x), "xR"));
      const FiniteModule sy = mf::direct_sum(rr, mf::ideal_module(r, mf::principal_right_ideal(r, y), "yR"));
      EXPECT_TRUE(mf::is_isomorphic(sx, sy).isomorphic) << x << " " << y;
    }
  }
}

TEST(Limits, SizeCapIsEnforced) {
  const FiniteRing r = mf::build_ring("zmod:2");
  EXPECT_THROW(
      {
        FiniteModule big = mf::regular_module(r);
        for (int i = 0; i < 12; ++i) big = mf::direct_sum(big, mf::regular_module(r));
        mf::submodules(big);
      },
      mf::SizeExceeded);
}

}  // namespace
