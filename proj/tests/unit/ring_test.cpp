#include <gtest/gtest.h>

#include <set>

#include "mf/error.hpp"
#include "mf/regularity.hpp"
#include "mf/ring_ops.hpp"
#include "mf/ring_spec.hpp"
#include "oracles.hpp"

namespace {

using mf::Elem;
using mf::FiniteRing;

const oracle::MatrixRing kTri2{2, 2, true};
const oracle::MatrixRing kMat2{2, 2, false};
const oracle::MatrixRing kMat3{2, 3, false};
const oracle::MatrixRing kMat9{2, 9, false};

TEST(RingArithmetic, MatchesNaiveMatrixProducts) {
  for (const auto& [spec, naive] :
       {std::pair{"tri:2:zmod:2", kTri2}, {"mat:2:zmod:2", kMat2}, {"mat:2:zmod:3", kMat3}}) {
    const FiniteRing r = mf::build_ring(spec);
    ASSERT_EQ(r.size(), static_cast<std::size_t>(naive.size()));
    EXPECT_EQ(r.one(), naive.one());
    for (Elem a = 0; a < r.size(); ++a) {
      for (Elem b = 0; b < r.size(); ++b) {
        ASSERT_EQ(r.mul(a, b), naive.mul(a, b)) << spec << " " << a << "*" << b;
        ASSERT_EQ(r.add(a, b), naive.add(a, b));
      }
    }
  }
}

TEST(RingArithmetic, TriangularFormat) {
  const FiniteRing r = mf::build_ring("tri:2:zmod:2");
  EXPECT_EQ(r.format(6), "[[1,1],[0,0]]");
  EXPECT_EQ(r.format(r.one()), "[[1,0],[0,1]]");
}

TEST(Units, TriangularHasIdentityAndIdentityPlusE12) {
  const FiniteRing r = mf::build_ring("tri:2:zmod:2");
  std::vector<Elem> expected;
  for (Elem a = 0; a < 8; ++a) {
    for (Elem b = 0; b < 8; ++b) {
      if (kTri2.mul(a, b) == kTri2.one() && kTri2.mul(b, a) == kTri2.one()) {
        expected.push_back(a);
        break;
      }
    }
  }
  EXPECT_EQ(mf::units(r), expected);
  EXPECT_EQ(expected, (std::vector<Elem>{5, 7}));
}

TEST(Units, Gl2F3HasOrder48) {
  const FiniteRing r = mf::build_ring("mat:2:zmod:3");
  std::size_t invertible = 0;
  for (Elem a = 0; a < 81; ++a) invertible += kMat3.det2(a) != 0;
  EXPECT_EQ(invertible, 48u);
  EXPECT_EQ(mf::units(r).size(), invertible);
}

TEST(Idempotents, Zmod6) {
  EXPECT_EQ(mf::idempotents(mf::build_ring("zmod:6")), (std::vector<Elem>{0, 1, 3, 4}));
}

TEST(Idempotents, Mat2Zmod2HasEight) {
  std::size_t count = 0;
  for (Elem a = 0; a < 16; ++a) count += kMat2.mul(a, a) == a;
  EXPECT_EQ(count, 8u);
  EXPECT_EQ(mf::idempotents(mf::build_ring("mat:2:zmod:2")).size(), count);
}

TEST(Radical, TriangularIsStrictlyUpper) {
  const FiniteRing r = mf::build_ring("tri:2:zmod:2");
  // x in J iff 1 - x*y is a unit for every y.
  std::vector<Elem> expected;
  for (Elem x = 0; x < 8; ++x) {
    bool in_j = true;
    for (Elem y = 0; y < 8 && in_j; ++y) {
      const Elem z = kTri2.add(kTri2.one(), kTri2.mul(x, y));  // char 2: 1 - xy = 1 + xy
      bool unit = false;
      for (Elem w = 0; w < 8; ++w) unit = unit || kTri2.mul(z, w) == kTri2.one();
      in_j = unit;
    }
    if (in_j) expected.push_back(x);
  }
  EXPECT_EQ(expected, (std::vector<Elem>{0, 2}));
  EXPECT_EQ(mf::jacobson_radical(r).members(), expected);
}

TEST(Radical, Mat2Zmod9IsThreeTimesMatrices) {
  const FiniteRing r = mf::build_ring("mat:2:zmod:9");
  const auto& j = r.radical();
  EXPECT_EQ(j.size(), 81u);
  for (Elem x : j.members()) {
    for (int e : kMat9.entries(x)) ASSERT_EQ(e % 3, 0);
  }
}

TEST(QuotientRing, TriangularModRadicalHasFourElements) {
  const FiniteRing r = mf::build_ring("tri:2:zmod:2");
  const auto q = mf::quotient_ring(r, r.radical(), "J");
  EXPECT_EQ(q.ring.size(), 4u);
  EXPECT_EQ(mf::idempotents(q.ring).size(), 4u);  // (Z/2)^2
  EXPECT_TRUE(mf::is_vnr(q.ring).is_verified());
}

TEST(QuotientRing, Zmod4ModTwoIsAField) {
  const FiniteRing r = mf::build_ring("zmod:4");
  const auto q = mf::quotient_ring(r, mf::principal_right_ideal(r, 2), "2R");
  EXPECT_EQ(q.ring.size(), 2u);
  EXPECT_EQ(mf::units(q.ring).size(), 1u);
}

TEST(QuotientRing, RejectsOneSidedIdeal) {
  const FiniteRing r = mf::build_ring("tri:2:zmod:2");
  EXPECT_THROW(mf::quotient_ring(r, mf::principal_right_ideal(r, 1)), mf::NotTwoSided);
}

TEST(Cancellation, LeftCancellativeIffUnit) {
  for (const char* spec : {"zmod:12", "tri:2:zmod:2", "mat:2:zmod:2", "prod:zmod:2,zmod:4"}) {
    const FiniteRing r = mf::build_ring(spec);
    for (Elem a = 0; a < r.size(); ++a) {
      // Pigeonhole: b -> ab injective iff a is a unit in a finite ring.
      std::set<Elem> images;
      for (Elem b = 0; b < r.size(); ++b) images.insert(r.mul(a, b));
      const bool injective = images.size() == r.size();
      EXPECT_EQ(mf::is_left_cancellative(r, a).cancellative, injective) << spec << " " << a;
      EXPECT_EQ(r.is_unit(a), injective) << spec << " " << a;
    }
  }
}

TEST(Regularity, Zmod4FailsAtTwo) {
  const mf::Verdict v = mf::is_vnr(mf::build_ring("zmod:4"));
  ASSERT_TRUE(v.is_falsified());
  EXPECT_EQ(v.witness, (std::vector<std::int64_t>{2}));
  for (int x = 0; x < 4; ++x) EXPECT_NE(2 * x * 2 % 4, 2);
}

TEST(Regularity, IntegersFailAtTwo) {
  const mf::Verdict v = mf::is_vnr(mf::RingHandle{mf::IntegerRing{}});
  ASSERT_TRUE(v.is_falsified());
  EXPECT_EQ(v.witness.at(0), 2);
}

TEST(Lifting, Zmod4AndTriangular) {
  const FiniteRing z4 = mf::build_ring("zmod:4");
  EXPECT_TRUE(mf::idempotents_lift(z4, mf::principal_right_ideal(z4, 2)).is_verified());
  const FiniteRing tri = mf::build_ring("tri:2:zmod:2");
  EXPECT_TRUE(mf::idempotents_lift(tri, tri.radical()).is_verified());
}

TEST(Covers, TriangularAndTruncatedDvr) {
  EXPECT_TRUE(mf::has_all_cyclic_covers(mf::build_ring("tri:2:zmod:2")).is_verified());
  EXPECT_TRUE(mf::has_all_cyclic_covers(mf::build_ring("mat:2:zmod:9")).is_verified());
}

TEST(CoversVsRegularity, TriangularBothSidesTrue) {
  const mf::Report r = mf::covers_vs_regularity(mf::RingHandle{mf::build_ring("tri:2:zmod:2")});
  EXPECT_EQ(r.status(), mf::Status::Verified);
}

TEST(CoversVsRegularity, IntegersBothSidesFalseWithWitnessTwo) {
  const mf::Report r = mf::covers_vs_regularity(mf::RingHandle{mf::IntegerRing{}});
  EXPECT_EQ(r.status(), mf::Status::Falsified);
  ASSERT_EQ(r.witnesses().size(), 2u);
  for (const std::string& w : r.witnesses()) EXPECT_TRUE(w.ends_with(": 2")) << w;
}

TEST(RingSpec, RoundTripsAndRejectsGarbage) {
  for (const char* s : {"zmod:6", "mat:2:zmod:3", "tri:3:zmod:2", "prod:zmod:2,mat:2:zmod:2", "int"}) {
    EXPECT_EQ(mf::parse_ring_spec(s).to_string(), s);
  }
  EXPECT_THROW(mf::parse_ring_spec("zmod:"), mf::ParseError);
  EXPECT_THROW(mf::parse_ring_spec("quux:3"), mf::ParseError);
  EXPECT_THROW(mf::build_ring("int"), mf::PreconditionFailed);
}

}  // namespace
