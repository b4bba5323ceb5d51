#include <gtest/gtest.h>

#include <random>

#include "mf/error.hpp"
#include "mf/quat_order.hpp"
#include "mf/ring_ops.hpp"
#include "oracles.hpp"

namespace {

using mf::OrderVec;

OrderVec random_vec(std::mt19937& rng, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  return {d(rng), d(rng), d(rng), d(rng)};
}

TEST(Order, ProductsMatchQuaternionArithmetic) {
  const mf::OrderContext& r = mf::build_order();
  std::mt19937 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const OrderVec x = random_vec(rng, 5), y = random_vec(rng, 5);
    const auto q = oracle::quaternion2_mul(mf::OrderContext::to_quaternion2(x),
                                           mf::OrderContext::to_quaternion2(y), r.a(), r.b());
    EXPECT_EQ(mf::OrderContext::to_quaternion2(r.mul(x, y)), q);
  }
}

TEST(Order, AssociativeOnBasis) {
  const mf::OrderContext& r = mf::build_order();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        EXPECT_EQ(r.mul(r.mul(r.basis(i), r.basis(j)), r.basis(k)),
                  r.mul(r.basis(i), r.mul(r.basis(j), r.basis(k))));
}

TEST(Order, NormIsMultiplicativeAndMatchesOracle) {
  const mf::OrderContext& r = mf::build_order();
  std::mt19937 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const OrderVec x = random_vec(rng, 6), y = random_vec(rng, 6);
    EXPECT_EQ(r.nrd(r.mul(x, y)), r.nrd(x) * r.nrd(y));
    EXPECT_EQ(4 * r.nrd(x), oracle::quaternion2_norm4(mf::OrderContext::to_quaternion2(x), r.a(), r.b()));
    EXPECT_EQ(r.mul(x, r.conj(x)), (OrderVec{r.nrd(x), 0, 0, 0}));
  }
}

TEST(Order, RejectsNonIntegralQuaternions) {
  EXPECT_THROW(mf::OrderContext::from_quaternion2({1, 0, 0, 0}), mf::IntegralityViolation);
  EXPECT_EQ(mf::OrderContext::from_quaternion2({1, 0, 0, 1}), (OrderVec{0, 0, 0, 1}));
}

TEST(Lattice, NormOneElementsAreFour) {
  // Brute force over a box; the inverse Gram diagonal bounds every coordinate
  // of a norm-1 element by 1.
  const mf::OrderContext& r = mf::build_order();
  std::vector<OrderVec> expected;
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::int64_t b = -4; b <= 4; ++b)
      for (std::int64_t c = -4; c <= 4; ++c)
        for (std::int64_t d = -4; d <= 4; ++d) {
          const OrderVec v{a, b, c, d};
          if (oracle::quaternion2_norm4(mf::OrderContext::to_quaternion2(v), r.a(), r.b()) == 4) {
            expected.push_back(v);
          }
        }
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(expected.size(), 4u);  // +-1, +-i
  EXPECT_EQ(mf::elements_of_norm(mf::OrderLattice::whole(), 1), expected);
}

TEST(Lattice, Indices) {
  EXPECT_EQ(mf::OrderLattice::whole().index(), 1);
  EXPECT_EQ(mf::OrderLattice::scaled_order(3).index(), 81);
  const mf::OrderLattice i(mf::example_ideal_i());
  const mf::OrderLattice j(mf::example_ideal_j());
  EXPECT_EQ(i.index(), 9);
  EXPECT_EQ(j.index(), 9);
  EXPECT_TRUE(i.contains(mf::OrderLattice::scaled_order(3)));
  EXPECT_TRUE(j.contains(mf::OrderLattice::scaled_order(3)));
  EXPECT_TRUE(mf::is_right_ideal(i));
  EXPECT_TRUE(mf::is_right_ideal(j));
}

TEST(Lattice, PrincipalIdealIndexIsNormSquared) {
  const mf::OrderContext& r = mf::build_order();
  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const OrderVec g = random_vec(rng, 3);
    if (r.nrd(g) == 0) continue;
    EXPECT_EQ(mf::principal_right_ideal(g).index(), r.nrd(g) * r.nrd(g));
  }
}

TEST(Lattice, HermiteFormIsCanonical) {
  const mf::OrderLattice i(mf::example_ideal_i());
  std::vector<OrderVec> shuffled = mf::example_ideal_i();
  std::reverse(shuffled.begin(), shuffled.end());
  shuffled.push_back({3, 0, 0, 6});
  EXPECT_EQ(mf::OrderLattice(shuffled), i);
  EXPECT_THROW(mf::OrderLattice({{1, 0, 0, 0}}), mf::PreconditionFailed);
}

TEST(Principality, IIsPrincipalWithNormThreeGenerator) {
  const mf::OrderContext& r = mf::build_order();
  const mf::OrderLattice i(mf::example_ideal_i());
  const mf::Verdict v = mf::is_principal_right_ideal(i);
  ASSERT_TRUE(v.is_verified());
  const OrderVec g{v.witness[0], v.witness[1], v.witness[2], v.witness[3]};
  EXPECT_EQ(r.nrd(g), 3);
  EXPECT_EQ(mf::principal_right_ideal(g), i);
}

TEST(Principality, JIsNotPrincipal) {
  const mf::OrderLattice j(mf::example_ideal_j());
  const mf::Verdict v = mf::is_principal_right_ideal(j);
  ASSERT_TRUE(v.is_falsified());
  EXPECT_EQ(v.witness, (std::vector<std::int64_t>{3, 0}));
  EXPECT_TRUE(mf::elements_of_norm(j, 3).empty());
}

TEST(Reduction, OrderModThreeIsSimple) {
  const mf::ModPReduction& p = mf::mod3_reduction();
  EXPECT_EQ(p.ring.size(), 81u);
  EXPECT_TRUE(p.ring.radical().is_zero());
  EXPECT_EQ(mf::units(p.ring).size(), 48u);
  EXPECT_EQ(p.image(mf::OrderLattice(mf::example_ideal_i())).size(), 9u);
  EXPECT_EQ(p.preimage(p.image(mf::OrderLattice(mf::example_ideal_i()))),
            mf::OrderLattice(mf::example_ideal_i()));
}

TEST(Reduction, UnitsCarryJOntoIBothWays) {
  const mf::ModPReduction& p = mf::mod3_reduction();
  const mf::ElementSet i = p.image(mf::OrderLattice(mf::example_ideal_i()));
  const mf::ElementSet j = p.image(mf::OrderLattice(mf::example_ideal_j()));
  auto carries = [&](const mf::ElementSet& from, const mf::ElementSet& to) {
    for (mf::Elem u : mf::units(p.ring)) {
      bool ok = true;
      for (mf::Elem x : from.members()) ok = ok && to.contains(p.ring.mul(u, x));
      if (ok) return true;
    }
    return false;
  };
  EXPECT_TRUE(carries(j, i));
  EXPECT_TRUE(carries(i, j));
}

TEST(Reduction, FullVerification) {
  EXPECT_EQ(mf::verify_presentation_dependence().status(), mf::Status::Verified);
}

}  // namespace
