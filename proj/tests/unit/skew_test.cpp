#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mf/error.hpp"
#include "mf/factorization.hpp"
#include "mf/skew_module.hpp"
#include "oracles.hpp"

namespace {

using mf::FieldElem;
using mf::SkewPoly;
using oracle::F4Poly;

auto f4_twisted() { return mf::skew_context(2, 2, 1); }
auto f4_plain() { return mf::skew_context(2, 2, 0); }

SkewPoly poly(const std::shared_ptr<const mf::SkewContext>& ctx, std::vector<FieldElem> c) {
  return SkewPoly(ctx, std::move(c));
}

F4Poly coeffs(const SkewPoly& p) { return F4Poly(p.coeffs().begin(), p.coeffs().end()); }

// All polynomials over F_4 of exact degree d.
std::vector<F4Poly> f4_polys_of_degree(std::size_t d) {
  std::vector<F4Poly> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i <= d; ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    F4Poly p(d + 1);
    std::size_t c = code;
    for (std::size_t i = 0; i <= d; ++i, c /= 4) p[i] = static_cast<std::uint32_t>(c % 4);
    if (p[d] != 0) out.push_back(p);
  }
  return out;
}

// Monic g of degree k with q * g = f for some q (scan over all q).
std::vector<F4Poly> oracle_monic_right_divisors(const F4Poly& f, std::size_t k, unsigned power) {
  std::vector<F4Poly> out;
  for (const F4Poly& g : f4_polys_of_degree(k)) {
    if (g.back() != 1) continue;
    for (const F4Poly& q : f4_polys_of_degree(f.size() - 1 - k)) {
      if (oracle::f4_poly_mul(q, g, power) == f) {
        out.push_back(g);
        break;
      }
    }
  }
  return out;
}

// Monic g of degree k with g * q = f for some q.
bool oracle_left_divides(const F4Poly& g, const F4Poly& f, unsigned power) {
  if (g.size() > f.size()) return false;
  for (const F4Poly& q : f4_polys_of_degree(f.size() - g.size())) {
    if (oracle::f4_poly_mul(g, q, power) == f) return true;
  }
  return false;
}

// Number of (d, c) with (x + d)(x + c) = f.
std::size_t oracle_linear_pairs(const F4Poly& f, unsigned power) {
  std::size_t count = 0;
  for (std::uint32_t d = 0; d < 4; ++d)
    for (std::uint32_t c = 0; c < 4; ++c)
      count += oracle::f4_poly_mul({d, 1}, {c, 1}, power) == f;
  return count;
}

TEST(SkewArithmetic, ProductMatchesOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> coef(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    F4Poly a(1 + trial % 4), b(1 + (trial / 4) % 4);
    for (auto& c : a) c = coef(rng);
    for (auto& c : b) c = coef(rng);
    a = oracle::f4_trim(a);
    b = oracle::f4_trim(b);
    EXPECT_EQ(coeffs(poly(f4_twisted(), a) * poly(f4_twisted(), b)), oracle::f4_poly_mul(a, b, 1));
    EXPECT_EQ(coeffs(poly(f4_plain(), a) * poly(f4_plain(), b)), oracle::f4_poly_mul(a, b, 0));
  }
}

TEST(SkewArithmetic, RightDivisionByLinear) {
  // x^2 - 1 = (x + sigma(c))(x - c) + c^3 - 1.
  const auto ctx = f4_twisted();
  const SkewPoly f = poly(ctx, {1, 0, 1});
  for (FieldElem c = 0; c < 4; ++c) {
    const mf::DivMod qr = mf::right_divmod(f, poly(ctx, {c, 1}));
    const FieldElem c3 = oracle::f4_mul(c, oracle::f4_mul(c, c));
    EXPECT_EQ(coeffs(qr.remainder), oracle::f4_trim({oracle::f4_add(c3, 1)})) << c;
    EXPECT_EQ(coeffs(qr.quotient), (F4Poly{oracle::f4_frob(c, 1), 1}));
  }
}

TEST(SkewArithmetic, DivisionIdentities) {
  std::mt19937 rng(11);
  const auto ctx = f4_twisted();
  const auto all = mf::polys_below_degree(ctx, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const SkewPoly a = all[rng() % all.size()];
    const SkewPoly b = all[rng() % all.size()];
    if (b.is_zero()) continue;
    const mf::DivMod r = mf::right_divmod(a, b);
    EXPECT_EQ(r.quotient * b + r.remainder, a);
    EXPECT_LT(r.remainder.degree(), b.degree());
    const mf::DivMod l = mf::left_divmod(a, b);
    EXPECT_EQ(b * l.quotient + l.remainder, a);
    EXPECT_LT(l.remainder.degree(), b.degree());
  }
  EXPECT_THROW(mf::right_divmod(poly(ctx, {1}), poly(ctx, {})), mf::DivisionByZero);
}

TEST(SkewArithmetic, CommutativeGcdAndLcmOverF3) {
  const auto ctx = mf::skew_context(3, 1, 0);
  const SkewPoly x2m1 = poly(ctx, {2, 0, 1}), x2px = poly(ctx, {0, 1, 1});
  EXPECT_EQ(mf::right_gcd_sum(x2m1, x2px), poly(ctx, {1, 1}));
  EXPECT_EQ(mf::left_lcm_intersection(poly(ctx, {2, 1}), poly(ctx, {1, 1})), x2m1);
}

TEST(SkewArithmetic, GcdMatchesCommonLeftDivisorScan) {
  std::mt19937 rng(5);
  const auto ctx = f4_twisted();
  const auto all = mf::polys_below_degree(ctx, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const SkewPoly a = all[rng() % all.size()], b = all[rng() % all.size()];
    if (a.degree() < 1 || b.degree() < 1) continue;
    // Largest monic common left divisor by exhaustive scan.
    F4Poly best = {1};
    for (std::size_t k = 1; k <= static_cast<std::size_t>(std::min(a.degree(), b.degree())); ++k) {
      for (const F4Poly& g : f4_polys_of_degree(k)) {
        if (g.back() == 1 && oracle_left_divides(g, coeffs(a), 1) && oracle_left_divides(g, coeffs(b), 1)) {
          best = g;
        }
      }
    }
    EXPECT_EQ(coeffs(mf::right_gcd_sum(a, b)), best);
  }
}

TEST(SkewArithmetic, LcmDegreeIdentity) {
  std::mt19937 rng(3);
  const auto ctx = f4_twisted();
  const auto all = mf::polys_below_degree(ctx, 5);
  int checked = 0;
  while (checked < 200) {
    const SkewPoly a = all[rng() % all.size()], b = all[rng() % all.size()];
    if (a.is_zero() || b.is_zero()) continue;
    const SkewPoly m = mf::left_lcm_intersection(a, b);
    const SkewPoly d = mf::right_gcd_sum(a, b);
    EXPECT_EQ(m.degree() + d.degree(), a.degree() + b.degree());
    EXPECT_TRUE(mf::in_right_ideal(m, a) && mf::in_right_ideal(m, b));
    ++checked;
  }
}

TEST(Divisors, MonicRightDivisorsMatchScan) {
  const auto ctx = f4_twisted();
  EXPECT_EQ(mf::monic_right_divisors(poly(ctx, {0, 0, 1}), 1), (std::vector<SkewPoly>{poly(ctx, {0, 1})}));
  const auto ds = mf::monic_right_divisors(poly(ctx, {1, 0, 1}), 1);
  EXPECT_EQ(ds.size(), 3u);
  for (const F4Poly& f : {F4Poly{1, 0, 1}, F4Poly{0, 0, 1}, F4Poly{2, 3, 1}, F4Poly{1, 2, 0, 1}}) {
    for (std::size_t k = 1; k < f.size() - 1; ++k) {
      std::vector<F4Poly> got;
      for (const SkewPoly& g : mf::monic_right_divisors(poly(ctx, f), k)) got.push_back(coeffs(g));
      auto want = oracle_monic_right_divisors(f, k, 1);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      EXPECT_EQ(got, want);
    }
  }
}

TEST(Factorizations, CountsMatchPairOracle) {
  struct Case {
    F4Poly f;
    unsigned power;
    std::size_t expected;
  };
  for (const Case& c : {Case{{0, 0, 1}, 1, 1}, Case{{1, 0, 1}, 1, 3}, Case{{1, 0, 1}, 0, 1}}) {
    const auto ctx = mf::skew_context(2, 2, c.power);
    const auto fs = mf::maximal_factorizations(poly(ctx, c.f));
    EXPECT_EQ(fs.size(), c.expected);
    EXPECT_EQ(oracle_linear_pairs(c.f, c.power), c.expected);
  }
}

TEST(Factorizations, TwistedXSquaredMinusOneFactors) {
  const auto ctx = f4_twisted();
  const auto fs = mf::maximal_factorizations(poly(ctx, {1, 0, 1}));
  ASSERT_EQ(fs.size(), 3u);
  for (const auto& f : fs) {
    ASSERT_EQ(f.factors.size(), 2u);
    const FieldElem c = f.factors[1].coeff(0);
    EXPECT_EQ(f.factors[0].coeff(0), oracle::f4_mul(c, c));  // (x + c^2)(x + c)
    EXPECT_EQ(f.unit, 1u);
  }
}

TEST(Factorizations, IrreducibleHasNoProperFactorization) {
  const auto ctx = f4_twisted();
  const SkewPoly f = poly(ctx, {2, 0, 1});  // x^2 + t
  EXPECT_TRUE(mf::is_irreducible(f));
  EXPECT_EQ(oracle_linear_pairs({2, 0, 1}, 1), 0u);
  const auto fs = mf::enumerate_factorizations(f);
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0].factors.size(), 1u);
}

TEST(Factorizations, TrailingUnitCarriesLeadingCoefficient) {
  const auto ctx = f4_twisted();
  const SkewPoly f = poly(ctx, {2, 0, 2});  // t (x^2 + 1)
  for (const auto& fac : mf::enumerate_factorizations(f)) {
    SkewPoly product = SkewPoly::constant(ctx, 1);
    for (const auto& x : fac.factors) {
      EXPECT_TRUE(x.is_monic());
      product = product * x;
    }
    EXPECT_EQ(product.scale_right(fac.unit), f);
  }
}

TEST(Chains, OnePlusXSquaredChain) {
  const auto ctx = f4_twisted();
  const auto fac = mf::canonicalize(poly(ctx, {1, 0, 1}), {poly(ctx, {1, 1}), poly(ctx, {1, 1})});
  const mf::IdealChain chain = mf::chain_from_factorization(fac);
  ASSERT_EQ(chain.generators.size(), 3u);
  EXPECT_EQ(chain.generators[0], poly(ctx, {1}));
  EXPECT_EQ(chain.generators[1], poly(ctx, {1, 1}));
  EXPECT_EQ(chain.generators[2], poly(ctx, {1, 0, 1}));
}

TEST(Chains, RoundTripAndRescaling) {
  std::mt19937 rng(17);
  const auto ctx = f4_twisted();
  const auto all = mf::polys_below_degree(ctx, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const SkewPoly f = all[rng() % all.size()];
    if (f.degree() < 1) continue;
    for (const auto& fac : mf::enumerate_factorizations(f)) {
      mf::IdealChain chain = mf::chain_from_factorization(fac);
      EXPECT_EQ(mf::factorization_from_chain(chain), fac);
      for (std::size_t i = 1; i + 1 < chain.generators.size(); ++i) {
        chain.generators[i] = chain.generators[i].scale_right(1 + rng() % 3);
      }
      EXPECT_EQ(mf::factorization_from_chain(chain), fac);
    }
  }
}

TEST(Chains, RejectsNonDescendingChains) {
  const auto ctx = f4_twisted();
  const mf::IdealChain bad{{poly(ctx, {1}), poly(ctx, {1, 1}), poly(ctx, {2, 1})}};
  EXPECT_THROW(mf::factorization_from_chain(bad), mf::NotDivisible);
}

TEST(Poset, SubmoduleCounts) {
  struct Case {
    F4Poly f;
    unsigned power;
    std::size_t submodules;
  };
  for (const Case& c : {Case{{0, 0, 1}, 1, 3}, Case{{1, 0, 1}, 1, 5}, Case{{2, 0, 1}, 1, 2},
                        Case{{1, 0, 1}, 0, 3}}) {
    const mf::DivisorPoset p = mf::divisor_poset(poly(mf::skew_context(2, 2, c.power), c.f));
    EXPECT_EQ(p.submodules.size(), c.submodules);
    EXPECT_TRUE(p.bijective);
    EXPECT_TRUE(p.order_preserving);
    EXPECT_EQ(mf::pi_exact_poset(poly(mf::skew_context(2, 2, c.power), c.f)).status(),
              mf::Status::Verified);
  }
}

TEST(Closure, LinearGeneratorsAndTheirLcm) {
  const auto ctx = f4_twisted();
  const SkewPoly a = poly(ctx, {1, 1}), b = poly(ctx, {2, 1});  // x - 1, x - t
  const SkewPoly c = mf::left_lcm_intersection(a, b);
  EXPECT_EQ(c.degree(), 2);
  EXPECT_EQ(mf::sum_closure_check(a, b, c).status(), mf::Status::Verified);
  EXPECT_THROW(mf::sum_closure_check(a, b, poly(ctx, {1, 0, 0, 1})), mf::PreconditionFailed);
}

TEST(Closure, RandomTriples) {
  std::mt19937 rng(23);
  const auto ctx = f4_twisted();
  for (int trial = 0; trial < 10; ++trial) {
    const auto cs = mf::monic_of_degree(ctx, 2 + trial % 2);
    const SkewPoly c = cs[rng() % cs.size()];
    std::vector<SkewPoly> divisors;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(c.degree()); ++k) {
      for (const SkewPoly& d : mf::monic_left_divisors(c, k)) divisors.push_back(d);
    }
    const SkewPoly a = divisors[rng() % divisors.size()].scale_right(1 + rng() % 3);
    const SkewPoly b = divisors[rng() % divisors.size()].scale_right(1 + rng() % 3);
    EXPECT_EQ(mf::sum_closure_check(a, b, c).status(), mf::Status::Verified);
  }
}

TEST(Parsing, CoefficientsAndFullSpec) {
  const auto ctx = f4_twisted();
  EXPECT_EQ(mf::parse_coefficients(ctx, "[[0,1],0,1]"), poly(ctx, {2, 0, 1}));
  const SkewPoly f = poly(ctx, {3, 2, 1});
  EXPECT_EQ(mf::parse_skew_poly(f.format()), f);
  EXPECT_EQ(f.pretty(), "x^2 + tx + (t+1)");
  EXPECT_THROW(mf::parse_coefficients(ctx, "[1,"), mf::ParseError);
}

}  // namespace
