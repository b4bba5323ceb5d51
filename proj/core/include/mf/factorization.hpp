#pragma once

#include <vector>

#include "mf/skew_poly.hpp"

namespace mf {

// Monic g of degree d with f = q * g (right divisors) or f = g * q (left
// divisors). Exhaustive over the q^d candidates; SizeExceeded above 10^6.
std::vector<SkewPoly> monic_right_divisors(const SkewPoly& f, std::size_t d);
std::vector<SkewPoly> monic_left_divisors(const SkewPoly& f, std::size_t d);

// deg f >= 1 and f has no factorization into two non-units.
bool is_irreducible(const SkewPoly& f);

// base = factors[0] * ... * factors[n-1] * unit, every factor monic of degree
// >= 1. This is the canonical representative of a class of factorizations up
// to insertion of units.
struct Factorization {
  std::vector<SkewPoly> factors;
  FieldElem unit = 1;
  SkewPoly base;

  bool is_maximal() const;  // every factor irreducible
  std::string pretty() const;
  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.factors == b.factors && a.unit == b.unit && a.base == b.base;
  }
};

// Brings arbitrary non-unit factors with product `base` into canonical form
// by passing units from left to right.
Factorization canonicalize(const SkewPoly& base, const std::vector<SkewPoly>& factors);

// Every class for deg f >= 1, sorted by length and then by factors.
std::vector<Factorization> enumerate_factorizations(const SkewPoly& f);
std::vector<Factorization> maximal_factorizations(const SkewPoly& f);

// y_0 = 1, y_i = x_1 ... x_i, so aR = y_n R < ... < y_1 R < y_0 R = R.
struct IdealChain {
  std::vector<SkewPoly> generators;
};

IdealChain chain_from_factorization(const Factorization& f);
// x_i is the left quotient y_{i-1}^{-1} y_i. Throws NotDivisible if the chain
// is not strictly descending or y_0 is not a unit.
Factorization factorization_from_chain(const IdealChain& chain);

}  // namespace mf
