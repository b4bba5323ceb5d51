#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mf/report.hpp"
#include "mf/ring.hpp"
#include "mf/verdict.hpp"

namespace mf {

// Coordinates with respect to the order basis.
using OrderVec = std::array<std::int64_t, 4>;
using Mat4 = std::array<OrderVec, 4>;

// The order Z<1, i, (i+j)/2, (1+k)/2> in the quaternion algebra (-1,-11 / Q).
// Arithmetic runs on integer structure constants in order coordinates.
class OrderContext {
 public:
  // Computes the structure constants from i^2 = -1, j^2 = -11, ij = k = -ji and
  // verifies integrality (IntegralityViolation), associativity on all 64 basis
  // triples, the identity and positive definiteness of nrd.
  OrderContext();

  std::int64_t a() const { return -1; }
  std::int64_t b() const { return -11; }
  // e_i e_j = sum_k table()[i][j][k] e_k
  const std::array<std::array<OrderVec, 4>, 4>& table() const { return table_; }
  // Gram matrix of 2 nrd in order coordinates.
  const Mat4& gram2() const { return gram2_; }

  OrderVec one() const { return {1, 0, 0, 0}; }
  OrderVec basis(std::size_t i) const;
  OrderVec mul(const OrderVec& x, const OrderVec& y) const;
  OrderVec conj(const OrderVec& x) const;
  std::int64_t nrd(const OrderVec& x) const;

  // Doubled quaternion coordinates (2w, 2x, 2y, 2z) of an element.
  static OrderVec to_quaternion2(const OrderVec& x);
  // Inverse of to_quaternion2; IntegralityViolation outside the order.
  static OrderVec from_quaternion2(const OrderVec& q2);
  static std::string format(const OrderVec& x);  // "(c1,c2,c3,c4)"
  static std::string quaternion_string(const OrderVec& x);  // "1/2(1+5k)" style

 private:
  std::array<std::array<OrderVec, 4>, 4> table_{};
  Mat4 gram2_{};
};

// Shared instance.
const OrderContext& build_order();

// A full-rank sublattice of the order in Hermite form: upper triangular rows,
// positive pivots, entries above a pivot reduced into [0, pivot).
class OrderLattice {
 public:
  // Any spanning set of rank 4; PreconditionFailed otherwise.
  explicit OrderLattice(const std::vector<OrderVec>& generators);
  static OrderLattice whole();
  static OrderLattice scaled_order(std::int64_t m);  // mR

  const Mat4& basis() const { return basis_; }
  std::int64_t index() const;
  bool contains(const OrderVec& v) const;
  bool contains(const OrderLattice& other) const;
  std::string format() const;
  friend bool operator==(const OrderLattice&, const OrderLattice&) = default;

 private:
  Mat4 basis_{};
};

Mat4 hermite_form(const std::vector<OrderVec>& generators);

bool is_right_ideal(const OrderLattice& lattice);
OrderLattice principal_right_ideal(const OrderVec& g);  // gR

// Every x in L with nrd(x) = n, sorted; BoundExceeded for n > 10^4.
std::vector<OrderVec> elements_of_norm(const OrderLattice& lattice, std::int64_t n);

// For a right ideal of index m^2: Verified with a generator g (nrd g = m,
// gR = L) or Falsified after the complete norm-m scan, witness (m, number of
// norm-m elements). PreconditionFailed otherwise.
Verdict is_principal_right_ideal(const OrderLattice& lattice);

// R/3R as a finite ring on coordinates mod 3, element index
// c1*27 + c2*9 + c3*3 + c4.
struct ModPReduction {
  std::int64_t p = 3;
  FiniteRing ring;

  Elem reduce(const OrderVec& x) const;
  OrderVec lift(Elem e) const;  // coordinates in [0, p)
  // L/pR for L containing pR.
  ElementSet image(const OrderLattice& lattice) const;
  // Lattice generated by lifts of the members and pR.
  OrderLattice preimage(const ElementSet& subset) const;
};

const ModPReduction& mod3_reduction();

// The ideals I and J of the presentation-dependence example, as Z-spans.
std::vector<OrderVec> example_ideal_i();
std::vector<OrderVec> example_ideal_j();

// Steps (i)-(iv) of the presentation-dependence example plus the composition
// series and swapped-role checks, with all witnesses.
Report verify_presentation_dependence();

}  // namespace mf
