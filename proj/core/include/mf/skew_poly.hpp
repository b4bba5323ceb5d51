#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mf/galois_field.hpp"

namespace mf {

// F_q[x; sigma] with sigma = Frobenius^i, so x a = sigma(a) x.
class SkewContext {
 public:
  SkewContext(std::shared_ptr<const GaloisField> field, unsigned frobenius_power);

  const GaloisField& field() const { return *field_; }
  std::shared_ptr<const GaloisField> field_ptr() const { return field_; }
  unsigned frobenius_power() const { return power_; }
  bool is_commutative() const { return power_ % field_->degree() == 0; }

  // sigma^k(a) for any integer k (negative k uses the inverse).
  FieldElem sigma(FieldElem a, long k = 1) const;

  std::string describe() const;  // "field=p^n;sigma=frob^i"
  friend bool operator==(const SkewContext& a, const SkewContext& b) {
    return a.field_ == b.field_ && a.power_ % a.field_->degree() == b.power_ % b.field_->degree();
  }

 private:
  std::shared_ptr<const GaloisField> field_;
  unsigned power_;
};

std::shared_ptr<const SkewContext> skew_context(unsigned p, unsigned n, unsigned frobenius_power);

class SkewPoly {
 public:
  SkewPoly(std::shared_ptr<const SkewContext> ctx, std::vector<FieldElem> coeffs = {});

  static SkewPoly constant(std::shared_ptr<const SkewContext> ctx, FieldElem c);
  static SkewPoly monomial(std::shared_ptr<const SkewContext> ctx, FieldElem c, std::size_t degree);

  const SkewContext& context() const { return *ctx_; }
  const std::shared_ptr<const SkewContext>& context_ptr() const { return ctx_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  FieldElem leading() const;
  FieldElem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool is_unit() const { return degree() == 0; }

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator-() const;
  SkewPoly operator*(const SkewPoly& o) const;
  SkewPoly scale_left(FieldElem c) const;   // c * f
  SkewPoly scale_right(FieldElem c) const;  // f * c

  // f * u is monic for the returned unit u (f != 0).
  FieldElem right_normalizer() const;
  // f * right_normalizer(): the monic generator of fR.
  SkewPoly monic_right() const;

  std::string format() const;  // field=...;sigma=...;coeffs=[[..],..]
  std::string pretty() const;  // x^2 + [1,1]x + [1,0]

  friend bool operator==(const SkewPoly& a, const SkewPoly& b);
  friend bool operator<(const SkewPoly& a, const SkewPoly& b);

 private:
  void trim();
  std::shared_ptr<const SkewContext> ctx_;
  std::vector<FieldElem> coeffs_;
};

SkewPoly parse_skew_poly(const std::string& text);
// Coefficient list "[c0,c1,...]" where each c is an integer (reduced into F_p)
// or a digit vector "[a0,a1,...]".
SkewPoly parse_coefficients(std::shared_ptr<const SkewContext> ctx, const std::string& text);

struct DivMod {
  SkewPoly quotient;
  SkewPoly remainder;
};

// a = q * b + r, deg r < deg b.
DivMod right_divmod(const SkewPoly& a, const SkewPoly& b);
// a = b * q + r, deg r < deg b. Membership a in bR is r = 0.
DivMod left_divmod(const SkewPoly& a, const SkewPoly& b);

// Monic d with aR + bR = dR (Euclid on left division).
SkewPoly right_gcd_sum(const SkewPoly& a, const SkewPoly& b);
// Monic m with aR cap bR = mR (extended Euclid cofactors).
SkewPoly left_lcm_intersection(const SkewPoly& a, const SkewPoly& b);

bool in_right_ideal(const SkewPoly& a, const SkewPoly& generator);

// Every polynomial of degree < d in index order (coefficient index base q,
// c0 least significant), and every monic polynomial of degree d.
std::vector<SkewPoly> polys_below_degree(const std::shared_ptr<const SkewContext>& ctx,
                                         std::size_t d);
std::vector<SkewPoly> monic_of_degree(const std::shared_ptr<const SkewContext>& ctx,
                                      std::size_t d);

}  // namespace mf
