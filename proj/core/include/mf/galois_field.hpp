#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mf {

using FieldElem = std::uint32_t;

// F_q with q = p^n <= 729, p prime <= 13, n <= 3. An element a_0 + a_1 t + ... is
// stored as the index a_0 + a_1 p + a_2 p^2, so 0 and 1 are the field's zero
// and one. The defining polynomial is the monic irreducible of degree n with
// the smallest coefficient index (x^2 + x + 1 over F_2, x^2 + 1 over F_3).
class GaloisField {
 public:
  GaloisField(unsigned p, unsigned n);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::size_t order() const { return q_; }
  // c_0..c_{n-1} of the defining polynomial x^n + c_{n-1} x^{n-1} + ... + c_0.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  FieldElem add(FieldElem a, FieldElem b) const { return add_[a * q_ + b]; }
  FieldElem neg(FieldElem a) const { return neg_[a]; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const { return mul_[a * q_ + b]; }
  // Throws DivisionByZero for 0.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  // a^(p^k); k is reduced mod n.
  FieldElem frobenius(FieldElem a, unsigned k) const { return frob_[(k % n_) * q_ + a]; }

  FieldElem from_int(long v) const;
  std::vector<unsigned> digits(FieldElem a) const;
  FieldElem from_digits(const std::vector<unsigned>& d) const;
  std::string format(FieldElem a) const;  // "[a0,a1,...]"
  std::string name() const;               // "p^n"

  // Exhaustive field axioms (used for q <= 81).
  void verify_axioms() const;

 private:
  unsigned p_;
  unsigned n_;
  std::size_t q_;
  std::vector<unsigned> modulus_;
  std::vector<FieldElem> add_;
  std::vector<FieldElem> neg_;
  std::vector<FieldElem> mul_;
  std::vector<FieldElem> inv_;
  std::vector<FieldElem> frob_;
};

// Shared immutable field instances, one per (p, n).
std::shared_ptr<const GaloisField> galois_field(unsigned p, unsigned n);

}  // namespace mf
