#include "mf/galois_field.hpp"

#include <map>
#include <mutex>

#include "mf/error.hpp"

namespace mf {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Product of polynomials over F_p with coefficient vectors low to high.
std::vector<unsigned> poly_mul_mod_p(const std::vector<unsigned>& a,
                                     const std::vector<unsigned>& b, unsigned p) {
  std::vector<unsigned> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

}  // namespace

GaloisField::GaloisField(unsigned p, unsigned n) : p_(p), n_(n) {
  if (!is_prime(p) || p > 13) throw PreconditionFailed("characteristic must be a prime <= 13");
  if (n < 1 || n > 3) throw PreconditionFailed("field degree must be 1, 2 or 3");
  q_ = 1;
  for (unsigned i = 0; i < n; ++i) q_ *= p;
  if (q_ > 729) throw PreconditionFailed("field order must be at most 729");

  // Degree <= 3: irreducible iff no root in F_p.
  if (n == 1) {
    modulus_ = {0};
  } else {
    for (std::size_t code = 0; code < q_; ++code) {
      std::vector<unsigned> c(n);
      std::size_t rest = code;
      for (unsigned i = 0; i < n; ++i) {
        c[i] = rest % p;
        rest /= p;
      }
      bool has_root = false;
      for (unsigned x = 0; x < p && !has_root; ++x) {
        unsigned v = 1;
        for (unsigned i = n; i-- > 0;) v = (v * x + c[i]) % p;  // Horner on x^n + ...
        has_root = v == 0;
      }
      if (!has_root) {
        modulus_ = c;
        break;
      }
    }
  }

  auto reduce = [&](std::vector<unsigned> v) {
    // t^n = -(c_0 + ... + c_{n-1} t^{n-1})
    for (std::size_t k = v.size(); k-- > n;) {
      const unsigned top = v[k];
      if (top == 0) continue;
      v[k] = 0;
      for (unsigned i = 0; i < n; ++i) {
        v[k - n + i] = (v[k - n + i] + (p - modulus_[i]) * top) % p;
      }
    }
    v.resize(n, 0);
    return v;
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (FieldElem a = 0; a < q_; ++a) {
    const auto da = digits(a);
    std::vector<unsigned> na(n);
    for (unsigned i = 0; i < n; ++i) na[i] = (p - da[i]) % p;
    neg_[a] = from_digits(na);
    for (FieldElem b = 0; b < q_; ++b) {
      const auto db = digits(b);
      std::vector<unsigned> s(n);
      for (unsigned i = 0; i < n; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = from_digits(s);
      mul_[a * q_ + b] = from_digits(reduce(poly_mul_mod_p(da, db, p)));
    }
  }
  inv_.assign(q_, 0);
  for (FieldElem a = 1; a < q_; ++a) {
    for (FieldElem b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] == 0) throw AxiomViolation("F_" + name() + ": " + format(a) + " has no inverse");
  }
  frob_.resize(n * q_);
  for (unsigned k = 0; k < n; ++k) {
    std::uint64_t e = 1;
    for (unsigned i = 0; i < k; ++i) e *= p;
    for (FieldElem a = 0; a < q_; ++a) frob_[k * q_ + a] = pow(a, e);
  }
  if (q_ <= 81) verify_axioms();
}

FieldElem GaloisField::inv(FieldElem a) const {
  if (a == 0) throw DivisionByZero("inverse of 0 in F_" + name());
  return inv_[a];
}

FieldElem GaloisField::pow(FieldElem a, std::uint64_t e) const {
  FieldElem result = 1;
  FieldElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElem GaloisField::from_int(long v) const {
  const long m = static_cast<long>(p_);
  return static_cast<FieldElem>(((v % m) + m) % m);
}

std::vector<unsigned> GaloisField::digits(FieldElem a) const {
  std::vector<unsigned> d(n_);
  for (unsigned i = 0; i < n_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FieldElem GaloisField::from_digits(const std::vector<unsigned>& d) const {
  if (d.size() > n_) throw ParseError("field element has more than " + std::to_string(n_) + " digits");
  FieldElem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= p_) throw ParseError("field digit out of range");
    a = a * p_ + d[i];
  }
  return a;
}

std::string GaloisField::format(FieldElem a) const {
  const auto d = digits(a);
  std::string s = "[";
  for (unsigned i = 0; i < n_; ++i) {
    if (i > 0) s += ",";
    s += std::to_string(d[i]);
  }
  return s + "]";
}

std::string GaloisField::name() const { return std::to_string(p_) + "^" + std::to_string(n_); }

void GaloisField::verify_axioms() const {
  for (FieldElem a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || add(a, neg(a)) != 0) {
      throw AxiomViolation("F_" + name() + ": identity laws fail at " + format(a));
    }
    if (a != 0 && mul(a, inv(a)) != 1) throw AxiomViolation("F_" + name() + ": inverse fails");
    for (FieldElem b = 0; b < q_; ++b) {
      if (mul(a, b) != mul(b, a) || add(a, b) != add(b, a)) {
        throw AxiomViolation("F_" + name() + ": not commutative");
      }
      for (FieldElem c = 0; c < q_; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)) ||
            mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
          throw AxiomViolation("F_" + name() + ": associativity or distributivity fails");
        }
      }
    }
    if (frobenius(add(a, a), 1) != add(frobenius(a, 1), frobenius(a, 1))) {
      throw AxiomViolation("F_" + name() + ": Frobenius is not additive");
    }
  }
}

std::shared_ptr<const GaloisField> galois_field(unsigned p, unsigned n) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const GaloisField>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{p, n}];
  if (!slot) slot = std::make_shared<const GaloisField>(p, n);
  return slot;
}

}  // namespace mf
