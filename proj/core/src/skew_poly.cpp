#include "mf/skew_poly.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "mf/error.hpp"
#include "mf/limits.hpp"

namespace mf {

SkewContext::SkewContext(std::shared_ptr<const GaloisField> field, unsigned frobenius_power)
    : field_(std::move(field)), power_(frobenius_power % field_->degree()) {}

FieldElem SkewContext::sigma(FieldElem a, long k) const {
  const long n = static_cast<long>(field_->degree());
  const long e = ((static_cast<long>(power_) * k) % n + n) % n;
  return field_->frobenius(a, static_cast<unsigned>(e));
}

std::string SkewContext::describe() const {
  return "field=" + field_->name() + ";sigma=frob^" + std::to_string(power_);
}

std::shared_ptr<const SkewContext> skew_context(unsigned p, unsigned n, unsigned frobenius_power) {
  static std::mutex mutex;
  static std::map<std::pair<std::pair<unsigned, unsigned>, unsigned>,
                  std::shared_ptr<const SkewContext>>
      cache;
  auto field = galois_field(p, n);
  const std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{{p, n}, frobenius_power % n}];
  if (!slot) slot = std::make_shared<const SkewContext>(field, frobenius_power);
  return slot;
}

SkewPoly::SkewPoly(std::shared_ptr<const SkewContext> ctx, std::vector<FieldElem> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (FieldElem c : coeffs_) {
    if (c >= ctx_->field().order()) throw PreconditionFailed("coefficient outside the field");
  }
  trim();
}

SkewPoly SkewPoly::constant(std::shared_ptr<const SkewContext> ctx, FieldElem c) {
  return SkewPoly(std::move(ctx), {c});
}

SkewPoly SkewPoly::monomial(std::shared_ptr<const SkewContext> ctx, FieldElem c,
                            std::size_t degree) {
  std::vector<FieldElem> v(degree + 1, 0);
  v[degree] = c;
  return SkewPoly(std::move(ctx), std::move(v));
}

void SkewPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldElem SkewPoly::leading() const {
  if (is_zero()) throw PreconditionFailed("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  const GaloisField& f = ctx_->field();
  std::vector<FieldElem> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(coeff(i), o.coeff(i));
  return SkewPoly(ctx_, std::move(c));
}

SkewPoly SkewPoly::operator-() const {
  std::vector<FieldElem> c(coeffs_);
  for (auto& v : c) v = ctx_->field().neg(v);
  return SkewPoly(ctx_, std::move(c));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
  if (is_zero() || o.is_zero()) return SkewPoly(ctx_);
  const GaloisField& f = ctx_->field();
  std::vector<FieldElem> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      const FieldElem term = f.mul(coeffs_[i], ctx_->sigma(o.coeffs_[j], static_cast<long>(i)));
      c[i + j] = f.add(c[i + j], term);
    }
  }
  return SkewPoly(ctx_, std::move(c));
}

SkewPoly SkewPoly::scale_left(FieldElem c) const { return constant(ctx_, c) * *this; }
SkewPoly SkewPoly::scale_right(FieldElem c) const { return *this * constant(ctx_, c); }

FieldElem SkewPoly::right_normalizer() const {
  return ctx_->sigma(ctx_->field().inv(leading()), -degree());
}

SkewPoly SkewPoly::monic_right() const { return scale_right(right_normalizer()); }

std::string SkewPoly::format() const {
  std::string s = ctx_->describe() + ";coeffs=[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) s += ",";
    s += ctx_->field().format(coeffs_[i]);
  }
  return s + "]";
}

namespace {

std::string field_pretty(const GaloisField& f, FieldElem a) {
  const auto d = f.digits(a);
  std::string s;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || d[i] != 1) s += std::to_string(d[i]);
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string SkewPoly::pretty() const {
  if (is_zero()) return "0";
  const GaloisField& f = ctx_->field();
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElem c = coeffs_[i];
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    std::string cs = field_pretty(f, c);
    const bool sum = cs.find('+') != std::string::npos;
    if (i == 0) {
      s += (sum && coeffs_.size() > 1) ? "(" + cs + ")" : cs;
      continue;
    }
    if (c != 1) s += sum ? "(" + cs + ")" : cs;
    s += "x";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
  return *a.ctx_ == *b.ctx_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const SkewPoly& a, const SkewPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

namespace {

class CoeffParser {
 public:
  CoeffParser(const std::string& text, const GaloisField& field) : text_(text), field_(field) {}

  std::vector<FieldElem> parse_list() {
    std::vector<FieldElem> out;
    expect('[');
    skip();
    if (peek() == ']') {
      ++pos_;
      return out;
    }
    while (true) {
      skip();
      out.push_back(peek() == '[' ? parse_vector() : field_.from_int(parse_int()));
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      return out;
    }
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) throw ParseError("trailing text in coefficient list '" + text_ + "'");
  }

 private:
  FieldElem parse_vector() {
    expect('[');
    std::vector<unsigned> digits;
    while (true) {
      skip();
      const long v = parse_int();
      if (v < 0) throw ParseError("field digits must be non-negative");
      digits.push_back(static_cast<unsigned>(v));
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      break;
    }
    if (digits.size() != field_.degree()) {
      throw ParseError("field element needs " + std::to_string(field_.degree()) + " digits");
    }
    return field_.from_digits(digits);
  }
  long parse_int() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(text_[pos_ - 1]))) {
      throw ParseError("expected an integer in '" + text_ + "'");
    }
    return std::stol(text_.substr(start, pos_ - start));
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "' in '" + text_ + "'");
    ++pos_;
  }

  const std::string& text_;
  const GaloisField& field_;
  std::size_t pos_ = 0;
};

unsigned parse_unsigned(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size()) throw ParseError("bad " + what + " '" + s + "'");
    return static_cast<unsigned>(v);
  } catch (const std::logic_error&) {
    throw ParseError("bad " + what + " '" + s + "'");
  }
}

}  // namespace

SkewPoly parse_coefficients(std::shared_ptr<const SkewContext> ctx, const std::string& text) {
  CoeffParser parser(text, ctx->field());
  auto coeffs = parser.parse_list();
  parser.finish();
  return SkewPoly(std::move(ctx), std::move(coeffs));
}

SkewPoly parse_skew_poly(const std::string& text) {
  const std::string field_key = "field=";
  const std::string sigma_key = ";sigma=frob^";
  const std::string coeffs_key = ";coeffs=";
  const auto f = text.find(field_key);
  const auto s = text.find(sigma_key);
  const auto c = text.find(coeffs_key);
  if (f != 0 || s == std::string::npos || c == std::string::npos || s > c) {
    throw ParseError("polynomial must look like field=p^n;sigma=frob^i;coeffs=[...]");
  }
  const std::string field = text.substr(field_key.size(), s - field_key.size());
  const auto caret = field.find('^');
  if (caret == std::string::npos) throw ParseError("field must be written p^n");
  const unsigned p = parse_unsigned(field.substr(0, caret), "characteristic");
  const unsigned n = parse_unsigned(field.substr(caret + 1), "field degree");
  const unsigned i =
      parse_unsigned(text.substr(s + sigma_key.size(), c - s - sigma_key.size()), "frobenius power");
  return parse_coefficients(skew_context(p, n, i), text.substr(c + coeffs_key.size()));
}

DivMod right_divmod(const SkewPoly& a, const SkewPoly& b) {
  if (b.is_zero()) throw DivisionByZero("right division by the zero polynomial");
  const auto& ctx = a.context_ptr();
  const GaloisField& f = ctx->field();
  SkewPoly q(ctx);
  SkewPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const long k = r.degree() - b.degree();
    const FieldElem c = f.mul(r.leading(), f.inv(ctx->sigma(b.leading(), k)));
    const SkewPoly term = SkewPoly::monomial(ctx, c, static_cast<std::size_t>(k));
    q = q + term;
    r = r - term * b;
  }
  return {q, r};
}

DivMod left_divmod(const SkewPoly& a, const SkewPoly& b) {
  if (b.is_zero()) throw DivisionByZero("left division by the zero polynomial");
  const auto& ctx = a.context_ptr();
  const GaloisField& f = ctx->field();
  SkewPoly q(ctx);
  SkewPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const long k = r.degree() - b.degree();
    const FieldElem c = ctx->sigma(f.mul(f.inv(b.leading()), r.leading()), -b.degree());
    const SkewPoly term = SkewPoly::monomial(ctx, c, static_cast<std::size_t>(k));
    q = q + term;
    r = r - b * term;
  }
  return {q, r};
}

bool in_right_ideal(const SkewPoly& a, const SkewPoly& generator) {
  if (generator.is_zero()) return a.is_zero();
  return left_divmod(a, generator).remainder.is_zero();
}

SkewPoly right_gcd_sum(const SkewPoly& a, const SkewPoly& b) {
  if (a.is_zero() && b.is_zero()) throw PreconditionFailed("gcd of two zero polynomials");
  SkewPoly x = a;
  SkewPoly y = b;
  while (!y.is_zero()) {
    SkewPoly r = left_divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic_right();
}

SkewPoly left_lcm_intersection(const SkewPoly& a, const SkewPoly& b) {
  if (a.is_zero() || b.is_zero()) throw PreconditionFailed("lcm needs nonzero polynomials");
  const auto& ctx = a.context_ptr();
  // r_i = a s_i + b t_i throughout.
  SkewPoly r0 = a, r1 = b;
  SkewPoly s0 = SkewPoly::constant(ctx, 1), s1(ctx);
  while (!r1.is_zero()) {
    const DivMod dm = left_divmod(r0, r1);
    SkewPoly s2 = s0 - s1 * dm.quotient;
    r0 = std::move(r1);
    r1 = dm.remainder;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Now 0 = a s1 + b t1, so a s1 lies in aR cap bR.
  return (a * s1).monic_right();
}

std::vector<SkewPoly> polys_below_degree(const std::shared_ptr<const SkewContext>& ctx,
                                         std::size_t d) {
  const std::size_t q = ctx->field().order();
  std::size_t count = 1;
  for (std::size_t i = 0; i < d; ++i) {
    count *= q;
    require_within(count, size_cap(std::size_t{1} << 20), "polynomials below degree " + std::to_string(d));
  }
  std::vector<SkewPoly> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<FieldElem> c(d);
    std::size_t rest = code;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = static_cast<FieldElem>(rest % q);
      rest /= q;
    }
    out.emplace_back(ctx, std::move(c));
  }
  return out;
}

std::vector<SkewPoly> monic_of_degree(const std::shared_ptr<const SkewContext>& ctx,
                                      std::size_t d) {
  std::vector<SkewPoly> out;
  for (const SkewPoly& low : polys_below_degree(ctx, d)) {
    std::vector<FieldElem> c = low.coeffs();
    c.resize(d + 1, 0);
    c[d] = 1;
    out.emplace_back(ctx, std::move(c));
  }
  return out;
}

}  // namespace mf
