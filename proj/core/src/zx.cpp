#include "mf/zx.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "mf/error.hpp"

namespace mf {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw BoundExceeded("coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw BoundExceeded("coefficient overflow");
  return r;
}

long degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

std::int64_t content(const ZPoly& p) {
  std::int64_t g = 0;
  for (std::int64_t c : p) g = std::gcd(g, c);
  return g;
}

ZPoly primitive(ZPoly p) {
  const std::int64_t c = content(p);
  if (c == 0) return {};
  const std::int64_t sign = p.back() < 0 ? -1 : 1;
  for (auto& v : p) v = v / c * sign;
  return p;
}

// Pseudo-remainder of a by b.
ZPoly pseudo_remainder(ZPoly r, const ZPoly& b) {
  const std::int64_t lb = b.back();
  while (!r.empty() && degree(r) >= degree(b)) {
    const std::int64_t lr = r.back();
    const std::size_t shift = static_cast<std::size_t>(degree(r) - degree(b));
    for (auto& v : r) v = checked_mul(v, lb);
    for (std::size_t i = 0; i < b.size(); ++i) {
      r[i + shift] = checked_add(r[i + shift], -checked_mul(lr, b[i]));
    }
    r = zx_trim(std::move(r));
  }
  return r;
}

std::int64_t eval_mod(const ZPoly& p, std::int64_t t, std::int64_t m) {
  std::int64_t v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = ((v * t + p[i]) % m + m) % m;
  return v;
}

bool within(const ZPoly& p, const ZxBounds& bounds) {
  if (p.size() > bounds.max_degree + 1) return false;
  for (std::int64_t c : p) {
    if (std::llabs(c) > bounds.max_coeff) return false;
  }
  return true;
}

std::vector<std::int64_t> as_witness(const ZPoly& p) { return {p.begin(), p.end()}; }

}  // namespace

ZPoly zx_trim(ZPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

ZPoly zx_add(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = checked_add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  return zx_trim(std::move(c));
}

ZPoly zx_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = checked_add(c[i + j], checked_mul(a[i], b[j]));
  }
  return zx_trim(std::move(c));
}

std::optional<ZPoly> zx_divide(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw DivisionByZero("division by the zero polynomial");
  ZPoly r = zx_trim(a);
  if (r.size() < b.size()) {
    if (r.empty()) return ZPoly{};
    return std::nullopt;
  }
  ZPoly q(r.size() - b.size() + 1, 0);
  while (!r.empty() && degree(r) >= degree(b)) {
    if (r.back() % b.back() != 0) return std::nullopt;
    const std::int64_t c = r.back() / b.back();
    const std::size_t shift = static_cast<std::size_t>(degree(r) - degree(b));
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] = checked_add(r[i + shift], -checked_mul(c, b[i]));
    r = zx_trim(std::move(r));
  }
  if (!r.empty()) return std::nullopt;
  return zx_trim(std::move(q));
}

ZPoly zx_gcd(const ZPoly& a, const ZPoly& b) {
  const ZPoly ta = zx_trim(a);
  const ZPoly tb = zx_trim(b);
  if (ta.empty()) return primitive(tb).empty() ? ZPoly{} : zx_mul({content(tb)}, primitive(tb));
  if (tb.empty()) return zx_mul({content(ta)}, primitive(ta));
  const std::int64_t c = std::gcd(content(ta), content(tb));
  ZPoly x = primitive(ta);
  ZPoly y = primitive(tb);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = primitive(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return zx_mul({c}, primitive(x));
}

std::string zx_format(const ZPoly& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

ZPoly zx_parse(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(), ::isspace), body.end());
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ParseError("integer polynomial must look like [c0,c1,...]");
  }
  ZPoly p;
  std::stringstream in(body.substr(1, body.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      p.push_back(std::stoll(item, &used));
      if (used != item.size()) throw ParseError("bad coefficient '" + item + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad coefficient '" + item + "'");
    }
  }
  return zx_trim(std::move(p));
}

Verdict zx_sum_principal(const ZPoly& a_in, const ZPoly& b_in, const ZxBounds& bounds) {
  const ZPoly a = zx_trim(a_in);
  const ZPoly b = zx_trim(b_in);
  if (a.empty() || b.empty()) throw PreconditionFailed("a and b must be nonzero");
  if (!within(a, bounds) || !within(b, bounds)) {
    return Verdict::unknown(bounds.max_degree, "inputs exceed the degree or height bound");
  }
  try {
    if (zx_divide(b, a)) return Verdict::verified_with(as_witness(a), "b lies in aZ[x]");
    if (zx_divide(a, b)) return Verdict::verified_with(as_witness(b), "a lies in bZ[x]");
    const ZPoly g = zx_gcd(a, b);

    // A ring map Z[x] -> Z/m killing a and b but not g keeps g out of the sum.
    for (std::int64_t m = 2; m <= 16; ++m) {
      for (std::int64_t t = 0; t < m; ++t) {
        if (eval_mod(a, t, m) != 0 || eval_mod(b, t, m) != 0 || eval_mod(g, t, m) == 0) continue;
        std::vector<std::int64_t> w = as_witness(g);
        w.push_back(m);
        w.push_back(t);
        return Verdict::falsified(std::move(w), "gcd " + zx_format(g) + " maps to a nonzero class in Z/" +
                                                    std::to_string(m) + " at x = " + std::to_string(t) +
                                                    " while a and b vanish");
      }
    }

    // g = a u + b v with small cofactors.
    constexpr std::int64_t kCofactor = 4;
    for (std::int64_t u0 = -kCofactor; u0 <= kCofactor; ++u0)
      for (std::int64_t u1 = -kCofactor; u1 <= kCofactor; ++u1)
        for (std::int64_t v0 = -kCofactor; v0 <= kCofactor; ++v0)
          for (std::int64_t v1 = -kCofactor; v1 <= kCofactor; ++v1) {
            const ZPoly s = zx_add(zx_mul(a, zx_trim({u0, u1})), zx_mul(b, zx_trim({v0, v1})));
            if (s == g) {
              return Verdict::verified_with(as_witness(g), "gcd = a*" + zx_format(zx_trim({u0, u1})) +
                                                               " + b*" + zx_format(zx_trim({v0, v1})));
            }
          }
    return Verdict::unknown(kCofactor, "no obstruction modulo m <= 16 and no cofactors of height <= 4");
  } catch (const BoundExceeded& e) {
    return Verdict::unknown(bounds.max_coeff, e.what());
  }
}

}  // namespace mf
