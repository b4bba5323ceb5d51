#include "mf/quat_order.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "mf/error.hpp"
#include "mf/ring_ops.hpp"

namespace mf {

namespace {

// Hamilton-style product of doubled quaternion coordinates; the result is
// four times the product of the quaternions they represent.
OrderVec quaternion_product4(const OrderVec& p, const OrderVec& q, std::int64_t a, std::int64_t b) {
  const auto [w, x, y, z] = p;
  const auto [w2, x2, y2, z2] = q;
  return {w * w2 + a * x * x2 + b * y * y2 - a * b * z * z2,
          w * x2 + x * w2 - b * (y * z2 - z * y2),
          w * y2 + y * w2 + a * (x * z2 - z * x2),
          w * z2 + z * w2 + x * y2 - y * x2};
}

OrderVec add_scaled(OrderVec v, const OrderVec& w, std::int64_t c) {
  for (std::size_t i = 0; i < 4; ++i) v[i] += c * w[i];
  return v;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Determinant of the leading k x k block by fraction-free elimination.
std::int64_t leading_minor(Mat4 m, std::size_t k) {
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && m[p][c] == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < k; ++r) {
      for (std::size_t j = c + 1; j < k; ++j) {
        m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
      }
      m[r][c] = 0;
    }
    prev = m[c][c];
  }
  return sign * m[k - 1][k - 1];
}

}  // namespace

OrderVec OrderContext::basis(std::size_t i) const {
  OrderVec v{};
  v.at(i) = 1;
  return v;
}

OrderVec OrderContext::to_quaternion2(const OrderVec& c) {
  return {2 * c[0] + c[3], 2 * c[1] + c[2], c[2], c[3]};
}

OrderVec OrderContext::from_quaternion2(const OrderVec& q) {
  const std::int64_t w = q[0] - q[3];
  const std::int64_t x = q[1] - q[2];
  if (w % 2 != 0 || x % 2 != 0) {
    throw IntegralityViolation("doubled quaternion " + format(q) + " lies outside the order");
  }
  return {w / 2, x / 2, q[2], q[3]};
}

OrderVec OrderContext::mul(const OrderVec& x, const OrderVec& y) const {
  OrderVec out{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (y[j] == 0) continue;
      out = add_scaled(out, table_[i][j], x[i] * y[j]);
    }
  }
  return out;
}

OrderVec OrderContext::conj(const OrderVec& x) const {
  const OrderVec q = to_quaternion2(x);
  return from_quaternion2({q[0], -q[1], -q[2], -q[3]});
}

std::int64_t OrderContext::nrd(const OrderVec& x) const {
  const auto [w, i, j, k] = to_quaternion2(x);
  const std::int64_t four = w * w - a() * i * i - b() * j * j + a() * b() * k * k;
  if (four % 4 != 0) throw IntegralityViolation("reduced norm is not integral at " + format(x));
  return four / 4;
}

std::string OrderContext::format(const OrderVec& x) {
  return "(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) +
         "," + std::to_string(x[3]) + ")";
}

std::string OrderContext::quaternion_string(const OrderVec& x) {
  OrderVec q = to_quaternion2(x);
  const bool half = std::any_of(q.begin(), q.end(), [](std::int64_t v) { return v % 2 != 0; });
  if (!half) {
    for (auto& v : q) v /= 2;
  }
  static const char* const units[] = {"", "i", "j", "k"};
  std::string s;
  for (std::size_t t = 0; t < 4; ++t) {
    if (q[t] == 0) continue;
    const std::int64_t mag = std::llabs(q[t]);
    s += q[t] < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + ");
    if (t == 0 || mag != 1) s += std::to_string(mag);
    s += units[t];
  }
  if (s.empty()) s = "0";
  return half ? "1/2(" + s + ")" : s;
}

OrderContext::OrderContext() {
  OrderContext& c = *this;
  {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const OrderVec p4 = quaternion_product4(OrderContext::to_quaternion2(c.basis(i)),
                                                OrderContext::to_quaternion2(c.basis(j)), c.a(), c.b());
        OrderVec p2{};
        for (std::size_t t = 0; t < 4; ++t) {
          if (p4[t] % 2 != 0) throw IntegralityViolation("basis product leaves the order");
          p2[t] = p4[t] / 2;
        }
        c.table_[i][j] = OrderContext::from_quaternion2(p2);
      }
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (c.mul(c.one(), c.basis(i)) != c.basis(i) || c.mul(c.basis(i), c.one()) != c.basis(i)) {
        throw IntegralityViolation("e1 is not the identity");
      }
      for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < 4; ++k) {
          const OrderVec lhs = c.mul(c.mul(c.basis(i), c.basis(j)), c.basis(k));
          const OrderVec rhs = c.mul(c.basis(i), c.mul(c.basis(j), c.basis(k)));
          if (lhs != rhs) throw IntegralityViolation("structure constants are not associative");
        }
      }
    }
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        OrderVec s = c.basis(i);
        s[j] += 1;
        c.gram2_[i][j] = i == j ? 2 * c.nrd(c.basis(i))
                                : c.nrd(s) - c.nrd(c.basis(i)) - c.nrd(c.basis(j));
      }
    }
    for (std::size_t k = 1; k <= 4; ++k) {
      if (leading_minor(c.gram2_, k) <= 0) throw IntegralityViolation("nrd is not positive definite");
    }
  }
}

const OrderContext& build_order() {
  static const OrderContext ctx;
  return ctx;
}

Mat4 hermite_form(const std::vector<OrderVec>& generators) {
  std::vector<OrderVec> rows = generators;
  std::size_t r = 0;
  for (std::size_t col = 0; col < 4; ++col) {
    while (true) {
      // Smallest nonzero entry at or below row r moves to row r.
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] != 0 &&
            (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == rows.size()) throw PreconditionFailed("generators do not span a full-rank lattice");
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        rows[i] = add_scaled(rows[i], rows[r], -(rows[i][col] / rows[r][col]));
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][col] < 0) {
      for (auto& v : rows[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      rows[i] = add_scaled(rows[i], rows[r], -floor_div(rows[i][col], rows[r][col]));
    }
    ++r;
  }
  Mat4 out{};
  std::copy_n(rows.begin(), 4, out.begin());
  return out;
}

OrderLattice::OrderLattice(const std::vector<OrderVec>& generators)
    : basis_(hermite_form(generators)) {}

OrderLattice OrderLattice::whole() { return scaled_order(1); }

OrderLattice OrderLattice::scaled_order(std::int64_t m) {
  if (m == 0) throw PreconditionFailed("0R is not full rank");
  return OrderLattice({{m, 0, 0, 0}, {0, m, 0, 0}, {0, 0, m, 0}, {0, 0, 0, m}});
}

std::int64_t OrderLattice::index() const {
  std::int64_t d = 1;
  for (std::size_t i = 0; i < 4; ++i) d *= basis_[i][i];
  return d;
}

bool OrderLattice::contains(const OrderVec& v) const {
  OrderVec rest = v;
  for (std::size_t i = 0; i < 4; ++i) {
    if (rest[i] % basis_[i][i] != 0) return false;
    rest = add_scaled(rest, basis_[i], -(rest[i] / basis_[i][i]));
  }
  return true;
}

bool OrderLattice::contains(const OrderLattice& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const OrderVec& v) { return contains(v); });
}

std::string OrderLattice::format() const {
  std::string s = "[";
  for (std::size_t i = 0; i < 4; ++i) s += (i ? "," : "") + OrderContext::format(basis_[i]);
  return s + "]";
}

bool is_right_ideal(const OrderLattice& lattice) {
  const OrderContext& ctx = build_order();
  for (const OrderVec& v : lattice.basis()) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (!lattice.contains(ctx.mul(v, ctx.basis(j)))) return false;
    }
  }
  return true;
}

OrderLattice principal_right_ideal(const OrderVec& g) {
  const OrderContext& ctx = build_order();
  std::vector<OrderVec> rows;
  for (std::size_t j = 0; j < 4; ++j) rows.push_back(ctx.mul(g, ctx.basis(j)));
  return OrderLattice(rows);
}

std::vector<OrderVec> elements_of_norm(const OrderLattice& lattice, std::int64_t n) {
  if (n < 1) throw PreconditionFailed("norm must be positive");
  if (n > 10000) throw BoundExceeded("norm enumeration is limited to n <= 10^4");
  const OrderContext& ctx = build_order();
  const Mat4& h = lattice.basis();
  // Gram matrix of 2 nrd in lattice coordinates, and its inverse diagonal.
  double g[4][4];
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l)
          s += static_cast<double>(h[i][k] * ctx.gram2()[k][l] * h[j][l]);
      g[i][j] = s;
    }
  double inv[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (std::size_t c = 0; c < 4; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < 4; ++r)
      if (std::fabs(g[r][c]) > std::fabs(g[p][c])) p = r;
    std::swap(g[p], g[c]);
    std::swap(inv[p], inv[c]);
    const double d = g[c][c];
    for (std::size_t j = 0; j < 4; ++j) {
      g[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == c) continue;
      const double f = g[r][c];
      for (std::size_t j = 0; j < 4; ++j) {
        g[r][j] -= f * g[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  // |k_i|^2 <= Q(k) (G^-1)_ii with Q = 2n.
  std::array<std::int64_t, 4> bound{};
  for (std::size_t i = 0; i < 4; ++i) {
    bound[i] = static_cast<std::int64_t>(std::floor(std::sqrt(2.0 * n * inv[i][i]) + 1e-6));
  }
  std::vector<OrderVec> out;
  for (std::int64_t k0 = -bound[0]; k0 <= bound[0]; ++k0)
    for (std::int64_t k1 = -bound[1]; k1 <= bound[1]; ++k1)
      for (std::int64_t k2 = -bound[2]; k2 <= bound[2]; ++k2)
        for (std::int64_t k3 = -bound[3]; k3 <= bound[3]; ++k3) {
          OrderVec v{};
          v = add_scaled(v, h[0], k0);
          v = add_scaled(v, h[1], k1);
          v = add_scaled(v, h[2], k2);
          v = add_scaled(v, h[3], k3);
          if (ctx.nrd(v) == n) out.push_back(v);
        }
  std::sort(out.begin(), out.end());
  return out;
}

Verdict is_principal_right_ideal(const OrderLattice& lattice) {
  if (!is_right_ideal(lattice)) throw PreconditionFailed("lattice is not a right ideal");
  const std::int64_t index = lattice.index();
  auto m = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(index))));
  if (m * m != index) throw PreconditionFailed("index " + std::to_string(index) + " is not a square");
  const std::vector<OrderVec> candidates = elements_of_norm(lattice, m);
  for (const OrderVec& g : candidates) {
    if (principal_right_ideal(g) == lattice) {
      return Verdict::verified_with({g.begin(), g.end()},
                                    "generator " + OrderContext::quaternion_string(g) + " of norm " +
                                        std::to_string(m));
    }
  }
  return Verdict::falsified({m, static_cast<std::int64_t>(candidates.size())},
                            "none of the " + std::to_string(candidates.size()) +
                                " elements of norm " + std::to_string(m) + " generates the ideal");
}

Elem ModPReduction::reduce(const OrderVec& x) const {
  Elem e = 0;
  for (std::int64_t c : x) e = static_cast<Elem>(e * p + ((c % p) + p) % p);
  return e;
}

OrderVec ModPReduction::lift(Elem e) const {
  OrderVec v{};
  for (std::size_t t = 4; t-- > 0;) {
    v[t] = e % p;
    e /= static_cast<Elem>(p);
  }
  return v;
}

ElementSet ModPReduction::image(const OrderLattice& lattice) const {
  if (!lattice.contains(OrderLattice::scaled_order(p))) {
    throw PreconditionFailed("lattice does not contain pR");
  }
  ElementSet s(ring.size());
  for (Elem e = 0; e < ring.size(); ++e) {
    if (lattice.contains(lift(e))) s.insert(e);
  }
  s.normalize();
  return s;
}

OrderLattice ModPReduction::preimage(const ElementSet& subset) const {
  const Mat4 base = OrderLattice::scaled_order(p).basis();
  std::vector<OrderVec> rows(base.begin(), base.end());
  for (Elem e : subset.members()) rows.push_back(lift(e));
  return OrderLattice(rows);
}

const ModPReduction& mod3_reduction() {
  static const ModPReduction red = [] {
    const OrderContext& ctx = build_order();
    std::vector<std::vector<std::vector<long>>> table(4, std::vector<std::vector<long>>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        table[i][j] = std::vector<long>(ctx.table()[i][j].begin(), ctx.table()[i][j].end());
    return ModPReduction{3, FiniteRing(make_structure_constant_ring(4, 3, table, "R/3R"))};
  }();
  return red;
}

std::vector<OrderVec> example_ideal_i() {
  // 1/2(1+5k), 1/2(i+5j), 3j, 3k
  return {OrderContext::from_quaternion2({1, 0, 0, 5}), OrderContext::from_quaternion2({0, 1, 5, 0}),
          OrderContext::from_quaternion2({0, 0, 6, 0}), OrderContext::from_quaternion2({0, 0, 0, 6})};
}

std::vector<OrderVec> example_ideal_j() {
  // 1/2(1+2j+3k), 1/2(i+3j+4k), 3j, 3k
  return {OrderContext::from_quaternion2({1, 0, 2, 3}), OrderContext::from_quaternion2({0, 1, 3, 4}),
          OrderContext::from_quaternion2({0, 0, 6, 0}), OrderContext::from_quaternion2({0, 0, 0, 6})};
}

namespace {

std::string members_string(const FiniteRing& ring, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    out += (i ? ", " : "") + ring.format(s.members()[i]);
  }
  return out + "}";
}

// Smallest unit u with u * from = to.
std::optional<Elem> unit_carrying(const FiniteRing& ring, const ElementSet& from,
                                  const ElementSet& to) {
  for (Elem u : ring.unit_list()) {
    const ElementSet moved = left_multiple(ring, u, from);
    if (moved == to) return u;
  }
  return std::nullopt;
}

// A right ideal N of a finite ring is simple as a module iff every nonzero
// element generates it.
bool is_simple_right_ideal(const FiniteRing& ring, const ElementSet& n) {
  if (n.is_zero()) return false;
  for (Elem m : n.members()) {
    if (m != 0 && !(principal_right_ideal(ring, m) == n)) return false;
  }
  return true;
}

// R/N is simple iff every element outside N generates R together with N.
bool is_simple_quotient(const FiniteRing& ring, const ElementSet& n) {
  if (n.is_full()) return false;
  for (Elem m = 0; m < ring.size(); ++m) {
    if (!n.contains(m) && !ideal_sum(ring, n, principal_right_ideal(ring, m)).is_full()) {
      return false;
    }
  }
  return true;
}

}  // namespace

Report verify_presentation_dependence() {
  Report report;
  report.command = "quat example36";
  report.input = "(-1,-11 / Q), R = Z<1, i, (i+j)/2, (1+k)/2>, p = 3";
  const OrderContext& ctx = build_order();
  const OrderLattice p_lattice = OrderLattice::scaled_order(3);
  const OrderLattice i_lattice(example_ideal_i());
  const OrderLattice j_lattice(example_ideal_j());
  report.lines.push_back("I = " + i_lattice.format());
  report.lines.push_back("J = " + j_lattice.format());

  // (i)
  for (const auto& [label, lattice] : {std::pair{"I", &i_lattice}, std::pair{"J", &j_lattice}}) {
    const bool ok = is_right_ideal(*lattice) && lattice->index() == 9 && lattice->contains(p_lattice);
    report.add_bool(std::string(label) + " is a right ideal of index 9 containing 3R", ok,
                    "index " + std::to_string(lattice->index()));
  }

  // (ii)
  const Verdict i_principal = is_principal_right_ideal(i_lattice);
  std::vector<std::string> g_witness;
  if (i_principal.is_verified()) {
    const OrderVec g{i_principal.witness[0], i_principal.witness[1], i_principal.witness[2],
                     i_principal.witness[3]};
    g_witness = {OrderContext::format(g), OrderContext::quaternion_string(g),
                 "nrd " + std::to_string(ctx.nrd(g))};
    report.lines.push_back("I = gR with g = " + OrderContext::quaternion_string(g));
  }
  report.add("I is principal", i_principal.status, i_principal.detail, g_witness);
  const Verdict j_principal = is_principal_right_ideal(j_lattice);
  std::vector<std::string> j_witness;
  for (std::int64_t w : j_principal.witness) j_witness.push_back(std::to_string(w));
  report.add("J is not principal",
             j_principal.is_falsified() ? Status::Verified
                                        : (j_principal.is_verified() ? Status::Falsified : Status::Unknown),
             j_principal.detail, j_witness);

  // (iii)
  const ModPReduction& red = mod3_reduction();
  const FiniteRing& ring = red.ring;
  const RightIdealSet radical = jacobson_radical(ring);
  report.add_bool("R/3R has 81 elements and zero radical", ring.size() == 81 && radical.is_zero(),
                  std::to_string(ring.unit_list().size()) + " units");
  const ElementSet i_mod = red.image(i_lattice);
  const ElementSet j_mod = red.image(j_lattice);
  report.lines.push_back("I/P = " + members_string(ring, i_mod));
  report.lines.push_back("J/P = " + members_string(ring, j_mod));
  const std::optional<Elem> u = unit_carrying(ring, j_mod, i_mod);
  report.add_bool("a unit u of R/3R carries J/P onto I/P", u.has_value(), {},
                  u ? std::vector<std::string>{std::to_string(*u), ring.format(*u)}
                    : std::vector<std::string>{});
  const std::optional<Elem> back = unit_carrying(ring, i_mod, j_mod);
  report.add_bool("a unit of R/3R carries I/P onto J/P", back.has_value(), {},
                  back ? std::vector<std::string>{std::to_string(*back), ring.format(*back)}
                       : std::vector<std::string>{});
  report.add_bool("0 < I/P < R/P is a composition series",
                  is_simple_right_ideal(ring, i_mod) && is_simple_quotient(ring, i_mod));

  // (iv) pi_M is the canonical map, pi'_M = (left multiplication by u) o pi_M.
  const OrderLattice pre_canonical = red.preimage(i_mod);
  report.add_bool("pi_M^-1(I/P) = I", pre_canonical == i_lattice, pre_canonical.format());
  if (u) {
    ElementSet pulled(ring.size());
    for (Elem m = 0; m < ring.size(); ++m) {
      if (i_mod.contains(ring.mul(*u, m))) pulled.insert(m);
    }
    pulled.normalize();
    const OrderLattice pre_twisted = red.preimage(pulled);
    report.add_bool("pi'_M^-1(I/P) = J", pre_twisted == j_lattice, pre_twisted.format());
  } else {
    report.add("pi'_M^-1(I/P) = J", Status::Unknown, "no unit u");
  }
  report.add_bool("I/P is pi_M-exact", i_principal.is_verified() && pre_canonical == i_lattice,
                  "preimage is principal");
  report.add_bool("I/P is not pi'_M-exact", j_principal.is_falsified() && u.has_value(),
                  "preimage is J, which is not principal");
  return report;
}

}  // namespace mf
