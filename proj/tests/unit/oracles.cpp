#include "oracles.hpp"

namespace oracle {

int MatrixRing::size() const {
  const int slots = triangular ? dim * (dim + 1) / 2 : dim * dim;
  int n = 1;
  for (int i = 0; i < slots; ++i) n *= mod;
  return n;
}

std::vector<int> MatrixRing::entries(std::uint32_t index) const {
  std::vector<int> free;
  const int slots = triangular ? dim * (dim + 1) / 2 : dim * dim;
  for (int i = 0; i < slots; ++i) {
    free.insert(free.begin(), static_cast<int>(index % mod));
    index /= mod;
  }
  std::vector<int> m(dim * dim, 0);
  std::size_t k = 0;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if (!triangular || c >= r) m[r * dim + c] = free[k++];
    }
  }
  return m;
}

std::uint32_t MatrixRing::index(const std::vector<int>& m) const {
  std::uint32_t out = 0;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if (triangular && c < r) continue;
      out = out * mod + static_cast<std::uint32_t>(((m[r * dim + c] % mod) + mod) % mod);
    }
  }
  return out;
}

std::uint32_t MatrixRing::mul(std::uint32_t a, std::uint32_t b) const {
  const auto x = entries(a), y = entries(b);
  std::vector<int> z(dim * dim, 0);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      for (int k = 0; k < dim; ++k) z[r * dim + c] += x[r * dim + k] * y[k * dim + c];
  return index(z);
}

std::uint32_t MatrixRing::add(std::uint32_t a, std::uint32_t b) const {
  auto x = entries(a);
  const auto y = entries(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return index(x);
}

std::uint32_t MatrixRing::one() const {
  std::vector<int> m(dim * dim, 0);
  for (int i = 0; i < dim; ++i) m[i * dim + i] = 1;
  return index(m);
}

int MatrixRing::det2(std::uint32_t a) const {
  const auto m = entries(a);
  return (((m[0] * m[3] - m[1] * m[2]) % mod) + mod) % mod;
}

std::uint32_t f4_add(std::uint32_t a, std::uint32_t b) { return a ^ b; }

std::uint32_t f4_mul(std::uint32_t a, std::uint32_t b) {
  const unsigned a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
  const unsigned c0 = (a0 * b0 + a1 * b1) & 1;
  const unsigned c1 = (a0 * b1 + a1 * b0 + a1 * b1) & 1;
  return c0 | (c1 << 1);
}

std::uint32_t f4_frob(std::uint32_t a, unsigned k) {
  for (unsigned i = 0; i < k % 2; ++i) a = f4_mul(a, a);
  return a;
}

F4Poly f4_trim(F4Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

F4Poly f4_poly_mul(const F4Poly& a, const F4Poly& b, unsigned power) {
  if (a.empty() || b.empty()) return {};
  F4Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = f4_add(out[i + j], f4_mul(a[i], f4_frob(b[j], power * static_cast<unsigned>(i))));
  return f4_trim(out);
}

std::array<std::int64_t, 4> quaternion2_mul(const std::array<std::int64_t, 4>& p,
                                            const std::array<std::int64_t, 4>& q, std::int64_t a,
                                            std::int64_t b) {
  const auto [w1, x1, y1, z1] = p;
  const auto [w2, x2, y2, z2] = q;
  std::array<std::int64_t, 4> r = {
      w1 * w2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
      w1 * x2 + x1 * w2 - b * y1 * z2 + b * z1 * y2,
      w1 * y2 + y1 * w2 + a * x1 * z2 - a * z1 * x2,
      w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
  };
  for (auto& v : r) v /= 2;
  return r;
}

std::int64_t quaternion2_norm4(const std::array<std::int64_t, 4>& p, std::int64_t a,
                               std::int64_t b) {
  return p[0] * p[0] - a * p[1] * p[1] - b * p[2] * p[2] + a * b * p[3] * p[3];
}

}  // namespace oracle
