#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mf/verdict.hpp"

namespace mf {

// Integer polynomial, coefficients low to high, no trailing zeros.
using ZPoly = std::vector<std::int64_t>;

struct ZxBounds {
  std::size_t max_degree = 8;
  std::int64_t max_coeff = 64;
};

ZPoly zx_trim(ZPoly p);
ZPoly zx_mul(const ZPoly& a, const ZPoly& b);
ZPoly zx_add(const ZPoly& a, const ZPoly& b);
// Exact quotient a / b in Z[x], if b divides a.
std::optional<ZPoly> zx_divide(const ZPoly& a, const ZPoly& b);
// gcd in Z[x] with positive leading coefficient. Throws BoundExceeded on
// coefficient overflow.
ZPoly zx_gcd(const ZPoly& a, const ZPoly& b);
std::string zx_format(const ZPoly& p);
// "[c0,c1,...]"
ZPoly zx_parse(const std::string& text);

// Decides whether aZ[x] + bZ[x] is principal. Any generator must be +-gcd(a, b),
// so the question is whether g = gcd(a, b) lies in aZ[x] + bZ[x].
//   Verified: witness is g.
//   Falsified: witness is (g coefficients..., m, t) for a ring map Z[x] -> Z/m,
//     x -> t, killing a and b but not g.
//   Unknown: inputs beyond `bounds`, overflow, or no certificate either way.
Verdict zx_sum_principal(const ZPoly& a, const ZPoly& b, const ZxBounds& bounds = {});

}  // namespace mf
