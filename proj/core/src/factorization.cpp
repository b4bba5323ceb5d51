#include "mf/factorization.hpp"

#include <algorithm>
#include <map>

#include "mf/error.hpp"
#include "mf/limits.hpp"

namespace mf {

namespace {

constexpr std::size_t kDivisorCandidateCap = 1000000;

std::vector<SkewPoly> divisor_scan(const SkewPoly& f, std::size_t d, bool left) {
  if (f.is_zero()) throw PreconditionFailed("divisors of the zero polynomial");
  if (static_cast<long>(d) > f.degree()) throw PreconditionFailed("divisor degree exceeds deg f");
  std::size_t count = 1;
  for (std::size_t i = 0; i < d; ++i) {
    count *= f.context().field().order();
    require_within(count, size_cap(kDivisorCandidateCap), "divisor candidates");
  }
  std::vector<SkewPoly> out;
  for (const SkewPoly& g : monic_of_degree(f.context_ptr(), d)) {
    const DivMod dm = left ? left_divmod(f, g) : right_divmod(f, g);
    if (dm.remainder.is_zero()) out.push_back(g);
  }
  return out;
}

bool factor_list_less(const std::vector<SkewPoly>& a, const std::vector<SkewPoly>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

using FactorLists = std::vector<std::vector<SkewPoly>>;

// Factor lists of a monic polynomial, memoized on the polynomial.
const FactorLists& monic_factor_lists(const SkewPoly& f, std::map<SkewPoly, FactorLists>& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  FactorLists lists{{f}};
  for (long d = 1; d < f.degree(); ++d) {
    for (const SkewPoly& g : monic_left_divisors(f, static_cast<std::size_t>(d))) {
      // f monic and g monic force the quotient to be monic.
      const SkewPoly rest = left_divmod(f, g).quotient;
      for (const auto& tail : monic_factor_lists(rest, memo)) {
        std::vector<SkewPoly> l{g};
        l.insert(l.end(), tail.begin(), tail.end());
        lists.push_back(std::move(l));
      }
    }
  }
  std::sort(lists.begin(), lists.end(), factor_list_less);
  return memo.emplace(f, std::move(lists)).first->second;
}

}  // namespace

std::vector<SkewPoly> monic_right_divisors(const SkewPoly& f, std::size_t d) {
  return divisor_scan(f, d, false);
}

std::vector<SkewPoly> monic_left_divisors(const SkewPoly& f, std::size_t d) {
  return divisor_scan(f, d, true);
}

bool is_irreducible(const SkewPoly& f) {
  if (f.degree() < 1) return false;
  for (long d = 1; d < f.degree(); ++d) {
    if (!monic_left_divisors(f, static_cast<std::size_t>(d)).empty()) return false;
  }
  return true;
}

bool Factorization::is_maximal() const {
  return std::all_of(factors.begin(), factors.end(), is_irreducible);
}

std::string Factorization::pretty() const {
  std::string s;
  for (const SkewPoly& x : factors) s += "(" + x.pretty() + ")";
  if (unit != 1) s += "*" + base.context().field().format(unit);
  return s;
}

Factorization canonicalize(const SkewPoly& base, const std::vector<SkewPoly>& factors) {
  if (factors.empty()) throw PreconditionFailed("a factorization needs at least one factor");
  const auto& ctx = base.context_ptr();
  const GaloisField& field = ctx->field();
  SkewPoly product = SkewPoly::constant(ctx, 1);
  for (const SkewPoly& x : factors) {
    if (x.degree() < 1) throw PreconditionFailed("factors must be non-units");
    product = product * x;
  }
  if (!(product == base)) throw PreconditionFailed("factors do not multiply to the base");
  Factorization out{{}, 1, base};
  FieldElem carry = 1;
  for (const SkewPoly& x : factors) {
    const SkewPoly scaled = x.scale_left(carry);
    const FieldElem u = scaled.right_normalizer();
    out.factors.push_back(scaled.scale_right(u));
    carry = field.inv(u);
  }
  out.unit = carry;
  return out;
}

std::vector<Factorization> enumerate_factorizations(const SkewPoly& f) {
  if (f.degree() < 1) throw PreconditionFailed("factorizations need deg f >= 1");
  const SkewPoly monic = f.monic_right();
  const FieldElem unit = f.context().field().inv(f.right_normalizer());
  std::map<SkewPoly, FactorLists> memo;
  std::vector<Factorization> out;
  for (const auto& factors : monic_factor_lists(monic, memo)) {
    out.push_back(Factorization{factors, unit, f});
  }
  return out;
}

std::vector<Factorization> maximal_factorizations(const SkewPoly& f) {
  std::vector<Factorization> all = enumerate_factorizations(f);
  std::vector<Factorization> out;
  for (auto& x : all) {
    if (x.is_maximal()) out.push_back(std::move(x));
  }
  return out;
}

IdealChain chain_from_factorization(const Factorization& f) {
  IdealChain chain;
  SkewPoly y = SkewPoly::constant(f.base.context_ptr(), 1);
  chain.generators.push_back(y);
  for (const SkewPoly& x : f.factors) {
    y = y * x;
    chain.generators.push_back(y);
  }
  // The last generator carries the trailing unit so that y_n = a exactly.
  chain.generators.back() = chain.generators.back().scale_right(f.unit);
  return chain;
}

Factorization factorization_from_chain(const IdealChain& chain) {
  const auto& y = chain.generators;
  if (y.size() < 2) throw NotDivisible("a chain needs at least two generators");
  if (!y.front().is_unit()) throw NotDivisible("chain does not start at R");
  std::vector<SkewPoly> factors;
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (y[i].degree() <= y[i - 1].degree()) throw NotDivisible("chain is not strictly descending");
    const DivMod dm = left_divmod(y[i], y[i - 1]);
    if (!dm.remainder.is_zero()) {
      throw NotDivisible(y[i].pretty() + " is not in " + y[i - 1].pretty() + "R");
    }
    factors.push_back(dm.quotient);
  }
  factors.front() = y.front() * factors.front();
  return canonicalize(y.back(), factors);
}

}  // namespace mf
