#include <array>

#include "mf/error.hpp"
#include "mf/limits.hpp"
#include "mf/ring.hpp"

namespace mf {

namespace {

constexpr std::size_t kMaxCoords = 16;
using Coords = std::array<std::size_t, kMaxCoords>;

std::size_t checked_power(std::size_t base, std::size_t exponent, const std::string& what) {
  const std::size_t cap = size_cap(kDefaultRingCap);
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    result *= base;
    require_within(result, cap, what);
  }
  return result;
}

class ZmodStructure final : public RingStructure {
 public:
  explicit ZmodStructure(std::size_t n) : n_(n) {}
  std::size_t order() const override { return n_; }
  Elem add(Elem a, Elem b) const override { return static_cast<Elem>((a + b) % n_); }
  Elem neg(Elem a) const override { return a == 0 ? 0 : static_cast<Elem>(n_ - a); }
  Elem mul(Elem a, Elem b) const override {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % n_);
  }
  Elem one() const override { return 1; }
  std::string format(Elem a) const override { return std::to_string(a); }
  std::string name() const override { return "zmod:" + std::to_string(n_); }
  std::vector<Elem> basis() const override { return {1}; }

 private:
  std::size_t n_;
};

// Square matrices (optionally upper triangular) over a finite base ring.
// Coordinates are the stored entries in row-major order; the first
// coordinate is the most significant digit of the index.
class MatrixStructure final : public RingStructure {
 public:
  MatrixStructure(FiniteRing base, std::size_t dim, bool triangular)
      : base_(std::move(base)), dim_(dim), triangular_(triangular) {
    slot_.assign(dim * dim, -1);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        if (triangular && j < i) continue;
        slot_[i * dim + j] = static_cast<int>(coords_++);
      }
    }
    if (coords_ > kMaxCoords) throw SizeExceeded(name() + " has too many coordinates");
    order_ = checked_power(base_.size(), coords_, name());
    one_ = encode(identity_entries());
  }

  std::size_t order() const override { return order_; }
  Elem add(Elem a, Elem b) const override {
    auto x = decode(a);
    const auto y = decode(b);
    for (std::size_t t = 0; t < coords_; ++t) {
      x[t] = base_.add(static_cast<Elem>(x[t]), static_cast<Elem>(y[t]));
    }
    return encode(x);
  }
  Elem neg(Elem a) const override {
    auto x = decode(a);
    for (std::size_t t = 0; t < coords_; ++t) x[t] = base_.neg(static_cast<Elem>(x[t]));
    return encode(x);
  }
  Elem mul(Elem a, Elem b) const override {
    const auto x = decode(a);
    const auto y = decode(b);
    Coords z{};
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        const int out = slot_[i * dim_ + j];
        if (out < 0) continue;
        Elem acc = 0;
        for (std::size_t l = 0; l < dim_; ++l) {
          const int s1 = slot_[i * dim_ + l];
          const int s2 = slot_[l * dim_ + j];
          if (s1 < 0 || s2 < 0) continue;
          acc = base_.add(acc, base_.mul(static_cast<Elem>(x[s1]), static_cast<Elem>(y[s2])));
        }
        z[out] = acc;
      }
    }
    return encode(z);
  }
  Elem one() const override { return one_; }
  std::string format(Elem a) const override {
    const auto x = decode(a);
    std::string out = "[";
    for (std::size_t i = 0; i < dim_; ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j) out += ",";
        const int s = slot_[i * dim_ + j];
        out += s < 0 ? base_.format(0) : base_.format(static_cast<Elem>(x[s]));
      }
      out += "]";
    }
    return out + "]";
  }
  std::string name() const override {
    return std::string(triangular_ ? "tri:" : "mat:") + std::to_string(dim_) + ":" + base_.name();
  }

 private:
  Coords decode(Elem a) const {
    Coords x{};
    const std::size_t m = base_.size();
    for (std::size_t t = coords_; t-- > 0;) {
      x[t] = a % m;
      a = static_cast<Elem>(a / m);
    }
    return x;
  }
  Elem encode(const Coords& x) const {
    std::size_t a = 0;
    for (std::size_t t = 0; t < coords_; ++t) a = a * base_.size() + x[t];
    return static_cast<Elem>(a);
  }
  Coords identity_entries() const {
    Coords x{};
    for (std::size_t i = 0; i < dim_; ++i) x[slot_[i * dim_ + i]] = base_.one();
    return x;
  }

  FiniteRing base_;
  std::size_t dim_;
  bool triangular_;
  std::vector<int> slot_;
  std::size_t coords_ = 0;
  std::size_t order_ = 0;
  Elem one_ = 0;
};

class ProductStructure final : public RingStructure {
 public:
  ProductStructure(FiniteRing left, FiniteRing right)
      : left_(std::move(left)), right_(std::move(right)) {
    order_ = left_.size() * right_.size();
    require_within(order_, size_cap(kDefaultRingCap), name());
  }
  std::size_t order() const override { return order_; }
  Elem add(Elem a, Elem b) const override {
    return pack(left_.add(l(a), l(b)), right_.add(r(a), r(b)));
  }
  Elem neg(Elem a) const override { return pack(left_.neg(l(a)), right_.neg(r(a))); }
  Elem mul(Elem a, Elem b) const override {
    return pack(left_.mul(l(a), l(b)), right_.mul(r(a), r(b)));
  }
  Elem one() const override { return pack(left_.one(), right_.one()); }
  std::string format(Elem a) const override {
    return "(" + left_.format(l(a)) + "," + right_.format(r(a)) + ")";
  }
  std::string name() const override { return "prod:" + left_.name() + "," + right_.name(); }

 private:
  Elem l(Elem a) const { return static_cast<Elem>(a / right_.size()); }
  Elem r(Elem a) const { return static_cast<Elem>(a % right_.size()); }
  Elem pack(Elem x, Elem y) const { return static_cast<Elem>(x * right_.size() + y); }

  FiniteRing left_;
  FiniteRing right_;
  std::size_t order_;
};

class StructureConstantStructure final : public RingStructure {
 public:
  StructureConstantStructure(std::size_t rank, std::size_t modulus,
                             std::vector<std::vector<std::vector<long>>> table, std::string name)
      : rank_(rank), modulus_(modulus), name_(std::move(name)) {
    if (rank == 0 || modulus < 2) {
      throw AxiomViolation("structure constants need rank >= 1 and modulus >= 2");
    }
    if (rank > kMaxCoords) throw SizeExceeded(name_ + " has too many coordinates");
    order_ = checked_power(modulus, rank, name_);
    table_.assign(rank * rank * rank, 0);
    if (table.size() != rank) throw AxiomViolation("structure constant table has wrong shape");
    for (std::size_t i = 0; i < rank; ++i) {
      if (table[i].size() != rank) throw AxiomViolation("structure constant table has wrong shape");
      for (std::size_t j = 0; j < rank; ++j) {
        if (table[i][j].size() != rank) {
          throw AxiomViolation("structure constant table has wrong shape");
        }
        for (std::size_t k = 0; k < rank; ++k) {
          const long m = static_cast<long>(modulus);
          table_[(i * rank + j) * rank + k] = static_cast<Elem>(((table[i][j][k] % m) + m) % m);
        }
      }
    }
    one_ = find_identity();
  }

  std::size_t order() const override { return order_; }
  Elem add(Elem a, Elem b) const override {
    auto x = decode(a);
    const auto y = decode(b);
    for (std::size_t t = 0; t < rank_; ++t) x[t] = (x[t] + y[t]) % modulus_;
    return encode(x);
  }
  Elem neg(Elem a) const override {
    auto x = decode(a);
    for (std::size_t t = 0; t < rank_; ++t) x[t] = (modulus_ - x[t]) % modulus_;
    return encode(x);
  }
  Elem mul(Elem a, Elem b) const override {
    const auto x = decode(a);
    const auto y = decode(b);
    Coords z{};
    for (std::size_t i = 0; i < rank_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < rank_; ++j) {
        if (y[j] == 0) continue;
        const std::size_t c = x[i] * y[j] % modulus_;
        for (std::size_t k = 0; k < rank_; ++k) {
          z[k] = (z[k] + c * table_[(i * rank_ + j) * rank_ + k]) % modulus_;
        }
      }
    }
    return encode(z);
  }
  Elem one() const override { return one_; }
  std::string format(Elem a) const override {
    const auto x = decode(a);
    std::string out = "(";
    for (std::size_t t = 0; t < rank_; ++t) out += (t ? "," : "") + std::to_string(x[t]);
    return out + ")";
  }
  std::string name() const override { return name_; }
  std::vector<Elem> basis() const override {
    std::vector<Elem> b;
    for (std::size_t t = 0; t < rank_; ++t) {
      Coords x{};
      x[t] = 1;
      b.push_back(encode(x));
    }
    return b;
  }

 private:
  Coords decode(Elem a) const {
    Coords x{};
    for (std::size_t t = rank_; t-- > 0;) {
      x[t] = a % modulus_;
      a = static_cast<Elem>(a / modulus_);
    }
    return x;
  }
  Elem encode(const Coords& x) const {
    std::size_t a = 0;
    for (std::size_t t = 0; t < rank_; ++t) a = a * modulus_ + x[t];
    return static_cast<Elem>(a);
  }
  // Multiplication is bilinear by construction, so an element that is a
  // two-sided identity on the basis is the identity.
  Elem find_identity() const {
    const auto b = basis();
    for (Elem u = 1; u < order_; ++u) {
      bool ok = true;
      for (Elem e : b) {
        if (mul(u, e) != e || mul(e, u) != e) {
          ok = false;
          break;
        }
      }
      if (ok) return u;
    }
    throw AxiomViolation("structure constants of " + name_ + " admit no identity");
  }

  std::size_t rank_;
  std::size_t modulus_;
  std::string name_;
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  Elem one_ = 0;
};

class TableStructure final : public RingStructure {
 public:
  TableStructure(std::size_t order, std::vector<Elem> add_table, std::vector<Elem> mul_table,
                 Elem one, std::vector<std::string> labels, std::string name)
      : order_(order),
        add_(std::move(add_table)),
        mul_(std::move(mul_table)),
        one_(one),
        labels_(std::move(labels)),
        name_(std::move(name)) {
    if (add_.size() != order * order || mul_.size() != order * order) {
      throw AxiomViolation("table ring " + name_ + " has tables of the wrong size");
    }
    neg_.assign(order, 0);
    for (Elem a = 0; a < order; ++a) {
      for (Elem b = 0; b < order; ++b) {
        if (add_[a * order + b] == 0) {
          neg_[a] = b;
          break;
        }
      }
    }
  }
  std::size_t order() const override { return order_; }
  Elem add(Elem a, Elem b) const override { return add_[a * order_ + b]; }
  Elem neg(Elem a) const override { return neg_[a]; }
  Elem mul(Elem a, Elem b) const override { return mul_[a * order_ + b]; }
  Elem one() const override { return one_; }
  std::string format(Elem a) const override {
    return a < labels_.size() ? labels_[a] : std::to_string(a);
  }
  std::string name() const override { return name_; }

 private:
  std::size_t order_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem one_;
  std::vector<std::string> labels_;
  std::string name_;
};

}  // namespace

std::shared_ptr<const RingStructure> make_zmod(std::size_t modulus) {
  if (modulus < 2) throw AxiomViolation("zmod needs modulus >= 2");
  require_within(modulus, size_cap(kDefaultRingCap), "zmod:" + std::to_string(modulus));
  return std::make_shared<ZmodStructure>(modulus);
}

std::shared_ptr<const RingStructure> make_matrix_ring(const FiniteRing& base, std::size_t dim,
                                                      bool upper_triangular) {
  if (dim < 1) throw AxiomViolation("matrix dimension must be >= 1");
  return std::make_shared<MatrixStructure>(base, dim, upper_triangular);
}

std::shared_ptr<const RingStructure> make_product_ring(const FiniteRing& left,
                                                       const FiniteRing& right) {
  return std::make_shared<ProductStructure>(left, right);
}

std::shared_ptr<const RingStructure> make_structure_constant_ring(
    std::size_t rank, std::size_t modulus, std::vector<std::vector<std::vector<long>>> table,
    std::string name) {
  return std::make_shared<StructureConstantStructure>(rank, modulus, std::move(table),
                                                      std::move(name));
}

std::shared_ptr<const RingStructure> make_table_ring(std::size_t order,
                                                     std::vector<Elem> add_table,
                                                     std::vector<Elem> mul_table, Elem one,
                                                     std::vector<std::string> labels,
                                                     std::string name) {
  return std::make_shared<TableStructure>(order, std::move(add_table), std::move(mul_table), one,
                                          std::move(labels), std::move(name));
}

}  // namespace mf
