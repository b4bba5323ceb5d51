#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mf/element_set.hpp"

namespace mf {

// Arithmetic of an enumerated ring. Elements are indices 0..order()-1 in a
// deterministic lexicographic order over the natural coordinates, so index 0
// is the zero element. The identity has whatever index its coordinates give;
// see one().
class RingStructure {
 public:
  virtual ~RingStructure() = default;
  virtual std::size_t order() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem one() const = 0;
  virtual std::string format(Elem a) const = 0;
  virtual std::string name() const = 0;
  // Additive generators for which bilinearity makes basis-level checks
  // sufficient; empty when the structure has no such guarantee.
  virtual std::vector<Elem> basis() const { return {}; }
};

// An immutable, cheaply copyable finite ring. Construction verifies the ring
// axioms (exhaustively for small orders, sampled above) and precomputes the
// unit group, the idempotents and the Jacobson radical. Nothing changes after
// construction, so values may be shared across threads.
class FiniteRing {
 public:
  explicit FiniteRing(std::shared_ptr<const RingStructure> structure);

  std::size_t size() const;
  Elem zero() const { return 0; }
  Elem one() const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;

  std::string format(Elem a) const;
  const std::string& name() const;
  const RingStructure& structure() const;

  bool is_unit(Elem a) const;
  // Two-sided inverse; throws PreconditionFailed for non-units.
  Elem inverse(Elem a) const;
  const std::vector<Elem>& unit_list() const;
  const std::vector<Elem>& idempotent_list() const;
  // {x : 1 - xr is a unit for every r}.
  const ElementSet& radical() const;

  // Identity of the underlying shared data.
  bool same_as(const FiniteRing& other) const { return data_ == other.data_; }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// Checks the ring axioms on every triple when size() <= exhaustive_limit,
// otherwise on `samples` pseudo-random triples (fixed seed). Throws
// AxiomViolation naming the first failing triple.
void verify_ring_axioms(const RingStructure& s, std::size_t exhaustive_limit = 128,
                        std::size_t samples = 20000);

// Concrete structures. All return shared pointers so rings can nest.
std::shared_ptr<const RingStructure> make_zmod(std::size_t modulus);
std::shared_ptr<const RingStructure> make_matrix_ring(const FiniteRing& base, std::size_t dim,
                                                      bool upper_triangular);
std::shared_ptr<const RingStructure> make_product_ring(const FiniteRing& left,
                                                       const FiniteRing& right);
// Free (Z/modulus)-module of rank `rank` with e_i e_j = sum_k table[i][j][k] e_k.
// The identity is located by search; AxiomViolation when there is none.
std::shared_ptr<const RingStructure> make_structure_constant_ring(
    std::size_t rank, std::size_t modulus, std::vector<std::vector<std::vector<long>>> table,
    std::string name);
// Ring given by explicit tables (used for endomorphism rings).
std::shared_ptr<const RingStructure> make_table_ring(std::size_t order,
                                                     std::vector<Elem> add_table,
                                                     std::vector<Elem> mul_table, Elem one,
                                                     std::vector<std::string> labels,
                                                     std::string name);

}  // namespace mf
