#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "latticelab/groebner.hpp"

namespace latticelab {

/// Monomial ideal kept by its minimal generators, sorted by decreasing
/// degree-reverse-lexicographic order on the variable list.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators = {});

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool contains(const Monomial& m) const;
  bool is_zero() const noexcept { return gens_.empty(); }

  MonomialIdeal operator+(const MonomialIdeal& other) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;

  std::vector<std::string> strings(const std::vector<std::string>& names) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Ideal given by generators, with reduced Gröbner bases cached per order.
/// Copies share the cache; the generator list never changes.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal parse(const RingPtr& ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  /// Reduced basis under `order`, computed once per order.
  std::shared_ptr<const ReducedGB> groebner(const MonomialOrder& order) const;
  /// Reduced basis under the canonical order (degrevlex on the variable list).
  std::shared_ptr<const ReducedGB> groebner() const;

  Ideal plus(const std::vector<Polynomial>& more) const;
  Ideal plus(const Ideal& other) const;

  /// Every generator is a pure difference or a monomial.
  bool is_binomial() const;

  std::vector<std::string> strings() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const ReducedGB>>> entries;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

MonomialOrder canonical_order(const Ring& ring);

MonomialIdeal initial_ideal(const Ideal& ideal, const MonomialOrder& order);
MonomialIdeal initial_ideal(const ReducedGB& gb);
bool is_squarefree(const MonomialIdeal& m);

bool ideal_member(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order);
bool ideal_member(const Polynomial& f, const Ideal& ideal);
/// Membership in the radical: (ideal, 1 - t*f) is the unit ideal.
bool radical_member(const Polynomial& f, const Ideal& ideal);

/// ideal ∩ K[remaining variables], returned in the same ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);
/// ideal : f, via ideal ∩ (f) divided by f.
Ideal colon(const Ideal& ideal, const Polynomial& f);
/// ideal : f^∞, via eliminating t from (ideal, 1 - t*f).
Ideal saturate(const Ideal& ideal, const Polynomial& f);
/// ideal : (product of `vars`)^∞. Homogeneous input is saturated one
/// variable at a time from a degrevlex basis with that variable last;
/// other input goes through saturate().
Ideal saturate_by_variables(const Ideal& ideal, const std::vector<std::size_t>& vars);
bool is_homogeneous(const Ideal& ideal);
bool ideal_equal(const Ideal& a, const Ideal& b);
/// Every generator of `inner` lies in `outer`.
bool ideal_contains(const Ideal& outer, const Ideal& inner);

/// Exact quotient g / f; throws InvalidInput when f does not divide g.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f);

/// Largest set of variables containing the support of no generator.
unsigned krull_dim(const MonomialIdeal& m, std::size_t nvars);
unsigned krull_dim(const MonomialIdeal& m);
/// Krull dimension of the quotient ring, via the canonical initial ideal.
unsigned dimension(const Ideal& ideal);

/// Product of the given variables; 1 for an empty list.
Polynomial variable_product(const RingPtr& ring, const std::vector<std::size_t>& vars);

}  // namespace latticelab
