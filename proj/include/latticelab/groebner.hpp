#pragma once

#include <memory>
#include <vector>

#include "latticelab/polynomial.hpp"

namespace latticelab {

struct GroebnerOptions {
  enum class Engine {
    Auto,      ///< binomial engine when every generator is a pure difference or a monomial
    General,   ///< field-coefficient Buchberger
    Binomial,  ///< pure-difference engine; throws NotPureDifference on other input
  };
  Engine engine = Engine::Auto;
  /// Buchberger's chain criterion in addition to the coprime criterion.
  bool chain_criterion = false;
};

/// Reduced Gröbner basis: monic, inter-reduced, sorted by decreasing
/// leading monomial. The basis polynomials live in `ring()`, whose active
/// order is the basis order.
class ReducedGB {
 public:
  ReducedGB(RingPtr ring, std::vector<Polynomial> basis);

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return ring_->order(); }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }

  bool is_zero_ideal() const noexcept { return basis_.empty(); }
  bool is_unit_ideal() const noexcept { return basis_.size() == 1 && leads_[0].is_one(); }

  /// Remainder of `f` with no term divisible by a leading monomial.
  Polynomial normal_form(const Polynomial& f) const;
  /// Normal form of a single monomial.
  Polynomial normal_form(const Monomial& m) const;
  bool is_standard(const Monomial& m) const;

  std::vector<std::string> strings() const;

  friend bool operator==(const ReducedGB& a, const ReducedGB& b);

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leads_;
};

/// Buchberger's algorithm with the normal selection strategy (smallest
/// lcm degree, ties by the order) and the coprime-leading-monomial skip.
/// `ring` fixes variables and field; `order` the basis order.
ReducedGB buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, const MonomialOrder& order,
                     const GroebnerOptions& options = {});

Polynomial normal_form(const Polynomial& f, const ReducedGB& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Full post-hoc Buchberger test: every S-polynomial of every basis pair
/// reduces to zero, with no criteria applied; also checks reducedness.
bool verify_reduced_groebner(const ReducedGB& gb);

/// Pure difference lead - trail (has_trail) or the monomial lead.
struct Binomial {
  Monomial lead;
  Monomial trail;
  bool has_trail = false;
};

/// Reduced basis of an ideal generated by pure differences and monomials.
/// Every element is again a pure difference or a monomial.
std::vector<Binomial> binomial_buchberger(std::vector<Binomial> gens, const MonomialOrder& order,
                                          const GroebnerOptions& options = {});

/// Leading monomials of the reduced basis only; avoids building
/// polynomials. Used by order scans.
std::vector<Monomial> binomial_initial_generators(const std::vector<Binomial>& gens, const MonomialOrder& order);

/// Converts a pure difference or monomial (any nonzero scalar multiple) to
/// engine form; returns false for other shapes.
bool to_binomial(const Polynomial& f, const MonomialOrder& order, Binomial& out);

}  // namespace latticelab
