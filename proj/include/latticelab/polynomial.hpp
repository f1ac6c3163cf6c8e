#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latticelab/monomial.hpp"
#include "latticelab/order.hpp"

namespace latticelab {

/// Exact coefficient. Over GF(p) the value is the integer residue in [0, p).
using Coefficient = mpq_class;

/// Coefficient field: the rationals (characteristic 0) or GF(p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  /// Throws BadParameters unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }

  Coefficient normalize(const Coefficient& c) const;
  Coefficient add(const Coefficient& a, const Coefficient& b) const { return reduce(a + b); }
  Coefficient sub(const Coefficient& a, const Coefficient& b) const { return reduce(a - b); }
  Coefficient mul(const Coefficient& a, const Coefficient& b) const { return reduce(a * b); }
  Coefficient neg(const Coefficient& a) const { return reduce(-a); }
  Coefficient inv(const Coefficient& a) const;
  Coefficient div(const Coefficient& a, const Coefficient& b) const { return mul(a, inv(b)); }

  /// Integers and reduced fractions; residues use the symmetric range.
  std::string format(const Coefficient& c) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  Coefficient reduce(const Coefficient& c) const { return p_ == 0 ? c : normalize(c); }

  std::uint64_t p_ = 0;
};

/// Variables, coefficient field and the active monomial order.
class Ring {
 public:
  Ring(std::vector<std::string> names, Field field, MonomialOrder order);

  /// Degree-reverse-lexicographic order along the variable list unless an
  /// order is given.
  static std::shared_ptr<const Ring> make(std::vector<std::string> names, Field field = {});
  static std::shared_ptr<const Ring> make(std::vector<std::string> names, Field field, MonomialOrder order);

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t nvars() const noexcept { return names_.size(); }
  const Field& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }

  std::size_t index(std::string_view name) const;
  std::shared_ptr<const Ring> with_order(MonomialOrder order) const;
  /// Appends a fresh variable (smallest in the order); the name is made
  /// unique by appending underscores.
  std::shared_ptr<const Ring> extended(std::string name) const;

  /// Same variables and field; the order may differ.
  bool same_description(const Ring& other) const noexcept {
    return names_ == other.names_ && field_ == other.field_;
  }

 private:
  std::vector<std::string> names_;
  Field field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Coefficient coef;
  Monomial mono;
};

/// Multivariate polynomial with terms sorted strictly descending by the
/// ring's order; no zero coefficients, no repeated monomials.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Coefficient& c);
  static Polynomial variable(RingPtr ring, std::size_t index, unsigned power = 1);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Coefficient& c = 1);
  /// Pure difference m1 - m2.
  static Polynomial difference(RingPtr ring, const Monomial& m1, const Monomial& m2);
  /// Sorts, merges equal monomials and drops zero terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Largest term under the ring order; throws ZeroPolynomial.
  const Term& leading() const;
  unsigned degree() const noexcept;
  /// Union of supports of all terms.
  std::uint32_t support() const noexcept;

  Polynomial operator-() const;
  Polynomial scaled(const Coefficient& c) const;
  Polynomial times(const Monomial& m) const;
  Polynomial monic() const;

  /// Re-sorts under another ring with the same description, or embeds into
  /// an extension ring whose leading variables match.
  Polynomial in_ring(RingPtr target) const;

  /// Exactly two terms whose coefficients sum to zero, or one term.
  bool is_binomial_shape() const noexcept;

  std::string str() const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms) : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Polynomial with polynomial * coefficient.
Polynomial operator*(const Polynomial& f, const Coefficient& c);

enum class Arith { Add, Sub, Mul };
Polynomial poly_arith(Arith op, const Polynomial& f, const Polynomial& g);

std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

/// Maximal term of a nonzero polynomial under `order`.
std::pair<Coefficient, Monomial> leading_term(const MonomialOrder& order, const Polynomial& f);

/// Parses sums of products of numbers, variables, powers and parentheses,
/// e.g. "x1*y2 - x2*y1" or "3/2*a^2*(b - c)".
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);

/// Throws RingMismatch unless both rings describe the same variables and field.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace latticelab
