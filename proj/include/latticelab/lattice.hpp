#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latticelab {

using Element = std::size_t;
using CoverPair = std::pair<std::string, std::string>;

/// A finite lattice given by its elements and cover relation.
///
/// All structural data (order relation, join and meet tables, the reduced
/// cover relation and, when it exists, the rank function) is computed once
/// at construction. Instances are immutable afterwards.
class Lattice {
 public:
  /// Builds the lattice generated by the transitive closure of `covers`.
  /// Element order is preserved from `elements`. Covers may contain
  /// redundant (transitive) relations; they are reduced.
  static Lattice build(std::vector<std::string> elements, const std::vector<CoverPair>& covers);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& elements() const noexcept { return names_; }
  const std::string& name(Element x) const { return names_.at(x); }
  std::optional<Element> find(std::string_view id) const;
  /// Index of `id`; throws InvalidInput when unknown.
  Element at(std::string_view id) const;

  bool leq(Element x, Element y) const { return leq_[x * size() + y] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  /// Cover relation (lower, upper), sorted by (lower, upper) index.
  const std::vector<std::pair<Element, Element>>& covers() const noexcept { return covers_; }
  std::vector<Element> lower_covers(Element x) const;

  bool is_graded() const noexcept { return rank_.has_value(); }
  /// Rank of `x`; throws PreconditionViolated for non-graded lattices.
  unsigned rank(Element x) const;
  /// Length of the longest chain.
  unsigned length() const;

  /// Cover pairs by identifier, in the order of covers().
  std::vector<CoverPair> cover_names() const;

  /// Same element list and same order relation.
  friend bool operator==(const Lattice& a, const Lattice& b);

 private:
  Lattice() = default;

  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::pair<Element, Element>> covers_;
  std::optional<std::vector<unsigned>> rank_;
  std::vector<unsigned> height_;
  Element bottom_ = 0;
  Element top_ = 0;
};

inline Lattice build_lattice(std::vector<std::string> elements, const std::vector<CoverPair>& covers) {
  return Lattice::build(std::move(elements), covers);
}

struct DistributivityReport {
  bool distributive = true;
  /// First triple (x, y, z) in index order with x∧(y∨z) != (x∧y)∨(x∧z).
  std::optional<std::array<Element, 3>> witness;
};

DistributivityReport is_distributive(const Lattice& lattice);

enum class SublatticeKind { Pentagon, Diamond };

/// Five elements closed under join and meet forming N5 or M3.
///
/// For a diamond, `middles` are the three atoms in index order. For a
/// pentagon, `middles` holds (low, high, side) where low < high is the
/// two-element chain and side is incomparable to both.
struct SublatticeWitness {
  SublatticeKind kind = SublatticeKind::Pentagon;
  Element bottom = 0;
  Element top = 0;
  std::array<Element, 3> middles{};

  std::array<Element, 5> members() const { return {bottom, middles[0], middles[1], middles[2], top}; }
};

/// Exhaustive search over 5-subsets in lexicographic index order.
std::optional<SublatticeWitness> find_sublattice(const Lattice& lattice, SublatticeKind kind);

/// Checks the given five elements are closed under join/meet and realise
/// the witness' pattern.
bool is_valid_witness(const Lattice& lattice, const SublatticeWitness& witness);

struct ModularityReport {
  bool modular = true;
  std::optional<SublatticeWitness> witness;
};

ModularityReport is_modular(const Lattice& lattice);

/// Interval [bottom, top] of rank length two whose atoms pairwise join to
/// top and meet to bottom.
struct Rank2Interval {
  Element bottom = 0;
  Element top = 0;
  std::vector<Element> atoms;
};

/// First rank-2 interval with at least three atoms. Requires a graded,
/// modular, non-distributive lattice.
Rank2Interval find_rank2_diamond(const Lattice& lattice);

/// Unordered incomparable pairs (a, b), a < b by index, in index order.
std::vector<std::pair<Element, Element>> incomparable_pairs(const Lattice& lattice);

struct AdmissibleSet {
  std::vector<Element> members;  // sorted by index

  friend bool operator==(const AdmissibleSet&, const AdmissibleSet&) = default;
};

/// For every basic binomial ab - (a∧b)(a∨b): {a,b} meets the set iff
/// {a∧b, a∨b} meets it.
bool is_admissible(const Lattice& lattice, const std::vector<Element>& members);

/// All admissible sets ordered by size, then lexicographically by index.
/// Limited to lattices with at most 24 elements.
std::vector<AdmissibleSet> enumerate_admissible_sets(const Lattice& lattice);

/// The sublattice on the complement of an admissible proper subset.
Lattice restrict_to_complement(const Lattice& lattice, const AdmissibleSet& admissible);

/// Non-minimum elements covering exactly one element, in index order.
std::vector<Element> join_irreducibles(const Lattice& lattice);

Lattice dual(const Lattice& lattice);

/// Cartesian product with componentwise order; element "u_v" for (u, v).
Lattice product(const Lattice& a, const Lattice& b);

std::string describe(const Lattice& lattice, const std::vector<Element>& subset);

namespace fixtures {

/// The 9-element modular non-distributive lattice with one diamond.
Lattice lattice_n();
/// The 7-element lattice a..g; it contains the pentagon {b, d, e, f, g}.
Lattice lattice_q();
/// lattice_n() with one extra element i, b < i < g.
Lattice lattice_r();
/// Chain c1 < ... < cm.
Lattice chain(unsigned m);
/// Divisor lattice with elements x1..xn, y1..yn: x_i < x_{i+1},
/// y_i < y_{i+1}, x_i < y_i.
Lattice divisor_ladder(unsigned n);
/// divisor_ladder(n) with z inserted: x_k < z < y_{k+1}.
Lattice lk(unsigned n, unsigned k);
Lattice m3();
Lattice n5();

/// Resolves a fixture name: N, Q, R, M3, N5, Chain:m, D:n (or
/// DivisorLadder:n), Lk:n:k.
Lattice by_name(std::string_view descriptor);

/// Names accepted by by_name(), with placeholder parameters.
std::vector<std::string> catalogue();

}  // namespace fixtures

}  // namespace latticelab
