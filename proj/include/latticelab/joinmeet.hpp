#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latticelab/ideal.hpp"
#include "latticelab/lattice.hpp"
#include "latticelab/smith.hpp"

namespace latticelab {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct BasicBinomial {
  Element a;
  Element b;
  Polynomial binomial;  // ab - (a∧b)(a∨b)
};

struct JoinMeetIdeal {
  Lattice lattice;
  Ideal ideal;
  std::vector<BasicBinomial> basic_binomials;
};

/// Polynomial ring with one variable per element, in element order.
/// Throws RingTooLarge beyond Monomial::kMaxVars elements.
RingPtr lattice_ring(const Lattice& lattice, const Field& field = {});

/// One generator per incomparable pair, in incomparable_pairs() order.
JoinMeetIdeal join_meet_ideal(const Lattice& lattice, const RingPtr& ring);
JoinMeetIdeal join_meet_ideal(const Lattice& lattice, const Field& field = {});

struct PrimalityCertificate {
  bool prime = false;
  std::vector<std::size_t> variables;  // linear generators
  std::vector<Polynomial> binomials;   // pure differences of the reduced basis
  IntegerLattice lattice;              // their exponent differences
  std::string reason;                  // why not prime, when not
};

/// Reads the canonical reduced basis as variables plus pure differences,
/// checks saturation by the remaining variables and tests the exponent
/// lattice with Smith normal form. Throws NotPureDifference or
/// NotSaturatedInput when the ideal is not in that shape.
PrimalityCertificate certify_prime(const Ideal& ideal);
bool certify_prime_component(const Ideal& ideal);

struct PrimeComponent {
  AdmissibleSet admissible;
  Ideal ideal;
  bool certified_prime = false;
  unsigned dim = 0;
};

/// P_A(L) = I_{L_A} : (product of the complement)^∞ + (variables of A).
PrimeComponent component_prime(const Lattice& lattice, const AdmissibleSet& admissible, const RingPtr& ring);
PrimeComponent component_prime(const Lattice& lattice, const AdmissibleSet& admissible);

struct WorkflowOptions {
  unsigned jobs = 1;
};

struct Decomposition {
  std::size_t admissible_sets = 0;
  std::size_t distinct_components = 0;
  /// Inclusion-minimal components, in admissible-set order.
  std::vector<PrimeComponent> components;
  bool all_prime = false;
  /// Intersection of `components` equals the join-meet ideal.
  bool intersection_verified = false;
};

/// Computes every P_A(L), merges equal ones (keeping the first admissible
/// set), keeps the inclusion-minimal ones and compares their intersection
/// with I_L. Never throws on a mismatch.
Decomposition decompose(const JoinMeetIdeal& jm, const WorkflowOptions& options = {});

/// decompose(), throwing IntersectionMismatch when the intersection differs.
Decomposition minimal_primes(const Lattice& lattice, const WorkflowOptions& options = {});

enum class RadicalVerdict { Radical, NotRadical, Inconclusive };
const char* to_string(RadicalVerdict verdict) noexcept;

struct RadicalOptions {
  /// Orders tried in stage 1: both identity orders, then seeded samples.
  unsigned stage1_orders = 16;
  std::uint64_t seed = kDefaultSeed;
  /// Witness degree bound; defaults to length(L) + 2.
  std::optional<unsigned> degree_bound;
  /// Radical-membership tests allowed in stage 3.
  unsigned max_confirmations = 64;
  unsigned jobs = 1;
};

struct RadicalCertificate {
  RadicalVerdict verdict = RadicalVerdict::Inconclusive;
  int stage = 0;                              // stage that decided, 0 when inconclusive
  std::optional<std::string> squarefree_order;  // stage 1
  std::optional<Decomposition> decomposition;   // stage 2 onwards
  std::optional<Polynomial> witness;            // stage 3
  unsigned degree_bound = 0;
};

RadicalCertificate radical_certificate(const Lattice& lattice, const RadicalOptions& options = {});

struct ScanOptions {
  enum class Mode { Auto, Exhaustive, Sample };
  std::vector<OrderKind> families{OrderKind::Lex, OrderKind::DegRevLex};
  Mode mode = Mode::Auto;
  /// Auto mode enumerates all permutations up to this many variables.
  std::size_t exhaustive_limit = 8;
  std::size_t sample_size = 10000;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
};

struct FamilyScan {
  OrderKind kind = OrderKind::Lex;
  bool exhaustive = false;
  std::size_t orders = 0;
  std::size_t squarefree = 0;
  std::optional<std::size_t> first_squarefree;
  /// One byte per order (1 = squarefree), in enumeration order.
  std::vector<std::uint8_t> verdicts;
};

struct ScanReport {
  std::vector<FamilyScan> families;
  bool any_squarefree = false;
  std::optional<std::string> witness_order;
  std::size_t orders_scanned() const;
};

ScanReport squarefree_order_scan(const Lattice& lattice, const ScanOptions& options = {});

/// The permutation of 0..n-1 with the given rank in lexicographic order.
std::vector<std::size_t> permutation_at(std::size_t n, std::uint64_t rank);
/// Seeded uniform permutations, identical for identical arguments.
std::vector<std::vector<std::size_t>> sample_permutations(std::size_t n, std::size_t count, std::uint64_t seed);

struct Check {
  std::string name;
  bool pass = false;
  std::optional<std::string> witness;
};

struct SuiteReport {
  std::string lattice;
  std::vector<Check> checks;
  std::vector<PrimeComponent> components;
  std::vector<std::pair<std::string, double>> timings;  // seconds

  bool passed() const;
};

/// Stages (a)-(h) for L_k. Throws BadParameters unless 1 <= k <= n-1.
SuiteReport lk_suite(unsigned n, unsigned k, const WorkflowOptions& options = {});

/// Stated objects for L_k with variables x1..xn, y1..yn, z.
namespace lk {

std::size_t x(unsigned n, unsigned i);
std::size_t y(unsigned n, unsigned i);
std::size_t z(unsigned n);

/// The Gröbner basis set G of the degrevlex order x1 > ... > yn > z.
std::vector<Polynomial> stated_basis(const RingPtr& ring, unsigned n, unsigned k);
/// Its initial monomials M.
MonomialIdeal stated_initial(unsigned n, unsigned k);
/// ini(I) + (x_{k+1}, y_1 y_k, ..., y_{k-1} y_k, y_k^2).
MonomialIdeal stated_initial_with_difference(unsigned n, unsigned k);

struct NamedIdeal {
  std::string name;
  Ideal ideal;
};
/// P, P1, P1', P2, P2', P3, P3' in that order.
std::vector<NamedIdeal> stated_primes(const JoinMeetIdeal& jm, unsigned n, unsigned k);
/// Stated dimensions in the order of stated_primes().
std::vector<unsigned> stated_dimensions(unsigned n, unsigned k);

}  // namespace lk

}  // namespace latticelab
