#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace latticelab {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// U * m * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
/// (nonzero factors first, all nonnegative).
struct SmithResult {
  std::vector<mpz_class> invariants;  // the min(rows, cols) diagonal entries of D
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
};

/// `m` must be rectangular; an empty matrix yields empty results.
SmithResult smith_normal_form(const IntMatrix& m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
/// Determinant by fraction-free elimination.
mpz_class determinant(const IntMatrix& square);

/// Integer lattice spanned by the rows of `basis`.
struct IntegerLattice {
  IntMatrix basis;
  std::vector<mpz_class> smith_invariants;

  std::size_t rank() const;
  /// Z^n / L is torsion-free: every nonzero invariant factor is 1.
  bool saturated() const;
};

IntegerLattice make_integer_lattice(IntMatrix rows);

}  // namespace latticelab
