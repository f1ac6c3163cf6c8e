#include "latticelab/smith.hpp"

#include <algorithm>
#include <utility>

#include "latticelab/error.hpp"

namespace latticelab {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

struct Work {
  IntMatrix a, u, v;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
  }
  // row_i -= q * row_j
  void row_sub(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] -= q * a[j][c];
    for (std::size_t c = 0; c < rows; ++c) u[i][c] -= q * u[j][c];
  }
  // col_i -= q * col_j
  void col_sub(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] -= q * a[r][j];
    for (std::size_t r = 0; r < cols; ++r) v[r][i] -= q * v[r][j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }

  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool pivot(std::size_t t) {
    std::size_t br = rows, bc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (a[r][c] != 0 && (br == rows || abs(a[r][c]) < abs(a[br][bc]))) br = r, bc = c;
    if (br == rows) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void reduce(std::size_t t) {
    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_sub(r, t, q);
        if (a[r][t] != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
        col_sub(c, t, q);
        if (a[t][c] != 0) dirty = true;
      }
      if (dirty) {
        pivot(t);
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!mpz_divisible_p(a[r][c].get_mpz_t(), a[t][t].get_mpz_t())) {
            row_sub(t, r, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) negate_row(t);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& r : m)
    if (r.size() != cols) throw Error(ErrorKind::InvalidInput, "matrix rows differ in length");
  Work w{m, identity(rows), identity(cols), rows, cols};
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    if (!w.pivot(t)) break;
    w.reduce(t);
  }
  SmithResult out;
  for (std::size_t t = 0; t < n; ++t) out.invariants.push_back(w.a[t][t]);
  out.U = std::move(w.u);
  out.V = std::move(w.v);
  out.D = std::move(w.a);
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t inner = b.size();
  if (a[0].size() != inner) throw Error(ErrorKind::InvalidInput, "matrix dimensions do not match");
  IntMatrix out(a.size(), std::vector<mpz_class>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

mpz_class determinant(const IntMatrix& square) {
  const std::size_t n = square.size();
  for (const auto& r : square)
    if (r.size() != n) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  if (n == 0) return 1;
  // Bareiss elimination.
  IntMatrix a = square;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t IntegerLattice::rank() const {
  return static_cast<std::size_t>(
      std::count_if(smith_invariants.begin(), smith_invariants.end(), [](const mpz_class& d) { return d != 0; }));
}

bool IntegerLattice::saturated() const {
  return std::all_of(smith_invariants.begin(), smith_invariants.end(),
                     [](const mpz_class& d) { return d == 0 || d == 1; });
}

IntegerLattice make_integer_lattice(IntMatrix rows) {
  IntegerLattice lattice;
  lattice.smith_invariants = smith_normal_form(rows).invariants;
  lattice.basis = std::move(rows);
  return lattice;
}

}  // namespace latticelab
