#pragma once

// Brute-force reference implementations used to cross-check the library.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "latticelab/ideal.hpp"
#include "latticelab/lattice.hpp"

namespace oracle {

using latticelab::Element;
using latticelab::Lattice;
using latticelab::Monomial;
using latticelab::Polynomial;

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (v + 1 == nvars) {
      m.set(v, left);
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(v, e);
      rec(v + 1, left - e);
    }
    m.set(v, 0);
  };
  if (nvars > 0) rec(0, degree);
  return out;
}

/// Membership of a homogeneous f in the ideal of homogeneous generators:
/// f lies in the span of all products m * g of f's degree. Exact Gaussian
/// elimination over the rationals; no Gröbner bases involved.
inline bool homogeneous_member(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  const std::size_t nvars = f.ring()->nvars();
  const unsigned degree = f.terms().front().mono.degree();
  auto cols = monomials_of_degree(nvars, degree);
  auto col_of = [&](const Monomial& m) {
    return static_cast<std::size_t>(std::find(cols.begin(), cols.end(), m) - cols.begin());
  };
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    unsigned dg = g.terms().front().mono.degree();
    if (dg > degree) continue;
    for (const auto& m : monomials_of_degree(nvars, degree - dg)) {
      std::vector<mpq_class> row(cols.size(), 0);
      for (const auto& t : g.terms()) row[col_of(t.mono * m)] += t.coef;
      rows.push_back(std::move(row));
    }
  }
  // Row echelon form with recorded pivot columns.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols.size() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      mpq_class q = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols.size(); ++j) rows[i][j] -= q * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<mpq_class> v(cols.size(), 0);
  for (const auto& t : f.terms()) v[col_of(t.mono)] += t.coef;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::size_t c = pivots[i];
    if (v[c] == 0) continue;
    mpq_class q = v[c] / rows[i][c];
    for (std::size_t j = c; j < cols.size(); ++j) v[j] -= q * rows[i][j];
  }
  return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
}

/// Admissibility read off the ideal: setting the set's variables to zero
/// either kills both terms of each basic binomial or neither.
inline bool admissible_by_substitution(const Lattice& l, std::uint32_t mask) {
  auto vanishes = [&](Element a, Element b) { return ((mask >> a) & 1u) || ((mask >> b) & 1u); };
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = a + 1; b < l.size(); ++b) {
      if (l.comparable(a, b)) continue;
      if (vanishes(a, b) != vanishes(l.meet(a, b), l.join(a, b))) return false;
    }
  return true;
}

enum class Shape { None, Diamond, Pentagon };

/// Shape of a 5-element subset closed under join and meet.
inline Shape shape_of(const Lattice& l, const std::vector<Element>& s) {
  for (Element x : s)
    for (Element y : s) {
      if (std::find(s.begin(), s.end(), l.join(x, y)) == s.end()) return Shape::None;
      if (std::find(s.begin(), s.end(), l.meet(x, y)) == s.end()) return Shape::None;
    }
  int comparable_pairs = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) comparable_pairs += l.comparable(s[i], s[j]) ? 1 : 0;
  // Diamond: bottom and top comparable to all (7 pairs), middles pairwise incomparable.
  // Pentagon: 7 pairs as well plus the 2-chain, i.e. 8.
  if (comparable_pairs == 7) return Shape::Diamond;
  if (comparable_pairs == 8) return Shape::Pentagon;
  return Shape::None;
}

inline bool has_shape(const Lattice& l, Shape want) {
  const std::size_t n = l.size();
  std::vector<Element> s(5);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == 5) return shape_of(l, s) == want;
    for (std::size_t i = start; i < n; ++i) {
      s[depth] = i;
      if (rec(i + 1, depth + 1)) return true;
    }
    return false;
  };
  return n >= 5 && rec(0, 0);
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, unsigned degree) {
  Monomial m;
  for (unsigned i = 0; i < degree; ++i) {
    std::size_t v = rng() % nvars;
    m.set(v, m[v] + 1);
  }
  return m;
}

}  // namespace oracle
