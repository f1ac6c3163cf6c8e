#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latticelab/monomial.hpp"

namespace latticelab {

enum class OrderKind { Lex, DegRevLex };

/// Total monomial order: lexicographic or degree-reverse-lexicographic
/// along a variable priority (priority[0] is the largest variable),
/// optionally preceded by a lexicographic elimination block.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::vector<std::size_t> priority);
  static MonomialOrder degrevlex(std::vector<std::size_t> priority);
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder degrevlex(std::size_t nvars);
  /// Compares the exponents of `block` lexicographically first and breaks
  /// ties with `ambient`. Every monomial involving a block variable is
  /// larger than all monomials free of the block.
  static MonomialOrder elimination(std::vector<std::size_t> block, const MonomialOrder& ambient);

  OrderKind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return priority_.size(); }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  const std::vector<std::size_t>& block() const noexcept { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    for (std::uint8_t v : block8_)
      if (a[v] != b[v]) return a[v] <=> b[v];
    if (kind_ == OrderKind::Lex) {
      for (std::uint8_t v : prio8_)
        if (a[v] != b[v]) return a[v] <=> b[v];
      return std::strong_ordering::equal;
    }
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (auto it = prio8_.rbegin(); it != prio8_.rend(); ++it)
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    return std::strong_ordering::equal;
  }
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  /// Same order extended by extra variables appended as smallest.
  MonomialOrder extended(std::size_t extra) const;

  /// Descriptor "lex:v1,v2,..." or "degrevlex:v1,..."; elimination orders
  /// render as "elim(b1,...)+<ambient>".
  std::string describe(const std::vector<std::string>& names) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.priority_ == b.priority_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority, std::vector<std::size_t> block);

  OrderKind kind_ = OrderKind::DegRevLex;
  std::vector<std::size_t> priority_;
  std::vector<std::size_t> block_;
  std::vector<std::uint8_t> prio8_;
  std::vector<std::uint8_t> block8_;
};

/// Parses "lex:<v1,...>" or "degrevlex:<v1,...>"; an omitted or empty list
/// means the given variable order. The list must be a permutation.
MonomialOrder parse_order(std::string_view descriptor, const std::vector<std::string>& names);

}  // namespace latticelab
