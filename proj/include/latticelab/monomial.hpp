#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace latticelab {

/// Exponent vector over at most kMaxVars variables. Positions beyond the
/// ring's variable count stay zero, so a monomial of a ring embeds in any
/// extension ring that appends variables.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 32;
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, unsigned e);

  unsigned degree() const noexcept { return degree_; }
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const noexcept { return support_; }
  bool is_one() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;

  bool divides(const Monomial& other) const noexcept {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const noexcept { return (support_ & other.support_) == 0; }

  Monomial operator*(const Monomial& other) const noexcept;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;
  Monomial gcd(const Monomial& other) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.support_ == b.support_ && a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept;

 private:
  void refresh() noexcept;

  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace latticelab
