#include "latticelab/monomial.hpp"

#include <algorithm>
#include <limits>

#include "latticelab/error.hpp"

namespace latticelab {

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVars) throw Error(ErrorKind::RingTooLarge, "too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw Error(ErrorKind::RingTooLarge, "variable index out of range");
  if (e > std::numeric_limits<Exponent>::max()) throw Error(ErrorKind::InvalidInput, "exponent overflow");
  exp_[i] = static_cast<Exponent>(e);
  refresh();
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exp_.begin(), exp_.end(), [](Exponent e) { return e <= 1; });
}

Monomial Monomial::operator*(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] + other.exp_[i]);
  r.degree_ = degree_ + other.degree_;
  r.support_ = support_ | other.support_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] - divisor.exp_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = std::max(exp_[i], other.exp_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = std::min(exp_[i], other.exp_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

void Monomial::refresh() noexcept {
  degree_ = 0;
  support_ = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    degree_ += exp_[i];
    if (exp_[i] != 0) support_ |= 1u << i;
  }
}

}  // namespace latticelab
