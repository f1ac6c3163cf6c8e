#include "latticelab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "latticelab/error.hpp"

namespace latticelab {

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31)) throw Error(ErrorKind::BadParameters, "characteristic must be a prime below 2^31");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error(ErrorKind::BadParameters, std::to_string(p) + " is not prime");
  return Field(p);
}

Coefficient Field::normalize(const Coefficient& c) const {
  if (p_ == 0) {
    Coefficient r = c;
    r.canonicalize();
    return r;
  }
  mpz_class mod(static_cast<unsigned long>(p_));
  mpz_class num = c.get_num() % mod;
  if (num < 0) num += mod;
  mpz_class den = c.get_den() % mod;
  if (den == 0) throw Error(ErrorKind::ZeroDivisor, "denominator divisible by the characteristic");
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    num = (num * inv) % mod;
  }
  return Coefficient(num);
}

Coefficient Field::inv(const Coefficient& a) const {
  if (a == 0) throw Error(ErrorKind::ZeroDivisor, "inverse of zero");
  if (p_ == 0) {
    Coefficient r(a.get_den(), a.get_num());
    r.canonicalize();
    return r;
  }
  mpz_class mod(static_cast<unsigned long>(p_));
  mpz_class inv;
  mpz_class num = a.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  return Coefficient(inv);
}

std::string Field::format(const Coefficient& c) const {
  if (p_ != 0) {
    mpz_class v = c.get_num();
    if (v > static_cast<unsigned long>(p_ / 2)) v -= static_cast<unsigned long>(p_);
    return v.get_str();
  }
  return c.get_str();
}

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names, Field field, MonomialOrder order)
    : names_(std::move(names)), field_(field), order_(std::move(order)) {
  if (names_.size() > Monomial::kMaxVars)
    throw Error(ErrorKind::RingTooLarge, std::to_string(names_.size()) + " variables exceed the limit of " +
                                             std::to_string(Monomial::kMaxVars));
  if (order_.nvars() != names_.size()) throw Error(ErrorKind::BadParameters, "order does not match the variable count");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error(ErrorKind::InvalidInput, "duplicate variable '" + names_[i] + "'");
}

RingPtr Ring::make(std::vector<std::string> names, Field field) {
  if (names.size() > Monomial::kMaxVars)
    throw Error(ErrorKind::RingTooLarge, std::to_string(names.size()) + " variables exceed the limit of " +
                                             std::to_string(Monomial::kMaxVars));
  auto order = MonomialOrder::degrevlex(names.size());
  return std::make_shared<const Ring>(std::move(names), field, std::move(order));
}

RingPtr Ring::make(std::vector<std::string> names, Field field, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), field, std::move(order));
}

std::size_t Ring::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw Error(ErrorKind::InvalidInput, "unknown variable '" + std::string(name) + "'");
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(names_, field_, std::move(order)); }

RingPtr Ring::extended(std::string name) const {
  while (std::find(names_.begin(), names_.end(), name) != names_.end()) name += "_";
  auto names = names_;
  names.push_back(std::move(name));
  return make(std::move(names), field_, order_.extended(1));
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_description(b)) throw Error(ErrorKind::RingMismatch, "operands live in different rings");
}

// ---------------------------------------------------------------- Polynomial

namespace {

void sort_terms(const MonomialOrder& order, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
}

void check_support(const Ring& ring, const Monomial& m) {
  const std::uint32_t allowed = ring.nvars() >= 32 ? 0xffffffffu : ((1u << ring.nvars()) - 1);
  if ((m.support() & ~allowed) != 0) throw Error(ErrorKind::RingMismatch, "monomial uses variables outside the ring");
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error(ErrorKind::InvalidInput, "null ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& c) {
  return monomial(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, unsigned power) {
  if (index >= ring->nvars()) throw Error(ErrorKind::InvalidInput, "variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index, power));
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto i = ring->index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Coefficient& c) {
  check_support(*ring, m);
  Coefficient v = ring->field().normalize(c);
  Polynomial p(std::move(ring));
  if (v != 0) p.terms_.push_back({std::move(v), m});
  return p;
}

Polynomial Polynomial::difference(RingPtr ring, const Monomial& m1, const Monomial& m2) {
  return from_terms(std::move(ring), {{Coefficient(1), m1}, {Coefficient(-1), m2}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Field& field = ring->field();
  for (auto& t : terms) {
    check_support(*ring, t.mono);
    t.coef = field.normalize(t.coef);
  }
  sort_terms(ring->order(), terms);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coef = field.add(merged.back().coef, t.coef);
    else
      merged.push_back(std::move(t));
    if (merged.back().coef == 0) merged.pop_back();
  }
  return Polynomial(std::move(ring), std::move(merged));
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading term of zero");
  return terms_.front();
}

unsigned Polynomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::support() const noexcept {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

Polynomial Polynomial::operator-() const { return scaled(Coefficient(-1)); }

Polynomial Polynomial::scaled(const Coefficient& c) const {
  const Field& field = ring_->field();
  Coefficient v = field.normalize(c);
  if (v == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({field.mul(t.coef, v), t.mono});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times(const Monomial& m) const {
  check_support(*ring_, m);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.coef, t.mono * m});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coef));
}

Polynomial Polynomial::in_ring(RingPtr target) const {
  if (target.get() == ring_.get()) return *this;
  bool ok = target->field() == ring_->field() && target->nvars() >= ring_->nvars() &&
            std::equal(ring_->names().begin(), ring_->names().end(), target->names().begin());
  if (!ok) {
    // Restriction to a prefix ring is allowed when unused variables vanish.
    ok = target->field() == ring_->field() && target->nvars() < ring_->nvars() &&
         std::equal(target->names().begin(), target->names().end(), ring_->names().begin());
    if (ok) {
      const std::uint32_t allowed = (1u << target->nvars()) - 1;
      if ((support() & ~allowed) != 0) throw Error(ErrorKind::RingMismatch, "polynomial uses dropped variables");
    }
  }
  if (!ok) throw Error(ErrorKind::RingMismatch, "incompatible target ring");
  std::vector<Term> terms = terms_;
  if (!(target->order() == ring_->order())) sort_terms(target->order(), terms);
  return Polynomial(std::move(target), std::move(terms));
}

bool Polynomial::is_binomial_shape() const noexcept {
  if (terms_.size() == 1) return true;
  return terms_.size() == 2 && ring_->field().add(terms_[0].coef, terms_[1].coef) == 0;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_ring(*f.ring_, *g.ring_);
  const Polynomial& h = g.ring_.get() == f.ring_.get() ? g : g.in_ring(f.ring_);
  const auto& order = f.ring_->order();
  const Field& field = f.ring_->field();
  std::vector<Term> out;
  out.reserve(f.terms_.size() + h.terms_.size());
  auto a = f.terms_.begin();
  auto b = h.terms_.begin();
  while (a != f.terms_.end() || b != h.terms_.end()) {
    if (b == h.terms_.end() || (a != f.terms_.end() && order.greater(a->mono, b->mono))) {
      out.push_back(*a++);
    } else if (a == f.terms_.end() || order.greater(b->mono, a->mono)) {
      out.push_back(*b++);
    } else {
      Coefficient c = field.add(a->coef, b->coef);
      if (c != 0) out.push_back({std::move(c), a->mono});
      ++a;
      ++b;
    }
  }
  return Polynomial(f.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(*f.ring_, *g.ring_);
  const Field& field = f.ring_->field();
  std::unordered_map<Monomial, Coefficient, MonomialHash> acc;
  for (const auto& s : f.terms_)
    for (const auto& t : g.terms_) {
      auto [it, fresh] = acc.try_emplace(s.mono * t.mono, field.mul(s.coef, t.coef));
      if (!fresh) it->second = field.add(it->second, field.mul(s.coef, t.coef));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({c, m});
  sort_terms(f.ring_->order(), terms);
  return Polynomial(f.ring_, std::move(terms));
}

Polynomial operator*(const Polynomial& f, const Coefficient& c) { return f.scaled(c); }

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!f.ring_->same_description(*g.ring_)) return false;
  const Polynomial& h = g.ring_->order() == f.ring_->order() ? g : g.in_ring(f.ring_);
  if (f.terms_.size() != h.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (f.terms_[i].coef != h.terms_[i].coef || !(f.terms_[i].mono == h.terms_[i].mono)) return false;
  return true;
}

Polynomial poly_arith(Arith op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case Arith::Add: return f + g;
    case Arith::Sub: return f - g;
    case Arith::Mul: return f * g;
  }
  return f;
}

std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  const std::uint32_t allowed = order.nvars() >= 32 ? 0xffffffffu : ((1u << order.nvars()) - 1);
  if (((a.support() | b.support()) & ~allowed) != 0)
    throw Error(ErrorKind::RingMismatch, "monomial outside the order's ring");
  return order.compare(a, b);
}

std::pair<Coefficient, Monomial> leading_term(const MonomialOrder& order, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading term of zero");
  if (order.nvars() != f.ring()->nvars()) throw Error(ErrorKind::RingMismatch, "order and polynomial ring differ");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.greater(t.mono, best->mono)) best = &t;
  return {best->coef, best->mono};
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const Field& field = ring_->field();
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    std::string c = field.format(t.coef);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (i == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += format_monomial(t.mono, ring_->names());
    }
  }
  return out;
}

// ---------------------------------------------------------------- Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip();
    Polynomial acc(ring_);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    acc = negate ? -term() : term();
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(ring_->field().inv(d.terms()[0].coef));
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!eat('^')) return base;
    skip();
    unsigned e = number_literal().get_ui();
    Polynomial out = Polynomial::constant(ring_, 1);
    for (unsigned i = 0; i < e; ++i) out = out * base;
    return out;
  }

  mpz_class number_literal() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, Coefficient(number_literal()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      const auto& names = ring_->names();
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) fail("unknown variable '" + std::string(name) + "'");
      return Polynomial::variable(ring_, static_cast<std::size_t>(it - names.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace latticelab
