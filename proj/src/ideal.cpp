#include "latticelab/ideal.hpp"

#include <algorithm>
#include <bit>

#include "latticelab/error.hpp"

namespace latticelab {

// ---------------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  const auto order = MonomialOrder::degrevlex(nvars);
  std::sort(generators.begin(), generators.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Ascending order: a divisor always precedes its multiples.
  for (const auto& m : generators)
    if (std::none_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); })) gens_.push_back(m);
  std::reverse(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  auto all = gens_;
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(std::max(nvars_, other.nvars_), std::move(all));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  std::vector<Monomial> all;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) all.push_back(a.lcm(b));
  return MonomialIdeal(std::max(nvars_, other.nvars_), std::move(all));
}

std::vector<std::string> MonomialIdeal::strings(const std::vector<std::string>& names) const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(format_monomial(g, names));
  return out;
}

bool is_squarefree(const MonomialIdeal& m) {
  return std::all_of(m.generators().begin(), m.generators().end(), [](const Monomial& g) { return g.is_squarefree(); });
}

namespace {

void min_hitting_set(const std::vector<std::uint32_t>& supports, std::uint32_t chosen, unsigned count, unsigned& best) {
  if (count >= best) return;
  auto unhit = std::find_if(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & chosen) == 0; });
  if (unhit == supports.end()) {
    best = count;
    return;
  }
  if (count + 1 >= best) return;
  for (std::uint32_t s = *unhit; s != 0; s &= s - 1) {
    std::uint32_t bit = s & (~s + 1);
    min_hitting_set(supports, chosen | bit, count + 1, best);
  }
}

}  // namespace

unsigned krull_dim(const MonomialIdeal& m, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : m.generators()) {
    if (g.is_one()) return 0;  // unit ideal
    supports.push_back(g.support());
  }
  // Keep inclusion-minimal supports, smallest first for tighter branching.
  std::sort(supports.begin(), supports.end(),
            [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
  std::vector<std::uint32_t> minimal;
  for (auto s : supports)
    if (std::none_of(minimal.begin(), minimal.end(), [&](std::uint32_t t) { return (t & s) == t; })) minimal.push_back(s);
  unsigned best = static_cast<unsigned>(nvars) + 1;
  min_hitting_set(minimal, 0, 0, best);
  return static_cast<unsigned>(nvars) - std::min<unsigned>(best, static_cast<unsigned>(nvars));
}

unsigned krull_dim(const MonomialIdeal& m) { return krull_dim(m, m.nvars()); }

// ---------------------------------------------------------------- Ideal

MonomialOrder canonical_order(const Ring& ring) { return MonomialOrder::degrevlex(ring.nvars()); }

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(*g.ring(), *ring_);
    if (g.is_zero()) continue;
    gens_.push_back(g.in_ring(ring_));
  }
}

Ideal Ideal::parse(const RingPtr& ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(parse_polynomial(g, ring));
  return Ideal(ring, std::move(gens));
}

std::shared_ptr<const ReducedGB> Ideal::groebner(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mutex);
    for (const auto& [o, gb] : cache_->entries)
      if (o == order) return gb;
  }
  auto gb = std::make_shared<const ReducedGB>(buchberger(ring_, gens_, order));
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, existing] : cache_->entries)
    if (o == order) return existing;
  cache_->entries.emplace_back(order, gb);
  return gb;
}

std::shared_ptr<const ReducedGB> Ideal::groebner() const { return groebner(canonical_order(*ring_)); }

Ideal Ideal::plus(const std::vector<Polynomial>& more) const {
  auto gens = gens_;
  gens.insert(gens.end(), more.begin(), more.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::plus(const Ideal& other) const {
  require_same_ring(*ring_, *other.ring_);
  return plus(other.gens_);
}

bool Ideal::is_binomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_binomial_shape(); });
}

std::vector<std::string> Ideal::strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.str());
  return out;
}

MonomialIdeal initial_ideal(const ReducedGB& gb) {
  return MonomialIdeal(gb.ring()->nvars(), gb.leading_monomials());
}

MonomialIdeal initial_ideal(const Ideal& ideal, const MonomialOrder& order) { return initial_ideal(*ideal.groebner(order)); }

bool ideal_member(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order) {
  require_same_ring(*f.ring(), *ideal.ring());
  return ideal.groebner(order)->normal_form(f).is_zero();
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) { return ideal_member(f, ideal, canonical_order(*ideal.ring())); }

namespace {

struct Extension {
  RingPtr ring;
  std::size_t t;
};

Extension extend(const RingPtr& ring) {
  auto ext = ring->extended("t")->with_order(MonomialOrder::degrevlex(ring->nvars() + 1));
  return {ext, ring->nvars()};
}

std::vector<Polynomial> lift(const std::vector<Polynomial>& polys, const RingPtr& ring) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.in_ring(ring));
  return out;
}

bool monomial_only(const Ideal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& g) { return g.size() == 1; });
}

// Eliminates the trailing auxiliary variable and maps back to `base`.
Ideal eliminate_aux(const RingPtr& base, const Extension& ext, const std::vector<Polynomial>& gens) {
  Ideal big(ext.ring, gens);
  Ideal small = eliminate(big, {ext.t});
  return Ideal(base, lift(small.generators(), base));
}

}  // namespace

bool radical_member(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(*f.ring(), *ideal.ring());
  if (f.is_zero()) return true;
  auto ext = extend(ideal.ring());
  auto gens = lift(ideal.generators(), ext.ring);
  Polynomial t = Polynomial::variable(ext.ring, ext.t);
  gens.push_back(Polynomial::constant(ext.ring, 1) - t * f.in_ring(ext.ring));
  return buchberger(ext.ring, gens, ext.ring->order()).is_unit_ideal();
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop) {
  if (drop.empty()) return ideal;
  const RingPtr& ring = ideal.ring();
  std::uint32_t mask = 0;
  for (auto v : drop) {
    if (v >= ring->nvars()) throw Error(ErrorKind::BadParameters, "eliminated variable outside the ring");
    mask |= 1u << v;
  }
  auto order = MonomialOrder::elimination(drop, canonical_order(*ring));
  auto gb = ideal.groebner(order);
  std::vector<Polynomial> kept;
  for (const auto& g : gb->basis())
    if ((g.support() & mask) == 0) kept.push_back(g.in_ring(ring));
  return Ideal(ring, std::move(kept));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  const RingPtr& ring = a.ring();
  if (a.generators().empty() || b.generators().empty()) return Ideal(ring, {});
  // A monomial ideal on the (1 - t) side keeps every generator a pure
  // difference, so the binomial engine applies when the other side is binomial.
  const bool swap = !monomial_only(b) && monomial_only(a);
  const Ideal& left = swap ? b : a;
  const Ideal& right = swap ? a : b;
  auto ext = extend(ring);
  Polynomial t = Polynomial::variable(ext.ring, ext.t);
  Polynomial one_minus_t = Polynomial::constant(ext.ring, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : left.generators()) gens.push_back(t * g.in_ring(ext.ring));
  for (const auto& g : right.generators()) gens.push_back(one_minus_t * g.monic().in_ring(ext.ring));
  return eliminate_aux(ring, ext, gens);
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw Error(ErrorKind::BadParameters, "empty intersection");
  std::vector<const Ideal*> order;
  for (const auto& i : ideals)
    if (monomial_only(i)) order.push_back(&i);
  for (const auto& i : ideals)
    if (!monomial_only(i)) order.push_back(&i);
  Ideal acc = *order[0];
  for (std::size_t i = 1; i < order.size(); ++i) acc = intersect(acc, *order[i]);
  return acc;
}

Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
  require_same_ring(*g.ring(), *f.ring());
  if (f.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by zero");
  const RingPtr& ring = g.ring();
  const Field& field = ring->field();
  Polynomial divisor = f.in_ring(ring);
  const Term lead = divisor.leading();
  Polynomial rest = g;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& t = rest.leading();
    if (!lead.mono.divides(t.mono)) throw Error(ErrorKind::InvalidInput, f.str() + " does not divide " + g.str());
    Term q{field.div(t.coef, lead.coef), t.mono / lead.mono};
    rest = rest - divisor.times(q.mono).scaled(q.coef);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(ring, std::move(quotient));
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(*f.ring(), *ideal.ring());
  if (f.is_zero()) throw Error(ErrorKind::ZeroDivisor, "colon by zero");
  if (f.is_constant()) return ideal;
  Ideal both = intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Polynomial> quotients;
  Polynomial divisor = f.in_ring(ideal.ring());
  for (const auto& g : both.generators()) quotients.push_back(divide_exact(g, divisor));
  return Ideal(ideal.ring(), std::move(quotients));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(*f.ring(), *ideal.ring());
  if (f.is_zero()) throw Error(ErrorKind::ZeroDivisor, "saturation by zero");
  if (f.is_constant()) return ideal;
  auto ext = extend(ideal.ring());
  auto gens = lift(ideal.generators(), ext.ring);
  Polynomial t = Polynomial::variable(ext.ring, ext.t);
  gens.push_back(t * f.monic().in_ring(ext.ring) - Polynomial::constant(ext.ring, 1));
  return eliminate_aux(ideal.ring(), ext, gens);
}

bool is_homogeneous(const Ideal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(), [](const Polynomial& g) {
    const unsigned d = g.terms().front().mono.degree();
    return std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) { return t.mono.degree() == d; });
  });
}

Ideal saturate_by_variables(const Ideal& ideal, const std::vector<std::size_t>& vars) {
  const RingPtr& ring = ideal.ring();
  for (auto v : vars)
    if (v >= ring->nvars()) throw Error(ErrorKind::InvalidInput, "variable index out of range");
  if (vars.empty()) return ideal;
  if (!is_homogeneous(ideal)) return saturate(ideal, variable_product(ring, vars));
  Ideal current = ideal;
  for (auto v : vars) {
    std::vector<std::size_t> priority;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      if (i != v) priority.push_back(i);
    priority.push_back(v);
    auto gb = current.groebner(MonomialOrder::degrevlex(priority));
    // With v smallest, v divides a homogeneous element iff it divides its leading term.
    std::vector<Polynomial> gens;
    bool changed = false;
    for (const auto& g : gb->basis()) {
      unsigned e = g.terms().front().mono[v];
      for (const auto& t : g.terms()) e = std::min(e, t.mono[v]);
      if (e == 0) {
        gens.push_back(g.in_ring(ring));
        continue;
      }
      changed = true;
      Monomial m = Monomial::variable(v, e);
      std::vector<Term> terms;
      for (const auto& t : g.terms()) terms.push_back({t.coef, t.mono / m});
      gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    if (changed) current = Ideal(ring, std::move(gens));
  }
  return current;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  return a.groebner()->basis() == b.groebner()->basis();
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  require_same_ring(*outer.ring(), *inner.ring());
  auto gb = outer.groebner();
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Polynomial& g) { return gb->normal_form(g).is_zero(); });
}

unsigned dimension(const Ideal& ideal) { return krull_dim(initial_ideal(*ideal.groebner())); }

Polynomial variable_product(const RingPtr& ring, const std::vector<std::size_t>& vars) {
  Monomial m;
  for (auto v : vars) {
    if (v >= ring->nvars()) throw Error(ErrorKind::InvalidInput, "variable index out of range");
    m.set(v, m[v] + 1);
  }
  return Polynomial::monomial(ring, m);
}

}  // namespace latticelab
