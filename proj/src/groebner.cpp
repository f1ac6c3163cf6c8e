#include "latticelab/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "latticelab/error.hpp"

namespace latticelab {

namespace {

using Terms = std::vector<Term>;

void sort_desc(const MonomialOrder& order, Terms& t) {
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
}

// p[from+1..] - c * m * g[1..]; the leading terms cancel by construction.
Terms subtract_multiple(const Terms& p, std::size_t from, const Coefficient& c, const Monomial& m, const Terms& g,
                        const MonomialOrder& order, const Field& field) {
  Terms out;
  out.reserve(p.size() - from + g.size());
  std::size_t a = from + 1;
  std::size_t b = 1;
  while (a < p.size() || b < g.size()) {
    if (b >= g.size()) {
      out.push_back(p[a++]);
      continue;
    }
    Monomial gm = g[b].mono * m;
    if (a < p.size()) {
      auto cmp = order.compare(p[a].mono, gm);
      if (cmp > 0) {
        out.push_back(p[a++]);
        continue;
      }
      if (cmp == 0) {
        Coefficient v = field.sub(p[a].coef, field.mul(c, g[b].coef));
        if (v != 0) out.push_back({std::move(v), gm});
        ++a;
        ++b;
        continue;
      }
    }
    out.push_back({field.neg(field.mul(c, g[b].coef)), gm});
    ++b;
  }
  return out;
}

struct PairKey {
  Monomial lcm;
  std::size_t i, j;
};

class PairQueue {
 public:
  explicit PairQueue(const MonomialOrder& order) : queue_(Compare{&order}) {}

  void push(PairKey k) {
    pending_.insert({k.i, k.j});
    queue_.push(std::move(k));
  }
  bool empty() const { return queue_.empty(); }
  PairKey pop() {
    PairKey k = queue_.top();
    queue_.pop();
    pending_.erase({k.i, k.j});
    return k;
  }
  bool pending(std::size_t i, std::size_t j) const {
    return pending_.count({std::min(i, j), std::max(i, j)}) != 0;
  }

 private:
  struct Compare {
    const MonomialOrder* order;
    // priority_queue pops the largest; "largest" is the smallest lcm.
    bool operator()(const PairKey& a, const PairKey& b) const {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() > b.lcm.degree();
      auto c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c > 0;
      if (a.j != b.j) return a.j > b.j;
      return a.i > b.i;
    }
  };
  std::priority_queue<PairKey, std::vector<PairKey>, Compare> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

template <class LeadOf>
bool chain_skip(const PairKey& p, std::size_t count, const PairQueue& queue, LeadOf lead_of) {
  for (std::size_t k = 0; k < count; ++k) {
    if (k == p.i || k == p.j) continue;
    if (!lead_of(k).divides(p.lcm)) continue;
    if (!queue.pending(p.i, k) && !queue.pending(p.j, k)) return true;
  }
  return false;
}

// ------------------------------------------------------------------ general

class GeneralEngine {
 public:
  GeneralEngine(const MonomialOrder& order, const Field& field) : order_(order), field_(field) {}

  Terms reduce(Terms p, const std::vector<std::size_t>* only = nullptr) const {
    Terms result;
    std::size_t idx = 0;
    while (idx < p.size()) {
      const Term& t = p[idx];
      const std::size_t k = find_divisor(t.mono, only);
      if (k == npos) {
        result.push_back(t);
        ++idx;
        continue;
      }
      Monomial q = t.mono / leads_[k];
      Coefficient c = t.coef;
      p = subtract_multiple(p, idx, c, q, basis_[k], order_, field_);
      idx = 0;
    }
    return result;
  }

  void make_monic(Terms& p) const {
    if (p.empty() || p[0].coef == 1) return;
    Coefficient inv = field_.inv(p[0].coef);
    for (auto& t : p) t.coef = field_.mul(t.coef, inv);
  }

  Terms spoly(std::size_t i, std::size_t j) const {
    const Monomial l = leads_[i].lcm(leads_[j]);
    Terms a = basis_[i];
    Monomial mi = l / leads_[i];
    for (auto& t : a) t.mono = t.mono * mi;
    // a - (l/lead_j) * basis_j, leading terms cancel (both monic)
    return subtract_multiple(a, 0, Coefficient(1), l / leads_[j], basis_[j], order_, field_);
  }

  std::vector<Terms> run(const std::vector<Terms>& gens, bool chain) {
    PairQueue queue(order_);
    auto add = [&](Terms h) {
      make_monic(h);
      const std::size_t n = basis_.size();
      leads_.push_back(h[0].mono);
      basis_.push_back(std::move(h));
      for (std::size_t i = 0; i < n; ++i) queue.push({leads_[i].lcm(leads_[n]), i, n});
    };
    for (const auto& g : gens) {
      Terms h = reduce(g);
      if (!h.empty()) add(std::move(h));
    }
    while (!queue.empty()) {
      PairKey p = queue.pop();
      if (leads_[p.i].coprime(leads_[p.j])) continue;
      if (chain && chain_skip(p, basis_.size(), queue, [&](std::size_t k) -> const Monomial& { return leads_[k]; }))
        continue;
      Terms h = reduce(spoly(p.i, p.j));
      if (!h.empty()) add(std::move(h));
    }
    return finish();
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t find_divisor(const Monomial& m, const std::vector<std::size_t>* only) const {
    if (only) {
      for (std::size_t k : *only)
        if (leads_[k].divides(m)) return k;
      return npos;
    }
    for (std::size_t k = 0; k < leads_.size(); ++k)
      if (leads_[k].divides(m)) return k;
    return npos;
  }

  std::vector<Terms> finish() const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j || !leads_[j].divides(leads_[i])) continue;
        redundant = !(leads_[i] == leads_[j]) || j < i;
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<Terms> out;
    for (std::size_t i : keep) {
      Terms tail(basis_[i].begin() + 1, basis_[i].end());
      Terms reduced = reduce(std::move(tail), &keep);
      Terms g{basis_[i][0]};
      g.insert(g.end(), reduced.begin(), reduced.end());
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [&](const Terms& a, const Terms& b) { return order_.greater(a[0].mono, b[0].mono); });
    return out;
  }

  const MonomialOrder& order_;
  const Field& field_;
  std::vector<Terms> basis_;
  std::vector<Monomial> leads_;
};

// ------------------------------------------------------------------ binomial

class BinomialEngine {
 public:
  explicit BinomialEngine(const MonomialOrder& order) : order_(order) {}

  // Normal form of a monomial; false when it reduces to zero.
  bool reduce_monomial(Monomial& m, const std::vector<std::size_t>* only = nullptr) const {
    while (true) {
      const Binomial* hit = nullptr;
      if (only) {
        for (std::size_t k : *only)
          if (basis_[k].lead.divides(m)) {
            hit = &basis_[k];
            break;
          }
      } else {
        for (const auto& g : basis_)
          if (g.lead.divides(m)) {
            hit = &g;
            break;
          }
      }
      if (!hit) return true;
      if (!hit->has_trail) return false;
      m = (m / hit->lead) * hit->trail;
    }
  }

  // Full normal form; false when zero.
  bool reduce(Binomial& b) const {
    bool lead_alive = reduce_monomial(b.lead);
    bool trail_alive = b.has_trail && reduce_monomial(b.trail);
    return orient(b, lead_alive, trail_alive);
  }

  bool orient(Binomial& b, bool lead_alive, bool trail_alive) const {
    if (lead_alive && trail_alive) {
      auto c = order_.compare(b.lead, b.trail);
      if (c == 0) return false;
      if (c < 0) std::swap(b.lead, b.trail);
      b.has_trail = true;
      return true;
    }
    if (lead_alive) {
      b.has_trail = false;
      return true;
    }
    if (trail_alive) {
      b.lead = b.trail;
      b.has_trail = false;
      return true;
    }
    return false;
  }

  bool spoly(std::size_t i, std::size_t j, Binomial& out) const {
    const Binomial& a = basis_[i];
    const Binomial& b = basis_[j];
    const Monomial l = a.lead.lcm(b.lead);
    bool ta = a.has_trail, tb = b.has_trail;
    if (ta) out.lead = (l / a.lead) * a.trail;
    if (tb) out.trail = (l / b.lead) * b.trail;
    if (!ta && !tb) return false;
    if (!ta) {
      out.lead = out.trail;
      out.has_trail = false;
      return true;
    }
    out.has_trail = tb;
    if (tb && out.lead == out.trail) return false;
    return true;
  }

  std::vector<Binomial> run(std::vector<Binomial> gens, bool chain) {
    PairQueue queue(order_);
    auto add = [&](const Binomial& h) {
      const std::size_t n = basis_.size();
      basis_.push_back(h);
      for (std::size_t i = 0; i < n; ++i) {
        if (!basis_[i].has_trail && !basis_[n].has_trail) continue;  // S(m1, m2) = 0
        queue.push({basis_[i].lead.lcm(basis_[n].lead), i, n});
      }
    };
    for (auto& g : gens) {
      if (reduce(g)) add(g);
    }
    Binomial h;
    while (!queue.empty()) {
      PairKey p = queue.pop();
      if (basis_[p.i].lead.coprime(basis_[p.j].lead)) continue;
      if (chain &&
          chain_skip(p, basis_.size(), queue, [&](std::size_t k) -> const Monomial& { return basis_[k].lead; }))
        continue;
      if (!spoly(p.i, p.j, h)) continue;
      if (h.has_trail && order_.compare(h.lead, h.trail) < 0) std::swap(h.lead, h.trail);
      if (reduce(h)) add(h);
    }
    return finish();
  }

  std::vector<std::size_t> minimal_indices() const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j || !basis_[j].lead.divides(basis_[i].lead)) continue;
        redundant = !(basis_[i].lead == basis_[j].lead) || j < i;
      }
      if (!redundant) keep.push_back(i);
    }
    return keep;
  }

  std::vector<Binomial> finish() const {
    auto keep = minimal_indices();
    std::vector<Binomial> out;
    out.reserve(keep.size());
    for (std::size_t i : keep) {
      Binomial g = basis_[i];
      if (g.has_trail) g.has_trail = reduce_monomial(g.trail, &keep);
      out.push_back(g);
    }
    std::sort(out.begin(), out.end(), [&](const Binomial& a, const Binomial& b) { return order_.greater(a.lead, b.lead); });
    return out;
  }

 private:
  const MonomialOrder& order_;
  std::vector<Binomial> basis_;
};

Terms terms_in_order(const Polynomial& f, const MonomialOrder& order) {
  Terms t = f.terms();
  if (!(f.ring()->order() == order)) sort_desc(order, t);
  return t;
}

}  // namespace

// ------------------------------------------------------------------ public

ReducedGB::ReducedGB(RingPtr ring, std::vector<Polynomial> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {
  leads_.reserve(basis_.size());
  for (auto& g : basis_) {
    if (g.ring().get() != ring_.get()) g = g.in_ring(ring_);
    leads_.push_back(g.leading().mono);
  }
}

Polynomial ReducedGB::normal_form(const Polynomial& f) const {
  require_same_ring(*f.ring(), *ring_);
  Polynomial p = f.in_ring(ring_);
  const Field& field = ring_->field();
  Terms work = p.terms();
  Terms result;
  std::size_t idx = 0;
  while (idx < work.size()) {
    const Term& t = work[idx];
    std::size_t k = 0;
    while (k < leads_.size() && !leads_[k].divides(t.mono)) ++k;
    if (k == leads_.size()) {
      result.push_back(t);
      ++idx;
      continue;
    }
    Monomial q = t.mono / leads_[k];
    Coefficient c = t.coef;
    work = subtract_multiple(work, idx, c, q, basis_[k].terms(), ring_->order(), field);
    idx = 0;
  }
  return Polynomial::from_terms(ring_, std::move(result));
}

Polynomial ReducedGB::normal_form(const Monomial& m) const { return normal_form(Polynomial::monomial(ring_, m)); }

bool ReducedGB::is_standard(const Monomial& m) const {
  return std::none_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
}

std::vector<std::string> ReducedGB::strings() const {
  std::vector<std::string> out;
  for (const auto& g : basis_) out.push_back(g.str());
  return out;
}

bool operator==(const ReducedGB& a, const ReducedGB& b) {
  if (!a.ring_->same_description(*b.ring_) || !(a.order() == b.order())) return false;
  return a.basis_ == b.basis_;
}

Polynomial normal_form(const Polynomial& f, const ReducedGB& basis) { return basis.normal_form(f); }

bool to_binomial(const Polynomial& f, const MonomialOrder& order, Binomial& out) {
  if (f.size() == 1) {
    out.lead = f.terms()[0].mono;
    out.has_trail = false;
    return true;
  }
  if (f.size() != 2 || !f.is_binomial_shape()) return false;
  out.lead = f.terms()[0].mono;
  out.trail = f.terms()[1].mono;
  out.has_trail = true;
  if (order.compare(out.lead, out.trail) < 0) std::swap(out.lead, out.trail);
  return true;
}

std::vector<Binomial> binomial_buchberger(std::vector<Binomial> gens, const MonomialOrder& order,
                                          const GroebnerOptions& options) {
  for (auto& g : gens)
    if (g.has_trail && order.compare(g.lead, g.trail) < 0) std::swap(g.lead, g.trail);
  BinomialEngine engine(order);
  return engine.run(std::move(gens), options.chain_criterion);
}

std::vector<Monomial> binomial_initial_generators(const std::vector<Binomial>& gens, const MonomialOrder& order) {
  auto basis = binomial_buchberger(gens, order);
  std::vector<Monomial> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(b.lead);
  return out;
}

ReducedGB buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, const MonomialOrder& order,
                     const GroebnerOptions& options) {
  if (order.nvars() != ring->nvars()) throw Error(ErrorKind::RingMismatch, "order does not match the ring");
  for (const auto& g : gens) require_same_ring(*g.ring(), *ring);
  RingPtr target = ring->order() == order ? ring : ring->with_order(order);

  std::vector<Polynomial> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);

  bool binomial = options.engine != GroebnerOptions::Engine::General;
  std::vector<Binomial> bgens;
  if (binomial) {
    bgens.reserve(nonzero.size());
    for (const auto& g : nonzero) {
      Binomial b;
      if (!to_binomial(g, order, b)) {
        if (options.engine == GroebnerOptions::Engine::Binomial)
          throw Error(ErrorKind::NotPureDifference, g.str());
        binomial = false;
        break;
      }
      bgens.push_back(b);
    }
  }

  std::vector<Polynomial> basis;
  if (binomial) {
    for (const auto& b : binomial_buchberger(std::move(bgens), order, options)) {
      if (b.has_trail)
        basis.push_back(Polynomial::from_terms(target, {{Coefficient(1), b.lead}, {Coefficient(-1), b.trail}}));
      else
        basis.push_back(Polynomial::monomial(target, b.lead));
    }
  } else {
    std::vector<Terms> tgens;
    for (const auto& g : nonzero) tgens.push_back(terms_in_order(g, order));
    GeneralEngine engine(order, ring->field());
    for (auto& t : engine.run(tgens, options.chain_criterion)) basis.push_back(Polynomial::from_terms(target, std::move(t)));
  }
  return ReducedGB(target, std::move(basis));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  require_same_ring(*f.ring(), *g.ring());
  auto [cf, mf] = leading_term(order, f);
  auto [cg, mg] = leading_term(order, g);
  const Field& field = f.ring()->field();
  Monomial l = mf.lcm(mg);
  Polynomial a = f.times(l / mf).scaled(field.inv(cf));
  Polynomial b = g.times(l / mg).scaled(field.inv(cg));
  return a - b;
}

bool verify_reduced_groebner(const ReducedGB& gb) {
  const auto& basis = gb.basis();
  const auto& leads = gb.leading_monomials();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].leading().coef != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (leads[j].divides(leads[i])) return false;
      for (const auto& t : basis[i].terms())
        if (leads[j].divides(t.mono)) return false;
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!gb.normal_form(s_polynomial(basis[i], basis[j], gb.order())).is_zero()) return false;
  return true;
}

}  // namespace latticelab
