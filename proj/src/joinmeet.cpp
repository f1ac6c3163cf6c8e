#include "latticelab/joinmeet.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "latticelab/error.hpp"

namespace latticelab {

namespace {

Monomial product_of(std::initializer_list<std::size_t> vars) {
  Monomial m;
  for (auto v : vars) m.set(v, m[v] + 1);
  return m;
}

Polynomial var(const RingPtr& ring, std::size_t i) { return Polynomial::variable(ring, i); }

// Runs body(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string basis_key(const Ideal& ideal) {
  std::string key;
  for (const auto& s : ideal.groebner()->strings()) key += s + ';';
  return key;
}

std::string join_strings(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

// ---------------------------------------------------------------- join-meet ideal

RingPtr lattice_ring(const Lattice& lattice, const Field& field) {
  if (lattice.size() > Monomial::kMaxVars)
    throw Error(ErrorKind::RingTooLarge, std::to_string(lattice.size()) + " elements exceed the variable limit of " +
                                             std::to_string(Monomial::kMaxVars));
  return Ring::make(lattice.elements(), field);
}

JoinMeetIdeal join_meet_ideal(const Lattice& lattice, const RingPtr& ring) {
  if (ring->names() != lattice.elements()) throw Error(ErrorKind::RingMismatch, "ring variables differ from the lattice elements");
  std::vector<BasicBinomial> basics;
  std::vector<Polynomial> gens;
  for (auto [a, b] : incomparable_pairs(lattice)) {
    Polynomial f = Polynomial::difference(ring, product_of({a, b}), product_of({lattice.meet(a, b), lattice.join(a, b)}));
    gens.push_back(f);
    basics.push_back({a, b, std::move(f)});
  }
  return {lattice, Ideal(ring, std::move(gens)), std::move(basics)};
}

JoinMeetIdeal join_meet_ideal(const Lattice& lattice, const Field& field) {
  return join_meet_ideal(lattice, lattice_ring(lattice, field));
}

// ---------------------------------------------------------------- primality

PrimalityCertificate certify_prime(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const Field& field = ring->field();
  auto gb = ideal.groebner();
  PrimalityCertificate cert;
  if (gb->is_unit_ideal()) {
    cert.reason = "unit ideal";
    return cert;
  }
  std::uint32_t listed = 0;
  for (const auto& g : gb->basis()) {
    if (g.size() == 1) {
      const Monomial& m = g.terms()[0].mono;
      if (m.degree() != 1) {
        cert.reason = "monomial generator " + g.str();
        return cert;
      }
      cert.variables.push_back(static_cast<std::size_t>(std::countr_zero(m.support())));
      listed |= m.support();
    } else if (g.size() == 2 && field.add(g.terms()[0].coef, g.terms()[1].coef) == 0) {
      cert.binomials.push_back(g);
    } else {
      throw Error(ErrorKind::NotPureDifference, g.str());
    }
  }
  std::vector<std::size_t> surviving;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (!(listed >> v & 1u)) surviving.push_back(v);
  Ideal binomial_part(ring, cert.binomials);
  if (!ideal_equal(saturate_by_variables(binomial_part, surviving), binomial_part))
    throw Error(ErrorKind::NotSaturatedInput, "binomial part changes under saturation");

  IntMatrix rows;
  for (const auto& b : cert.binomials) {
    std::vector<mpz_class> row(ring->nvars());
    for (std::size_t v = 0; v < ring->nvars(); ++v)
      row[v] = static_cast<long>(b.terms()[0].mono[v]) - static_cast<long>(b.terms()[1].mono[v]);
    rows.push_back(std::move(row));
  }
  cert.lattice = make_integer_lattice(std::move(rows));
  cert.prime = cert.lattice.saturated();
  if (!cert.prime) cert.reason = "exponent lattice is not saturated";
  return cert;
}

bool certify_prime_component(const Ideal& ideal) { return certify_prime(ideal).prime; }

// ---------------------------------------------------------------- components

PrimeComponent component_prime(const Lattice& lattice, const AdmissibleSet& admissible, const RingPtr& ring) {
  if (ring->names() != lattice.elements()) throw Error(ErrorKind::RingMismatch, "ring variables differ from the lattice elements");
  if (!is_admissible(lattice, admissible.members)) throw Error(ErrorKind::NotAdmissible, describe(lattice, admissible.members));
  std::vector<bool> in_a(lattice.size(), false);
  for (Element x : admissible.members) in_a[x] = true;
  std::vector<std::size_t> complement;
  for (Element x = 0; x < lattice.size(); ++x)
    if (!in_a[x]) complement.push_back(x);

  // I_{L_A}: admissibility keeps meets and joins of complement pairs in the complement.
  std::vector<Polynomial> binomials;
  for (auto [a, b] : incomparable_pairs(lattice))
    if (!in_a[a] && !in_a[b])
      binomials.push_back(
          Polynomial::difference(ring, product_of({a, b}), product_of({lattice.meet(a, b), lattice.join(a, b)})));
  Ideal saturated = saturate_by_variables(Ideal(ring, std::move(binomials)), complement);

  std::vector<Polynomial> gens = saturated.groebner()->basis();
  for (Element x : admissible.members) gens.push_back(var(ring, x));
  PrimeComponent out{admissible, Ideal(ring, std::move(gens)), false, 0};
  try {
    out.certified_prime = certify_prime_component(out.ideal);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPureDifference && e.kind() != ErrorKind::NotSaturatedInput) throw;
  }
  out.dim = dimension(out.ideal);
  return out;
}

PrimeComponent component_prime(const Lattice& lattice, const AdmissibleSet& admissible) {
  return component_prime(lattice, admissible, lattice_ring(lattice));
}

// ---------------------------------------------------------------- minimal primes

Decomposition decompose(const JoinMeetIdeal& jm, const WorkflowOptions& options) {
  const Lattice& lattice = jm.lattice;
  const RingPtr& ring = jm.ideal.ring();
  auto sets = enumerate_admissible_sets(lattice);
  std::vector<std::optional<PrimeComponent>> all(sets.size());
  parallel_for(sets.size(), options.jobs, [&](std::size_t i) { all[i] = component_prime(lattice, sets[i], ring); });

  Decomposition out;
  out.admissible_sets = sets.size();
  std::vector<PrimeComponent> distinct;
  std::set<std::string> seen;
  for (auto& c : all)
    if (seen.insert(basis_key(c->ideal)).second) distinct.push_back(std::move(*c));
  out.distinct_components = distinct.size();

  std::vector<char> minimal(distinct.size(), 1);
  parallel_for(distinct.size(), options.jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < distinct.size(); ++j) {
      if (i == j) continue;
      // Distinct primes: strict containment lowers the dimension.
      if (distinct[i].certified_prime && distinct[j].certified_prime && distinct[j].dim <= distinct[i].dim) continue;
      if (ideal_contains(distinct[i].ideal, distinct[j].ideal)) {
        minimal[i] = 0;
        return;
      }
    }
  });
  for (std::size_t i = 0; i < distinct.size(); ++i)
    if (minimal[i]) out.components.push_back(std::move(distinct[i]));

  out.all_prime = std::all_of(out.components.begin(), out.components.end(),
                              [](const PrimeComponent& c) { return c.certified_prime; });
  std::vector<Ideal> ideals;
  for (const auto& c : out.components) ideals.push_back(c.ideal);
  out.intersection_verified = !ideals.empty() && ideal_equal(intersect(ideals), jm.ideal);
  return out;
}

Decomposition minimal_primes(const Lattice& lattice, const WorkflowOptions& options) {
  auto jm = join_meet_ideal(lattice);
  auto d = decompose(jm, options);
  if (!d.intersection_verified)
    throw Error(ErrorKind::IntersectionMismatch, "intersection of the minimal components differs from the join-meet ideal");
  return d;
}

// ---------------------------------------------------------------- radicality

const char* to_string(RadicalVerdict verdict) noexcept {
  switch (verdict) {
    case RadicalVerdict::Radical: return "Radical";
    case RadicalVerdict::NotRadical: return "NotRadical";
    case RadicalVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::vector<Binomial> binomial_generators(const JoinMeetIdeal& jm) {
  std::vector<Binomial> out;
  const auto& order = jm.ideal.ring()->order();
  for (const auto& g : jm.ideal.generators()) {
    Binomial b;
    to_binomial(g, order, b);
    out.push_back(b);
  }
  return out;
}

bool squarefree_under(const std::vector<Binomial>& gens, const MonomialOrder& order) {
  auto leads = binomial_initial_generators(gens, order);
  return std::all_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

void monomials_of_degree(std::size_t nvars, unsigned degree, std::vector<Monomial>& out) {
  Monomial m;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (v + 1 == nvars) {
      m.set(v, left);
      out.push_back(m);
      m.set(v, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(v, e);
      rec(v + 1, left - e);
    }
    m.set(v, 0);
  };
  if (nvars > 0) rec(0, degree);
}

}  // namespace

RadicalCertificate radical_certificate(const Lattice& lattice, const RadicalOptions& options) {
  auto jm = join_meet_ideal(lattice);
  const RingPtr& ring = jm.ideal.ring();
  const std::size_t n = ring->nvars();
  RadicalCertificate cert;
  cert.degree_bound = options.degree_bound.value_or(lattice.length() + 2);

  // Stage 1: a squarefree initial ideal for some order.
  auto gens = binomial_generators(jm);
  std::vector<MonomialOrder> orders;
  if (options.stage1_orders > 0) orders.push_back(MonomialOrder::degrevlex(n));
  if (options.stage1_orders > 1) orders.push_back(MonomialOrder::lex(n));
  if (options.stage1_orders > 2) {
    auto perms = sample_permutations(n, options.stage1_orders - 2, options.seed);
    for (std::size_t i = 0; i < perms.size(); ++i)
      orders.push_back(i % 2 == 0 ? MonomialOrder::degrevlex(perms[i]) : MonomialOrder::lex(perms[i]));
  }
  for (const auto& order : orders)
    if (squarefree_under(gens, order)) {
      cert.verdict = RadicalVerdict::Radical;
      cert.stage = 1;
      cert.squarefree_order = order.describe(ring->names());
      return cert;
    }

  // Stage 2: prime components whose intersection is I_L.
  cert.decomposition = decompose(jm, WorkflowOptions{options.jobs});
  const auto& dec = *cert.decomposition;
  if (dec.all_prime && dec.intersection_verified) {
    cert.verdict = RadicalVerdict::Radical;
    cert.stage = 2;
    return cert;
  }

  // Stage 3: monomials with equal normal forms modulo every prime component
  // differ by an element of their intersection. Pairs already equal modulo
  // I_L are skipped; the rest are confirmed by radical membership.
  auto gb = jm.ideal.groebner();
  std::vector<std::shared_ptr<const ReducedGB>> component_bases;
  for (const auto& c : dec.components)
    if (c.certified_prime) component_bases.push_back(c.ideal.groebner());
  unsigned confirmations = 0;
  for (unsigned d = 2; d <= cert.degree_bound; ++d) {
    std::vector<Monomial> monomials;
    monomials_of_degree(n, d, monomials);
    std::sort(monomials.begin(), monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return ring->order().greater(a, b); });
    std::map<std::vector<std::string>, std::vector<std::size_t>> buckets;
    std::vector<std::vector<std::string>> keys(monomials.size());
    std::vector<std::string> residues(monomials.size());
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      for (const auto& cb : component_bases) keys[i].push_back(cb->normal_form(monomials[i]).str());
      residues[i] = gb->normal_form(monomials[i]).str();
      buckets[keys[i]].push_back(i);
    }
    // Smallest degree after removing the common factor first, then the
    // smallest pair under the order (leading monomial, then trailing).
    // Monomials are sorted descending, so larger indices are smaller.
    std::vector<std::tuple<unsigned, std::size_t, std::size_t>> candidates;
    for (std::size_t i = 0; i < monomials.size(); ++i)
      for (std::size_t j : buckets[keys[i]])
        if (j > i && residues[i] != residues[j])
          candidates.emplace_back(d - monomials[i].gcd(monomials[j]).degree(), i, j);
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) > std::get<1>(b);
      return std::get<2>(a) > std::get<2>(b);
    });
    for (auto [core, i, j] : candidates) {
      if (confirmations >= options.max_confirmations) return cert;
      ++confirmations;
      Polynomial w = Polynomial::difference(ring, monomials[i], monomials[j]);
      if (radical_member(w, jm.ideal)) {
        cert.verdict = RadicalVerdict::NotRadical;
        cert.stage = 3;
        cert.witness = w;
        return cert;
      }
    }
  }
  return cert;
}

// ---------------------------------------------------------------- order scans

std::size_t ScanReport::orders_scanned() const {
  std::size_t total = 0;
  for (const auto& f : families) total += f.orders;
  return total;
}

std::vector<std::size_t> permutation_at(std::size_t n, std::uint64_t rank) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  if (n > 20 || rank >= fact[n]) throw Error(ErrorKind::BadParameters, "permutation rank out of range");
  std::vector<std::size_t> out;
  for (std::size_t i = n; i > 0; --i) {
    std::size_t idx = static_cast<std::size_t>(rank / fact[i - 1]);
    rank %= fact[i - 1];
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

std::vector<std::vector<std::size_t>> sample_permutations(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Rejection sampling keeps draws uniform and independent of the standard library's distributions.
  auto below = [&](std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
      std::uint64_t r = rng();
      if (r < limit) return r % bound;
    }
  };
  std::vector<std::vector<std::size_t>> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    out.push_back(std::move(p));
  }
  return out;
}

ScanReport squarefree_order_scan(const Lattice& lattice, const ScanOptions& options) {
  auto jm = join_meet_ideal(lattice);
  const auto& names = jm.ideal.ring()->names();
  const std::size_t n = names.size();
  const auto gens = binomial_generators(jm);
  const bool exhaustive = options.mode == ScanOptions::Mode::Exhaustive ||
                          (options.mode == ScanOptions::Mode::Auto && n <= options.exhaustive_limit);
  if (exhaustive && n > 12) throw Error(ErrorKind::BadParameters, "exhaustive scans are limited to 12 variables");
  auto make = [](OrderKind kind, std::vector<std::size_t> p) {
    return kind == OrderKind::Lex ? MonomialOrder::lex(std::move(p)) : MonomialOrder::degrevlex(std::move(p));
  };

  ScanReport report;
  for (std::size_t f = 0; f < options.families.size(); ++f) {
    const OrderKind kind = options.families[f];
    FamilyScan fam;
    fam.kind = kind;
    fam.exhaustive = exhaustive;
    std::vector<std::vector<std::size_t>> samples;
    if (exhaustive) {
      fam.orders = 1;
      for (std::size_t i = 2; i <= n; ++i) fam.orders *= i;
    } else {
      samples = sample_permutations(n, options.sample_size, options.seed + f);
      fam.orders = samples.size();
    }
    fam.verdicts.assign(fam.orders, 0);
    const unsigned jobs = std::max(1u, options.jobs);
    const std::size_t chunk = (fam.orders + jobs - 1) / jobs;
    parallel_for(jobs, jobs, [&](std::size_t w) {
      const std::size_t lo = w * chunk, hi = std::min(fam.orders, lo + chunk);
      if (lo >= hi) return;
      std::vector<std::size_t> perm = exhaustive ? permutation_at(n, lo) : std::vector<std::size_t>{};
      for (std::size_t i = lo; i < hi; ++i) {
        if (exhaustive) {
          if (i > lo) std::next_permutation(perm.begin(), perm.end());
        } else {
          perm = samples[i];
        }
        fam.verdicts[i] = squarefree_under(gens, make(kind, perm)) ? 1 : 0;
      }
    });
    for (std::size_t i = 0; i < fam.orders; ++i)
      if (fam.verdicts[i]) {
        if (!fam.first_squarefree) fam.first_squarefree = i;
        ++fam.squarefree;
      }
    if (fam.first_squarefree && !report.witness_order) {
      auto perm = exhaustive ? permutation_at(n, *fam.first_squarefree) : samples[*fam.first_squarefree];
      report.witness_order = make(kind, perm).describe(names);
    }
    report.any_squarefree = report.any_squarefree || fam.squarefree > 0;
    report.families.push_back(std::move(fam));
  }
  return report;
}

// ---------------------------------------------------------------- L_k

namespace lk {

std::size_t x(unsigned, unsigned i) { return i - 1; }
std::size_t y(unsigned n, unsigned i) { return n + i - 1; }
std::size_t z(unsigned n) { return 2 * static_cast<std::size_t>(n); }

std::vector<Polynomial> stated_basis(const RingPtr& ring, unsigned n, unsigned k) {
  const std::size_t Z = z(n);
  auto X = [&](unsigned i) { return x(n, i); };
  auto Y = [&](unsigned i) { return y(n, i); };
  auto diff = [&](Monomial a, Monomial b) { return Polynomial::difference(ring, a, b); };
  std::vector<Polynomial> g;
  g.push_back(diff(product_of({X(k + 1), Z}), product_of({Y(k), Z})));          // p_k
  g.push_back(diff(product_of({Y(k), Y(k), Z}), product_of({Y(k), Z, Z})));    // r_k
  for (unsigned i = 1; i < k; ++i) {
    g.push_back(diff(product_of({X(i), Y(k + 1)}), product_of({Y(i), Z})));     // g_i
    g.push_back(diff(product_of({Y(i), Y(k), Z}), product_of({Y(i), Z, Z})));  // q_ik
  }
  for (unsigned j = k + 1; j <= n; ++j) g.push_back(diff(product_of({X(k), Y(j)}), product_of({X(j), Z})));  // h_j
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) {
      if (j == k + 1)
        g.push_back(diff(product_of({X(k + 1), Y(i)}), product_of({Y(i), Z})));
      else if (i == k)
        g.push_back(diff(product_of({X(j), Y(k)}), product_of({X(j), Z})));
      else
        g.push_back(diff(product_of({X(j), Y(i)}), product_of({X(i), Y(j)})));
    }
  for (unsigned i = 1; i < k; ++i)
    for (unsigned j = k + 2; j <= n; ++j) {
      g.push_back(diff(product_of({X(i), X(k + 1), Y(j)}), product_of({X(i), Y(j), Z})));  // p_ij
      g.push_back(diff(product_of({X(i), Y(k), Y(j)}), product_of({X(i), Y(j), Z})));      // t_ij
    }
  return g;
}

MonomialIdeal stated_initial(unsigned n, unsigned k) {
  const std::size_t Z = z(n);
  auto X = [&](unsigned i) { return x(n, i); };
  auto Y = [&](unsigned i) { return y(n, i); };
  std::vector<Monomial> m;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) m.push_back(product_of({X(j), Y(i)}));
  for (unsigned i = 1; i < k; ++i) m.push_back(product_of({X(i), Y(k + 1)}));
  for (unsigned j = k + 1; j <= n; ++j) m.push_back(product_of({X(k), Y(j)}));
  for (unsigned i = 1; i < k; ++i)
    for (unsigned j = k + 2; j <= n; ++j) {
      m.push_back(product_of({X(i), X(k + 1), Y(j)}));
      m.push_back(product_of({X(i), Y(k), Y(j)}));
    }
  for (unsigned i = 1; i < k; ++i) m.push_back(product_of({Y(i), Y(k), Z}));
  m.push_back(product_of({X(k + 1), Z}));
  m.push_back(product_of({Y(k), Y(k), Z}));
  return MonomialIdeal(2 * n + 1, std::move(m));
}

MonomialIdeal stated_initial_with_difference(unsigned n, unsigned k) {
  std::vector<Monomial> extra{product_of({x(n, k + 1)})};
  for (unsigned i = 1; i <= k; ++i) extra.push_back(product_of({y(n, i), y(n, k)}));
  return stated_initial(n, k) + MonomialIdeal(2 * n + 1, std::move(extra));
}

std::vector<NamedIdeal> stated_primes(const JoinMeetIdeal& jm, unsigned n, unsigned k) {
  const RingPtr& ring = jm.ideal.ring();
  const std::size_t Z = z(n);
  auto vars = [&](std::vector<std::size_t> idx) {
    std::vector<Polynomial> out;
    for (auto i : idx) out.push_back(var(ring, i));
    return out;
  };
  auto ladder = [&](unsigned lo, unsigned hi) {  // I_D on x_i, y_i for lo <= i <= hi
    std::vector<Polynomial> out;
    for (unsigned i = lo; i <= hi; ++i)
      for (unsigned j = i + 1; j <= hi; ++j)
        out.push_back(Polynomial::difference(ring, product_of({x(n, i), y(n, j)}), product_of({x(n, j), y(n, i)})));
    return out;
  };
  auto range = [&](auto f, unsigned lo, unsigned hi) {
    std::vector<std::size_t> out;
    for (unsigned i = lo; i <= hi; ++i) out.push_back(f(n, i));
    return out;
  };
  auto cat = [](std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  std::vector<NamedIdeal> out;
  out.push_back({"P", jm.ideal.plus({var(ring, Z) - var(ring, x(n, k + 1)), var(ring, Z) - var(ring, y(n, k))})});
  out.push_back({"P1", Ideal(ring, vars(cat({Z}, range(x, 1, n))))});
  out.push_back({"P1'", Ideal(ring, vars(cat({Z}, range(y, 1, n))))});
  {
    auto g = vars(cat(cat({Z}, range(x, 1, k)), range(y, 1, k)));
    auto d = ladder(k + 1, n);
    g.insert(g.end(), d.begin(), d.end());
    out.push_back({"P2", Ideal(ring, std::move(g))});
  }
  {
    auto g = vars(cat(cat({Z}, range(x, k + 1, n)), range(y, k + 1, n)));
    auto d = ladder(1, k);
    g.insert(g.end(), d.begin(), d.end());
    out.push_back({"P2'", Ideal(ring, std::move(g))});
  }
  out.push_back({"P3", Ideal(ring, vars(cat(range(x, 1, n), range(y, 1, k))))});
  out.push_back({"P3'", Ideal(ring, vars(cat(range(y, 1, n), range(x, k + 1, n))))});
  return out;
}

std::vector<unsigned> stated_dimensions(unsigned n, unsigned k) { return {n, n, n, n - k, k, n - k + 1, k + 1}; }

}  // namespace lk

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

SuiteReport lk_suite(unsigned n, unsigned k, const WorkflowOptions& options) {
  if (n < 2 || k < 1 || k > n - 1) throw Error(ErrorKind::BadParameters, "need 1 <= k <= n-1");
  using clock = std::chrono::steady_clock;
  SuiteReport report;
  report.lattice = "Lk:" + std::to_string(n) + ":" + std::to_string(k);
  auto started = clock::now();
  auto lap = [&](const std::string& stage) {
    auto now = clock::now();
    report.timings.emplace_back(stage, std::chrono::duration<double>(now - started).count());
    started = now;
  };
  auto check = [&](std::string name, bool pass, std::optional<std::string> witness = std::nullopt) {
    report.checks.push_back({std::move(name), pass, pass ? std::nullopt : std::move(witness)});
  };

  const Lattice lattice = fixtures::lk(n, k);
  const auto jm = join_meet_ideal(lattice);
  const Ideal& I = jm.ideal;
  const RingPtr& ring = I.ring();
  const auto& names = ring->names();
  const std::size_t Z = lk::z(n);
  auto show = [&](const MonomialIdeal& m) { return "(" + join_strings(m.strings(names)) + ")"; };

  // (a)
  const MonomialIdeal ini = initial_ideal(*I.groebner());
  const MonomialIdeal stated = lk::stated_initial(n, k);
  check("a_initial_ideal_is_M", ini == stated, "computed " + show(ini));
  {
    auto g = lk::stated_basis(ring, n, k);
    std::vector<Monomial> leads;
    bool inside = true;
    for (const auto& p : g) {
      inside = inside && ideal_member(p, I);
      leads.push_back(p.leading().mono);
    }
    check("a_stated_basis_is_groebner", inside && MonomialIdeal(ring->nvars(), leads) == ini,
          inside ? "leading monomials differ" : "element outside the ideal");
  }
  lap("a");

  // (b), (c)
  const Ideal with_z = I.plus({var(ring, Z)});
  const Ideal with_diff = I.plus({var(ring, lk::x(n, k + 1)) - var(ring, lk::y(n, k))});
  const MonomialIdeal ini_z = initial_ideal(*with_z.groebner());
  const MonomialIdeal ini_diff = initial_ideal(*with_diff.groebner());
  check("b_eqini1", ini_z == ini + MonomialIdeal(ring->nvars(), {Monomial::variable(Z)}), "computed " + show(ini_z));
  check("c_eqini2", ini_diff == lk::stated_initial_with_difference(n, k), "computed " + show(ini_diff));
  lap("bc");

  // (d)
  check("d_intersection_identity", ideal_equal(intersect(with_diff, with_z), I), "(I, x_{k+1} - y_k) ∩ (I, z) != I");
  lap("d");

  // (e), (f)
  check("e_squarefree_I_plus_z", is_squarefree(ini_z), "initial ideal " + show(ini_z));
  {
    std::vector<std::size_t> priority{Z};
    for (std::size_t v = 0; v < Z; ++v) priority.push_back(v);
    auto lex = MonomialOrder::lex(priority);
    auto ini_lex = initial_ideal(with_diff, lex);
    check("f_squarefree_I_plus_difference_lex", is_squarefree(ini_lex), "initial ideal " + show(ini_lex));
  }
  lap("ef");

  // (g)
  auto primes = lk::stated_primes(jm, n, k);
  std::vector<char> keep(primes.size(), 1);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (i != j && keep[j] && ideal_contains(primes[i].ideal, primes[j].ideal) &&
          !(ideal_contains(primes[j].ideal, primes[i].ideal) && j > i))
        keep[i] = 0;
  std::set<std::string> expected;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (keep[i]) expected.insert(basis_key(primes[i].ideal));
  auto dec = decompose(jm, options);
  std::set<std::string> computed;
  for (const auto& c : dec.components) computed.insert(basis_key(c.ideal));
  report.components = dec.components;
  {
    std::string detail = std::to_string(computed.size()) + " computed vs " + std::to_string(expected.size()) + " stated";
    check("g_minimal_primes", computed == expected, detail);
    check("g_components_certified_prime", dec.all_prime, "a component failed certification");
    check("g_intersection_is_I", dec.intersection_verified, "intersection of components != I");
  }
  lap("g");

  // (h)
  {
    auto dims = lk::stated_dimensions(n, k);
    std::vector<std::string> mismatches;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      unsigned d = dimension(primes[i].ideal);
      if (d != dims[i])
        mismatches.push_back(primes[i].name + " has dimension " + std::to_string(d) + ", stated " + std::to_string(dims[i]));
    }
    check("h_component_dimensions", mismatches.empty(), join_strings(mismatches, "; "));
    unsigned q = dimension(I);
    check("h_quotient_dimension", q == n, "dimension " + std::to_string(q));
  }
  lap("h");
  return report;
}

}  // namespace latticelab
