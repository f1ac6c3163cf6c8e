// One PASS/FAIL line per acceptance criterion.
//
//   acceptance [--only=3,5] [--expect-fail=5] [--jobs=N]
//
// Exit status is 0 when the set of failing criteria equals the expected set.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "latticelab/joinmeet.hpp"
#include "latticelab/smith.hpp"
#include "oracles.hpp"

using namespace latticelab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::set<int> parse_list(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

unsigned g_jobs = 1;

Outcome criterion1() {
  auto jm = join_meet_ideal(fixtures::lattice_q());
  auto gb = jm.ideal.groebner(MonomialOrder::lex(jm.ideal.ring()->nvars()));
  std::vector<std::string> got = gb->strings();
  std::vector<std::string> want = {"a*e - b*c", "a*g - c*f", "b*g - e*f", "c*d - c*f", "d*e - e*f"};
  std::sort(got.begin(), got.end());
  bool ok = got == want && verify_reduced_groebner(*gb);
  return {ok, "basis {" + join(got) + "}"};
}

Outcome criterion2() {
  auto q = fixtures::lattice_q();
  auto dec = minimal_primes(q);
  const auto& r = dec.components.front().ideal.ring();
  std::vector<Ideal> want = {Ideal::parse(r, {"a*e - b*c", "a*g - c*f", "b*g - e*f", "d - f"}),
                             Ideal::parse(r, {"a", "b", "c", "e"}), Ideal::parse(r, {"c", "e", "g"})};
  bool ok = dec.components.size() == want.size() && dec.all_prime && dec.intersection_verified;
  for (const auto& w : want)
    ok = ok && std::any_of(dec.components.begin(), dec.components.end(),
                           [&](const PrimeComponent& c) { return ideal_equal(c.ideal, w); });
  std::vector<std::string> names;
  for (const auto& c : dec.components) names.push_back("(" + join(c.ideal.groebner()->strings()) + ")");
  return {ok, std::to_string(dec.components.size()) + " primes " + join(names) +
                  (dec.intersection_verified ? ", intersection verified" : ", intersection MISMATCH")};
}

Outcome criterion3() {
  auto n = fixtures::lattice_n();
  RadicalOptions opts;
  opts.jobs = g_jobs;
  auto cert = radical_certificate(n, opts);
  auto jm = join_meet_ideal(n);
  const auto& r = jm.ideal.ring();
  auto w = parse_polynomial("a*l*g*d - a*l*g*f", r);
  bool verdict = cert.verdict == RadicalVerdict::NotRadical && cert.witness && *cert.witness == w;
  bool nf = !jm.ideal.groebner()->normal_form(w).is_zero();
  bool rad = radical_member(w, jm.ideal);
  auto gb = jm.ideal.groebner();
  int contained = 0;
  for (const char* text : {"c*e*l - c*f*l", "c*d*l - c*f*l", "c*e*h - c*f*h", "a*e*h - a*f*h", "c*d*h - c*f*h",
                           "a*d*h - a*f*h", "c*f^2*l - c^2*h*l", "a*d^2*l - a*c*h*l", "c*f^2*h - c^2*h^2",
                           "a*f^2*h - a*c*h^2"}) {
    auto f = parse_polynomial(text, r);
    if (std::any_of(gb->basis().begin(), gb->basis().end(), [&](const Polynomial& g) { return g == f || g == -f; }))
      ++contained;
  }
  bool ok = verdict && nf && rad && contained == 10;
  return {ok, std::string("verdict ") + to_string(cert.verdict) +
                  ", witness " + (cert.witness ? cert.witness->str() : "none") + ", nf!=0 " + (nf ? "yes" : "no") +
                  ", in radical " + (rad ? "yes" : "no") + ", listed binomials in basis " +
                  std::to_string(contained) + "/10"};
}

Outcome criterion4() {
  int total = 0, good = 0;
  std::string bad;
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned k = 1; k < n; ++k) {
      ++total;
      auto jm = join_meet_ideal(fixtures::lk(n, k));
      if (initial_ideal(*jm.ideal.groebner()) == lk::stated_initial(n, k))
        ++good;
      else
        bad += " (" + std::to_string(n) + "," + std::to_string(k) + ")";
    }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " instances match" + bad};
}

Outcome criterion5() {
  int total = 0, good = 0;
  std::set<std::string> failing;
  WorkflowOptions opts{g_jobs};
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned k = 1; k < n; ++k) {
      ++total;
      auto report = lk_suite(n, k, opts);
      if (report.passed()) ++good;
      for (const auto& c : report.checks)
        if (!c.pass) failing.insert(c.name);
    }
  std::vector<std::string> f(failing.begin(), failing.end());
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " instances pass all stages" +
                             (f.empty() ? "" : ", failing checks: " + join(f))};
}

Outcome criterion6() {
  RadicalOptions opts;
  opts.jobs = g_jobs;
  auto cert = radical_certificate(fixtures::lattice_r(), opts);
  bool ok = cert.verdict == RadicalVerdict::Radical && cert.stage == 2;
  std::size_t comps = cert.decomposition ? cert.decomposition->components.size() : 0;
  return {ok, std::string("verdict ") + to_string(cert.verdict) + " at stage " + std::to_string(cert.stage) + ", " +
                  std::to_string(comps) + " prime components"};
}

Outcome criterion7() {
  ScanOptions opts;
  opts.mode = ScanOptions::Mode::Exhaustive;
  opts.jobs = g_jobs;
  auto n = squarefree_order_scan(fixtures::lattice_n(), opts);
  auto l = squarefree_order_scan(fixtures::lk(2, 1), opts);
  bool ok = !n.any_squarefree && !l.any_squarefree && n.orders_scanned() == 2 * 362880 && l.orders_scanned() == 240;
  return {ok, "N: " + std::to_string(n.orders_scanned()) + " orders, squarefree " +
                  (n.any_squarefree ? "found" : "none") + "; L_k(2,1): " + std::to_string(l.orders_scanned()) +
                  " orders, squarefree " + (l.any_squarefree ? "found" : "none")};
}

Outcome criterion8() {
  std::vector<std::string> failures;
  std::mt19937_64 rng(kDefaultSeed);

  // Membership and normal forms against linear algebra, 500 cases.
  int bases = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t nv = 2 + rng() % 3;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nv; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    auto r = Ring::make(names);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0, cnt = 1 + rng() % 4; i < cnt; ++i) {
      unsigned d = 1 + rng() % 3;
      auto u = oracle::random_monomial(rng, nv, d), v = oracle::random_monomial(rng, nv, d);
      if (u != v) gens.push_back(Polynomial::difference(r, u, v));
    }
    auto gb = buchberger(r, gens, rng() % 2 ? MonomialOrder::lex(nv) : MonomialOrder::degrevlex(nv));
    ++bases;
    if (!verify_reduced_groebner(gb)) failures.push_back("buchberger criterion case " + std::to_string(trial));
    unsigned d = 2 + rng() % 3;
    auto f = Polynomial::difference(r, oracle::random_monomial(rng, nv, d), oracle::random_monomial(rng, nv, d));
    if (trial % 2 == 0 && !gens.empty() && gens[0].degree() <= d)
      f = gens[0].times(oracle::random_monomial(rng, nv, d - gens[0].degree()));
    auto nf = gb.normal_form(f);
    if (!(gb.normal_form(nf) == nf)) failures.push_back("idempotence case " + std::to_string(trial));
    if (nf.is_zero() != oracle::homogeneous_member(f, gens)) failures.push_back("membership case " + std::to_string(trial));
  }

  // Colon equals saturation on radical fixtures.
  for (const char* name : {"Q", "R", "D:3", "Chain:3", "Lk:2:1", "Lk:3:1"}) {
    auto jm = join_meet_ideal(fixtures::by_name(name));
    const auto& r = jm.ideal.ring();
    for (std::size_t v = 0; v < r->nvars(); ++v) {
      auto x = Polynomial::variable(r, v);
      if (!ideal_equal(colon(jm.ideal, x), saturate(jm.ideal, x))) failures.push_back(std::string("colon ") + name);
    }
  }

  // Admissible sets against subset filtering.
  for (const char* name : {"N", "Q", "R", "M3", "N5", "Chain:4", "D:2", "D:3", "D:4", "D:5", "D:6", "Lk:2:1",
                           "Lk:3:1", "Lk:3:2", "Lk:4:2", "Lk:5:3"}) {
    auto l = fixtures::by_name(name);
    std::set<std::vector<Element>> want, got;
    for (std::uint32_t mask = 0; mask < (1u << l.size()); ++mask)
      if (oracle::admissible_by_substitution(l, mask)) {
        std::vector<Element> s;
        for (Element x = 0; x < l.size(); ++x)
          if (mask >> x & 1u) s.push_back(x);
        want.insert(s);
      }
    for (const auto& a : enumerate_admissible_sets(l)) got.insert(a.members);
    if (got != want) failures.push_back(std::string("admissible ") + name);
  }

  // Smith normal form on 200 random matrices.
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    IntMatrix m(rows, std::vector<mpz_class>(cols));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<long>(rng() % 13) - 6;
    auto s = smith_normal_form(m);
    bool ok = multiply(multiply(s.U, m), s.V) == s.D;
    for (std::size_t i = 0; ok && i + 1 < s.invariants.size(); ++i) {
      const auto& a = s.invariants[i];
      const auto& b = s.invariants[i + 1];
      ok = a == 0 ? b == 0 : mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
    }
    if (!ok) failures.push_back("smith case " + std::to_string(trial));
  }

  return {failures.empty(), std::to_string(bases) + " random bases, " + std::to_string(failures.size()) +
                                " failures" + (failures.empty() ? "" : ": " + failures.front())};
}

const char* const kTitles[] = {
    "",
    "Q lex reduced basis",
    "Q minimal primes",
    "N not radical, witness and listed binomials",
    "L_k initial ideals for 2<=n<=6",
    "L_k decomposition pipeline for 2<=n<=6",
    "R radical via prime intersection",
    "no squarefree lex/degrevlex initial ideal for N and L_k(2,1)",
    "property suites",
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only, expect_fail;
  g_jobs = std::max(1u, std::thread::hardware_concurrency());
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.rfind("--only=", 0) == 0)
      only = parse_list(a.substr(7));
    else if (a.rfind("--expect-fail=", 0) == 0)
      expect_fail = parse_list(a.substr(14));
    else if (a.rfind("--jobs=", 0) == 0)
      g_jobs = static_cast<unsigned>(std::max(1, std::stoi(a.substr(7))));
    else {
      std::fprintf(stderr, "usage: %s [--only=LIST] [--expect-fail=LIST] [--jobs=N]\n", argv[0]);
      return 2;
    }
  }

  std::vector<std::function<Outcome()>> criteria = {nullptr,    criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8};
  std::set<int> failed;
  for (int c = 1; c <= 8; ++c) {
    if (!only.empty() && !only.count(c)) continue;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[c]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) failed.insert(c);
    std::printf("criterion %d: %s  %s (%.2fs) - %s\n", c, o.pass ? "PASS" : "FAIL", kTitles[c], since(t0),
                o.detail.c_str());
    std::fflush(stdout);
  }

  std::set<int> expected;
  for (int c : expect_fail)
    if (only.empty() || only.count(c)) expected.insert(c);
  if (failed == expected) {
    if (!expected.empty()) std::printf("known failures only; see README\n");
    return 0;
  }
  for (int c : failed)
    if (!expected.count(c)) std::printf("unexpected failure: criterion %d\n", c);
  for (int c : expected)
    if (!failed.count(c)) std::printf("expected failure now passes: criterion %d\n", c);
  return 1;
}
