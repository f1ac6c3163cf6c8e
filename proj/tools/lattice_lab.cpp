#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "latticelab/error.hpp"
#include "latticelab/report.hpp"

using namespace latticelab;

namespace {

struct Common {
  std::string fixture;
  std::string input;
  bool json = false;
  bool timings = false;
  std::string field = "Q";
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed;
};

struct Input {
  Lattice lattice;
  std::string label;
};

Input load(const Common& c) {
  if (c.fixture.empty() == c.input.empty()) throw Error(ErrorKind::InvalidInput, "give exactly one of --fixture or --input");
  if (!c.fixture.empty()) return {fixtures::by_name(c.fixture), c.fixture};
  std::ifstream in(c.input);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + c.input);
  std::stringstream text;
  text << in.rdbuf();
  return {parse_lattice_json(text.str()), c.input};
}

Field parse_field(const std::string& s) {
  if (s == "Q" || s == "QQ" || s == "0") return Field::rationals();
  std::string digits = s;
  if (digits.rfind("GF(", 0) == 0 && digits.back() == ')') digits = digits.substr(3, digits.size() - 4);
  try {
    std::size_t used = 0;
    unsigned long long p = std::stoull(digits, &used);
    if (used == digits.size()) return Field::prime(p);
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorKind::ParseError, "field must be Q or a prime such as 7 or GF(7)");
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("LATTICE_LAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "LATTICE_LAB_SEED must be an unsigned integer");
    }
  }
  return kDefaultSeed;
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> names_of(const Lattice& l, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(l.name(x));
  return out;
}

// Shared report: {lattice, checks, components, timings} plus verb fields.
struct Report {
  Json doc;
  std::vector<std::string> text;
  bool ok = true;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  explicit Report(const std::string& lattice) {
    doc["lattice"] = lattice;
    doc["checks"] = Json::array();
    doc["components"] = Json::array();
  }
  void check(const std::string& name, bool pass, const std::optional<std::string>& witness = std::nullopt) {
    Check c{name, pass, pass ? std::nullopt : witness};
    doc["checks"].push_back(to_json(c));
    text.push_back(std::string(pass ? "PASS " : "FAIL ") + name + (c.witness ? "  (" + *c.witness + ")" : ""));
    ok = ok && pass;
  }
  int emit(const Common& c) {
    Json t = Json::object();
    if (c.timings)
      t["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (!doc.contains("timings")) doc["timings"] = t;
    if (c.json)
      std::cout << doc.dump(2) << "\n";
    else
      for (const auto& line : text) std::cout << line << "\n";
    return ok ? 0 : 1;
  }
};

int run_check(const Common& c) {
  auto in = load(c);
  const Lattice& l = in.lattice;
  Report r(in.label);
  auto dist = is_distributive(l);
  auto mod = is_modular(l);
  Json props;
  props["elements"] = l.elements();
  props["size"] = l.size();
  props["bottom"] = l.name(l.bottom());
  props["top"] = l.name(l.top());
  props["graded"] = l.is_graded();
  props["length"] = l.length();
  props["distributive"] = dist.distributive;
  if (dist.witness) props["distributivity_witness"] = {l.name((*dist.witness)[0]), l.name((*dist.witness)[1]), l.name((*dist.witness)[2])};
  props["modular"] = mod.modular;
  if (mod.witness) {
    auto members = mod.witness->members();
    props["pentagon"] = names_of(l, {members.begin(), members.end()});
  }
  props["join_irreducibles"] = names_of(l, join_irreducibles(l));
  props["incomparable_pairs"] = incomparable_pairs(l).size();
  r.doc["properties"] = props;

  bool absorption = true;
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y)
      absorption = absorption && l.meet(x, l.join(x, y)) == x && l.join(x, l.meet(x, y)) == x;
  r.check("absorption_laws", absorption);
  r.check("distributive_iff_no_m3_n5",
          dist.distributive == (!find_sublattice(l, SublatticeKind::Diamond) && !find_sublattice(l, SublatticeKind::Pentagon)));
  r.check("modular_iff_no_n5", mod.modular == !find_sublattice(l, SublatticeKind::Pentagon));

  r.text.insert(r.text.begin(),
                {"lattice " + in.label + ": " + std::to_string(l.size()) + " elements, bottom " + l.name(l.bottom()) +
                     ", top " + l.name(l.top()),
                 std::string("graded: ") + (l.is_graded() ? "yes, rank " + std::to_string(l.length()) : "no"),
                 std::string("distributive: ") + (dist.distributive ? "yes" : "no"),
                 std::string("modular: ") + (mod.modular ? "yes" : "no"),
                 "join-irreducibles: " + join(names_of(l, join_irreducibles(l)))});
  return r.emit(c);
}

GroebnerOptions engine_options(const std::string& engine, bool chain) {
  GroebnerOptions o;
  o.chain_criterion = chain;
  if (engine == "auto")
    o.engine = GroebnerOptions::Engine::Auto;
  else if (engine == "general")
    o.engine = GroebnerOptions::Engine::General;
  else if (engine == "binomial")
    o.engine = GroebnerOptions::Engine::Binomial;
  else
    throw Error(ErrorKind::ParseError, "engine must be auto, general or binomial");
  return o;
}

int run_gb(const Common& c, const std::string& order_text, const std::string& engine, bool chain, bool initial) {
  auto in = load(c);
  auto jm = join_meet_ideal(in.lattice, parse_field(c.field));
  const RingPtr& ring = jm.ideal.ring();
  auto order = parse_order(order_text, ring->names());
  Report r(in.label);
  ReducedGB gb = buchberger(ring, jm.ideal.generators(), order, engine_options(engine, chain));
  r.doc["order"] = order.describe(ring->names());
  if (initial) {
    auto ini = initial_ideal(gb);
    bool sq = is_squarefree(ini);
    r.doc["initial_ideal"] = ini.strings(ring->names());
    r.doc["squarefree"] = sq;
    r.doc["dimension"] = krull_dim(ini);
    r.text.push_back("order " + order.describe(ring->names()));
    for (const auto& s : ini.strings(ring->names())) r.text.push_back("  " + s);
    r.text.push_back(std::string("squarefree: ") + (sq ? "yes" : "no"));
    r.text.push_back("dimension: " + std::to_string(krull_dim(ini)));
  } else {
    r.doc["basis"] = gb.strings();
    r.text.push_back("order " + order.describe(ring->names()));
    for (const auto& s : gb.strings()) r.text.push_back("  " + s);
  }
  r.check("buchberger_criterion", verify_reduced_groebner(gb));
  return r.emit(c);
}

void add_components(Report& r, const Lattice& l, const std::vector<PrimeComponent>& comps) {
  for (const auto& comp : comps) {
    r.doc["components"].push_back(to_json(comp, l));
    r.text.push_back("  A = {" + join(names_of(l, comp.admissible.members)) + "}  dim " + std::to_string(comp.dim) +
                     (comp.certified_prime ? "  prime" : "  uncertified") + "\n    (" +
                     join(comp.ideal.groebner()->strings()) + ")");
  }
}

int run_primes(const Common& c) {
  auto in = load(c);
  auto jm = join_meet_ideal(in.lattice);
  Report r(in.label);
  auto dec = decompose(jm, WorkflowOptions{c.jobs});
  r.doc["admissible_sets"] = dec.admissible_sets;
  r.doc["distinct_components"] = dec.distinct_components;
  r.text.push_back(std::to_string(dec.admissible_sets) + " admissible sets, " + std::to_string(dec.distinct_components) +
                   " distinct components, " + std::to_string(dec.components.size()) + " minimal:");
  add_components(r, in.lattice, dec.components);
  r.check("components_certified_prime", dec.all_prime, "a component is not in certifiable shape");
  r.check("intersection_equals_ideal", dec.intersection_verified, "IntersectionMismatch");
  return r.emit(c);
}

int run_radical(const Common& c, std::optional<unsigned> bound, unsigned stage1) {
  auto in = load(c);
  RadicalOptions o;
  o.degree_bound = bound;
  o.stage1_orders = stage1;
  o.seed = resolve_seed(c);
  o.jobs = c.jobs;
  auto cert = radical_certificate(in.lattice, o);
  Report r(in.label);
  r.doc["verdict"] = to_string(cert.verdict);
  r.doc["stage"] = cert.stage;
  r.doc["degree_bound"] = cert.degree_bound;
  r.text.push_back(std::string("verdict: ") + to_string(cert.verdict) + " (stage " + std::to_string(cert.stage) + ")");
  if (cert.squarefree_order) {
    r.doc["squarefree_order"] = *cert.squarefree_order;
    r.text.push_back("squarefree initial ideal under " + *cert.squarefree_order);
  }
  if (cert.stage == 2) {
    add_components(r, in.lattice, cert.decomposition->components);
    r.check("intersection_equals_ideal", cert.decomposition->intersection_verified);
  }
  if (cert.witness) {
    auto jm = join_meet_ideal(in.lattice);
    const Polynomial& w = *cert.witness;
    r.doc["witness"] = w.str();
    r.text.push_back("witness: " + w.str());
    r.check("witness_not_in_ideal", !ideal_member(w, jm.ideal));
    r.check("witness_in_radical", radical_member(w, jm.ideal));
  }
  return r.emit(c);
}

int run_scan(const Common& c, bool exhaustive, std::optional<std::size_t> sample, const std::string& families) {
  auto in = load(c);
  ScanOptions o;
  o.seed = resolve_seed(c);
  o.jobs = c.jobs;
  if (exhaustive && sample) throw Error(ErrorKind::InvalidInput, "--exhaustive and --sample are exclusive");
  if (exhaustive) o.mode = ScanOptions::Mode::Exhaustive;
  if (sample) {
    o.mode = ScanOptions::Mode::Sample;
    o.sample_size = *sample;
  }
  o.families.clear();
  std::stringstream ss(families);
  for (std::string f; std::getline(ss, f, ',');) {
    if (f == "lex")
      o.families.push_back(OrderKind::Lex);
    else if (f == "degrevlex")
      o.families.push_back(OrderKind::DegRevLex);
    else
      throw Error(ErrorKind::ParseError, "unknown order family " + f);
  }
  auto rep = squarefree_order_scan(in.lattice, o);
  Report r(in.label);
  Json fams = Json::array();
  for (const auto& f : rep.families) {
    const char* kind = f.kind == OrderKind::Lex ? "lex" : "degrevlex";
    fams.push_back({{"family", kind}, {"exhaustive", f.exhaustive}, {"orders", f.orders}, {"squarefree", f.squarefree}});
    r.text.push_back(std::string(kind) + ": " + std::to_string(f.squarefree) + " of " + std::to_string(f.orders) +
                     (f.exhaustive ? " orders (all permutations)" : " sampled orders") + " give a squarefree initial ideal");
  }
  r.doc["families"] = fams;
  r.doc["seed"] = o.seed;
  r.doc["any_squarefree"] = rep.any_squarefree;
  if (rep.witness_order) {
    r.doc["witness_order"] = *rep.witness_order;
    r.text.push_back("first squarefree order: " + *rep.witness_order);
  }
  const Lattice& l = in.lattice;
  if (is_modular(l).modular && !is_distributive(l).distributive)
    r.check("no_squarefree_initial_ideal", !rep.any_squarefree, rep.witness_order);
  return r.emit(c);
}

int run_lk(const Common& c, unsigned n, unsigned k) {
  auto rep = lk_suite(n, k, WorkflowOptions{c.jobs});
  Json doc = report_json(rep, fixtures::lk(n, k), c.timings);
  if (c.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << rep.lattice << "\n";
    for (const auto& ch : rep.checks)
      std::cout << (ch.pass ? "PASS " : "FAIL ") << ch.name << (ch.witness ? "  (" + *ch.witness + ")" : "") << "\n";
    if (c.timings)
      for (const auto& [s, t] : rep.timings) std::cout << "  " << s << ": " << t << " s\n";
  }
  return rep.passed() ? 0 : 1;
}

int run_fixtures(const Common& c, const std::string& dump) {
  if (!dump.empty()) {
    std::cout << lattice_to_json(fixtures::by_name(dump)).dump(2) << "\n";
    return 0;
  }
  auto names = fixtures::catalogue();
  if (c.json)
    std::cout << Json(names).dump(2) << "\n";
  else
    for (const auto& n : names) std::cout << n << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Join-meet ideals of finite lattices: Gröbner bases, radicality and minimal primes"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub, bool lattice_input) {
    if (lattice_input) {
      sub->add_option("--fixture", common.fixture, "Fixture name, e.g. Q, N, R, Chain:5, D:3, Lk:4:2");
      sub->add_option("--input", common.input, "Lattice JSON file");
    }
    sub->add_flag("--json", common.json, "Print the JSON report");
    sub->add_flag("--timings", common.timings, "Include wall-clock timings");
    sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* check = app.add_subcommand("check", "Structural lattice report");
  add_common(check, true);

  std::string order = "degrevlex";
  std::string engine = "auto";
  bool chain = false;
  auto* gb = app.add_subcommand("gb", "Reduced Gröbner basis of the join-meet ideal");
  auto* ini = app.add_subcommand("ini", "Initial ideal and squarefreeness");
  for (auto* sub : {gb, ini}) {
    add_common(sub, true);
    sub->add_option("--order", order, "lex:<v1,...> or degrevlex:<v1,...>; empty list = element order");
    sub->add_option("--field", common.field, "Q or a prime p");
    sub->add_option("--engine", engine, "auto, general or binomial");
    sub->add_flag("--chain-criterion", chain, "Also apply the chain criterion");
  }

  auto* primes = app.add_subcommand("primes", "Minimal primes via admissible sets");
  add_common(primes, true);

  std::optional<unsigned> bound;
  unsigned stage1 = RadicalOptions{}.stage1_orders;
  auto* radical = app.add_subcommand("radical", "Radicality certificate");
  add_common(radical, true);
  radical->add_option("--degree-bound", bound, "Witness degree bound (default: length + 2)");
  radical->add_option("--stage1-orders", stage1, "Orders tried for a squarefree initial ideal");
  radical->add_option("--seed", common.seed, "Sampling seed (default: LATTICE_LAB_SEED or built-in)");

  bool exhaustive = false;
  std::optional<std::size_t> sample;
  std::string families = "lex,degrevlex";
  auto* scan = app.add_subcommand("scan", "Squarefree initial ideals across variable orders");
  add_common(scan, true);
  scan->add_flag("--exhaustive", exhaustive, "All permutations regardless of size");
  scan->add_option("--sample", sample, "Number of seeded random permutations per family");
  scan->add_option("--families", families, "Comma list of lex, degrevlex");
  scan->add_option("--seed", common.seed, "Sampling seed (default: LATTICE_LAB_SEED or built-in)");

  unsigned n = 0, k = 0;
  auto* lk = app.add_subcommand("lk", "Verification suite for the lattices L_k");
  add_common(lk, false);
  lk->add_option("--n", n, "Ladder length")->required();
  lk->add_option("--k", k, "Position of z")->required();

  std::string dump;
  auto* fx = app.add_subcommand("fixtures", "List fixtures or dump one as lattice JSON");
  add_common(fx, false);
  fx->add_option("--dump", dump, "Fixture to print as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*check) return run_check(common);
    if (*gb) return run_gb(common, order, engine, chain, false);
    if (*ini) return run_gb(common, order, engine, chain, true);
    if (*primes) return run_primes(common);
    if (*radical) return run_radical(common, bound, stage1);
    if (*scan) return run_scan(common, exhaustive, sample, families);
    if (*lk) return run_lk(common, n, k);
    if (*fx) return run_fixtures(common, dump);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
