#include "latticelab/lattice.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <unordered_map>

#include "latticelab/error.hpp"

namespace latticelab {

namespace {

bool valid_identifier(const std::string& id) {
  if (id.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(id[0])) return false;
  return std::all_of(id.begin(), id.end(), [&](char c) { return alpha(c) || digit(c); });
}

}  // namespace

Lattice Lattice::build(std::vector<std::string> elements, const std::vector<CoverPair>& covers) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(ErrorKind::NoBounds, "empty element list");

  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < n; ++i) {
    if (!valid_identifier(elements[i]))
      throw Error(ErrorKind::InvalidInput, "bad element identifier '" + elements[i] + "'");
    if (!index.emplace(elements[i], i).second)
      throw Error(ErrorKind::InvalidInput, "duplicate element '" + elements[i] + "'");
  }

  Lattice lat;
  lat.names_ = std::move(elements);
  lat.leq_.assign(n * n, 0);
  for (Element i = 0; i < n; ++i) lat.leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    auto l = index.find(lo);
    auto h = index.find(hi);
    if (l == index.end() || h == index.end())
      throw Error(ErrorKind::InvalidInput, "cover (" + lo + ", " + hi + ") references an unknown element");
    if (l->second == h->second) throw Error(ErrorKind::NotAPoset, "self cover on '" + lo + "'");
    lat.leq_[l->second * n + h->second] = 1;
  }

  // Warshall closure.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (lat.leq_[i * n + k])
        for (Element j = 0; j < n; ++j)
          if (lat.leq_[k * n + j]) lat.leq_[i * n + j] = 1;

  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (lat.leq_[i * n + j] && lat.leq_[j * n + i])
        throw Error(ErrorKind::NotAPoset, "cycle through '" + lat.names_[i] + "' and '" + lat.names_[j] + "'");

  std::vector<std::size_t> up_size(n, 0), down_size(n, 0);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      up_size[i] += lat.leq_[i * n + j];
      down_size[j] += lat.leq_[i * n + j];
    }

  lat.bottom_ = n;
  lat.top_ = n;
  for (Element i = 0; i < n; ++i) {
    if (down_size[i] == 1) {
      if (lat.bottom_ != n) throw Error(ErrorKind::NoBounds, "several minimal elements");
      lat.bottom_ = i;
    }
    if (up_size[i] == 1) {
      if (lat.top_ != n) throw Error(ErrorKind::NoBounds, "several maximal elements");
      lat.top_ = i;
    }
  }
  if (lat.bottom_ == n || lat.top_ == n) throw Error(ErrorKind::NoBounds, "missing bound");

  lat.join_.assign(n * n, 0);
  lat.meet_.assign(n * n, 0);
  auto fail = [&](Element i, Element j, const char* what) {
    throw Error(ErrorKind::NotALattice,
                "pair (" + lat.names_[i] + ", " + lat.names_[j] + ") has no " + what);
  };
  // Pairs visited column by column: (0,1), (0,2), (1,2), (0,3), ...
  for (Element j = 0; j < n; ++j) {
    for (Element i = 0; i <= j; ++i) {
      std::optional<Element> best_up, best_down;
      for (Element u = 0; u < n; ++u) {
        if (lat.leq_[i * n + u] && lat.leq_[j * n + u] && (!best_up || up_size[u] > up_size[*best_up]))
          best_up = u;
        if (lat.leq_[u * n + i] && lat.leq_[u * n + j] && (!best_down || down_size[u] > down_size[*best_down]))
          best_down = u;
      }
      if (!best_up) fail(i, j, "upper bound");
      for (Element u = 0; u < n; ++u)
        if (lat.leq_[i * n + u] && lat.leq_[j * n + u] && !lat.leq_[*best_up * n + u]) fail(i, j, "unique join");
      if (!best_down) fail(i, j, "lower bound");
      for (Element u = 0; u < n; ++u)
        if (lat.leq_[u * n + i] && lat.leq_[u * n + j] && !lat.leq_[u * n + *best_down]) fail(i, j, "unique meet");
      lat.join_[i * n + j] = lat.join_[j * n + i] = static_cast<std::uint32_t>(*best_up);
      lat.meet_[i * n + j] = lat.meet_[j * n + i] = static_cast<std::uint32_t>(*best_down);
    }
  }


  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!lat.less(x, y)) continue;
      bool cover = true;
      for (Element z = 0; z < n && cover; ++z)
        if (lat.less(x, z) && lat.less(z, y)) cover = false;
      if (cover) lat.covers_.emplace_back(x, y);
    }

  // Longest-chain height from the bottom, processed by down-set size.
  std::vector<Element> topo(n);
  std::iota(topo.begin(), topo.end(), Element{0});
  std::stable_sort(topo.begin(), topo.end(), [&](Element a, Element b) { return down_size[a] < down_size[b]; });
  lat.height_.assign(n, 0);
  for (Element y : topo)
    for (const auto& [lo, hi] : lat.covers_)
      if (hi == y) lat.height_[y] = std::max(lat.height_[y], lat.height_[lo] + 1);
  bool graded = std::all_of(lat.covers_.begin(), lat.covers_.end(),
                            [&](const auto& c) { return lat.height_[c.second] == lat.height_[c.first] + 1; });
  if (graded) lat.rank_ = lat.height_;
  return lat;
}

std::optional<Element> Lattice::find(std::string_view id) const {
  for (Element i = 0; i < names_.size(); ++i)
    if (names_[i] == id) return i;
  return std::nullopt;
}

Element Lattice::at(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorKind::InvalidInput, "unknown element '" + std::string(id) + "'");
}

std::vector<Element> Lattice::lower_covers(Element x) const {
  std::vector<Element> out;
  for (const auto& [lo, hi] : covers_)
    if (hi == x) out.push_back(lo);
  return out;
}

unsigned Lattice::rank(Element x) const {
  if (!rank_) throw Error(ErrorKind::PreconditionViolated, "lattice is not graded");
  return (*rank_).at(x);
}

unsigned Lattice::length() const { return height_[top_]; }

std::vector<CoverPair> Lattice::cover_names() const {
  std::vector<CoverPair> out;
  out.reserve(covers_.size());
  for (const auto& [lo, hi] : covers_) out.emplace_back(names_[lo], names_[hi]);
  return out;
}

bool operator==(const Lattice& a, const Lattice& b) { return a.names_ == b.names_ && a.leq_ == b.leq_; }

DistributivityReport is_distributive(const Lattice& lat) {
  const std::size_t n = lat.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y), lat.meet(x, z)))
          return {false, std::array<Element, 3>{x, y, z}};
  return {};
}

namespace {

// Classifies a 5-element sublattice candidate; fills `w` on success.
bool classify(const Lattice& lat, const std::array<Element, 5>& s, SublatticeKind kind, SublatticeWitness& w) {
  for (Element a : s)
    for (Element b : s) {
      if (std::find(s.begin(), s.end(), lat.join(a, b)) == s.end()) return false;
      if (std::find(s.begin(), s.end(), lat.meet(a, b)) == s.end()) return false;
    }
  Element lo = s[0], hi = s[0];
  for (Element a : s) {
    lo = lat.meet(lo, a);
    hi = lat.join(hi, a);
  }
  std::array<Element, 3> mid{};
  std::size_t m = 0;
  for (Element a : s)
    if (a != lo && a != hi) mid[m++] = a;
  if (m != 3) return false;

  int comparable_pairs = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) comparable_pairs += lat.comparable(mid[i], mid[j]) ? 1 : 0;

  w.bottom = lo;
  w.top = hi;
  if (kind == SublatticeKind::Diamond) {
    if (comparable_pairs != 0) return false;
    w.kind = kind;
    w.middles = mid;
    return true;
  }
  if (comparable_pairs != 1) return false;
  for (int side = 0; side < 3; ++side) {
    Element a = mid[(side + 1) % 3], b = mid[(side + 2) % 3];
    if (!lat.comparable(a, b)) continue;
    if (lat.less(b, a)) std::swap(a, b);
    w.kind = kind;
    w.middles = {a, b, mid[side]};
    return true;
  }
  return false;
}

}  // namespace

std::optional<SublatticeWitness> find_sublattice(const Lattice& lat, SublatticeKind kind) {
  const std::size_t n = lat.size();
  if (n < 5) return std::nullopt;
  std::array<Element, 5> s{};
  for (s[0] = 0; s[0] < n; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n; ++s[1])
      for (s[2] = s[1] + 1; s[2] < n; ++s[2])
        for (s[3] = s[2] + 1; s[3] < n; ++s[3])
          for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
            SublatticeWitness w;
            if (classify(lat, s, kind, w)) return w;
          }
  return std::nullopt;
}

bool is_valid_witness(const Lattice& lat, const SublatticeWitness& w) {
  auto members = w.members();
  for (Element x : members)
    if (x >= lat.size()) return false;
  auto sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  SublatticeWitness check;
  if (!classify(lat, sorted, w.kind, check)) return false;
  return check.bottom == w.bottom && check.top == w.top && check.middles == w.middles;
}

ModularityReport is_modular(const Lattice& lat) {
  const std::size_t n = lat.size();
  for (Element x = 0; x < n; ++x)
    for (Element z = 0; z < n; ++z) {
      if (!lat.leq(x, z)) continue;
      for (Element y = 0; y < n; ++y)
        if (lat.join(x, lat.meet(y, z)) != lat.meet(lat.join(x, y), z))
          return {false, find_sublattice(lat, SublatticeKind::Pentagon)};
    }
  return {};
}

Rank2Interval find_rank2_diamond(const Lattice& lat) {
  if (!lat.is_graded()) throw Error(ErrorKind::PreconditionViolated, "lattice is not graded");
  if (!is_modular(lat).modular) throw Error(ErrorKind::PreconditionViolated, "lattice is not modular");
  if (is_distributive(lat).distributive) throw Error(ErrorKind::PreconditionViolated, "lattice is distributive");
  const std::size_t n = lat.size();
  for (Element a = 0; a < n; ++a)
    for (Element e = 0; e < n; ++e) {
      if (!lat.leq(a, e) || lat.rank(e) != lat.rank(a) + 2) continue;
      Rank2Interval iv{a, e, {}};
      for (Element x = 0; x < n; ++x)
        if (lat.less(a, x) && lat.less(x, e)) iv.atoms.push_back(x);
      if (iv.atoms.size() < 3) continue;
      bool ok = true;
      for (std::size_t i = 0; i < iv.atoms.size() && ok; ++i)
        for (std::size_t j = i + 1; j < iv.atoms.size() && ok; ++j)
          ok = lat.join(iv.atoms[i], iv.atoms[j]) == e && lat.meet(iv.atoms[i], iv.atoms[j]) == a;
      if (ok) return iv;
    }
  // Unreachable for modular non-distributive input.
  throw Error(ErrorKind::PreconditionViolated, "no rank-2 diamond found");
}

std::vector<std::pair<Element, Element>> incomparable_pairs(const Lattice& lat) {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < lat.size(); ++a)
    for (Element b = a + 1; b < lat.size(); ++b)
      if (!lat.comparable(a, b)) out.emplace_back(a, b);
  return out;
}

namespace {

struct CoverMasks {
  std::uint32_t pair;
  std::uint32_t meet_join;
};

std::vector<CoverMasks> binomial_masks(const Lattice& lat) {
  std::vector<CoverMasks> out;
  for (auto [a, b] : incomparable_pairs(lat))
    out.push_back({(1u << a) | (1u << b), (1u << lat.meet(a, b)) | (1u << lat.join(a, b))});
  return out;
}

bool admissible_mask(const std::vector<CoverMasks>& masks, std::uint32_t set) {
  for (const auto& m : masks)
    if (((m.pair & set) != 0) != ((m.meet_join & set) != 0)) return false;
  return true;
}

}  // namespace

bool is_admissible(const Lattice& lat, const std::vector<Element>& members) {
  std::vector<bool> in(lat.size(), false);
  for (Element x : members) {
    if (x >= lat.size()) throw Error(ErrorKind::InvalidInput, "element index out of range");
    in[x] = true;
  }
  for (auto [a, b] : incomparable_pairs(lat)) {
    bool top_hit = in[a] || in[b];
    bool bottom_hit = in[lat.meet(a, b)] || in[lat.join(a, b)];
    if (top_hit != bottom_hit) return false;
  }
  return true;
}

std::vector<AdmissibleSet> enumerate_admissible_sets(const Lattice& lat) {
  const std::size_t n = lat.size();
  if (n > 24) throw Error(ErrorKind::BadParameters, "admissible-set enumeration limited to 24 elements");
  const auto masks = binomial_masks(lat);
  std::vector<std::uint32_t> found;
  const std::uint32_t limit = n == 32 ? 0xffffffffu : (1u << n);
  for (std::uint32_t set = 0; set < limit; ++set)
    if (admissible_mask(masks, set)) found.push_back(set);

  auto members_of = [](std::uint32_t set) {
    std::vector<Element> m;
    for (Element i = 0; set != 0; ++i, set >>= 1)
      if (set & 1u) m.push_back(i);
    return m;
  };
  std::vector<AdmissibleSet> out;
  out.reserve(found.size());
  for (auto s : found) out.push_back({members_of(s)});
  std::sort(out.begin(), out.end(), [](const AdmissibleSet& a, const AdmissibleSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

Lattice restrict_to_complement(const Lattice& lat, const AdmissibleSet& adm) {
  if (!is_admissible(lat, adm.members)) throw Error(ErrorKind::NotAdmissible, describe(lat, adm.members));
  std::vector<bool> removed(lat.size(), false);
  for (Element x : adm.members) removed[x] = true;
  std::vector<std::string> keep;
  std::vector<Element> kept;
  for (Element x = 0; x < lat.size(); ++x)
    if (!removed[x]) {
      keep.push_back(lat.name(x));
      kept.push_back(x);
    }
  if (keep.empty()) throw Error(ErrorKind::NoBounds, "complement of the full element set is empty");
  std::vector<CoverPair> rel;
  for (Element x : kept)
    for (Element y : kept) {
      if (!lat.less(x, y)) continue;
      bool cover = true;
      for (Element z : kept)
        if (lat.less(x, z) && lat.less(z, y)) {
          cover = false;
          break;
        }
      if (cover) rel.emplace_back(lat.name(x), lat.name(y));
    }
  return Lattice::build(std::move(keep), rel);
}

std::vector<Element> join_irreducibles(const Lattice& lat) {
  std::vector<Element> out;
  for (Element x = 0; x < lat.size(); ++x)
    if (x != lat.bottom() && lat.lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

Lattice dual(const Lattice& lat) {
  std::vector<CoverPair> rel;
  for (const auto& [lo, hi] : lat.cover_names()) rel.emplace_back(hi, lo);
  return Lattice::build(lat.elements(), rel);
}

Lattice product(const Lattice& a, const Lattice& b) {
  std::vector<std::string> names;
  auto id = [&](Element x, Element y) { return a.name(x) + "_" + b.name(y); };
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < b.size(); ++y) names.push_back(id(x, y));
  std::vector<CoverPair> rel;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < b.size(); ++y) {
      for (const auto& [lo, hi] : a.covers())
        if (lo == x) rel.emplace_back(id(x, y), id(hi, y));
      for (const auto& [lo, hi] : b.covers())
        if (lo == y) rel.emplace_back(id(x, y), id(x, hi));
    }
  return Lattice::build(std::move(names), rel);
}

std::string describe(const Lattice& lat, const std::vector<Element>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += lat.name(subset[i]);
  }
  return out + "}";
}

namespace fixtures {

namespace {

std::vector<CoverPair> n_covers() {
  return {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"c", "e"}, {"c", "f"},
          {"d", "g"}, {"d", "h"}, {"e", "h"}, {"f", "h"}, {"g", "l"}, {"h", "l"}};
}

unsigned parse_uint(std::string_view text, std::string_view descriptor) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(ErrorKind::BadParameters, "bad fixture parameter in '" + std::string(descriptor) + "'");
  return v;
}

}  // namespace

Lattice lattice_n() { return Lattice::build({"a", "b", "c", "d", "e", "f", "g", "h", "l"}, n_covers()); }

Lattice lattice_q() {
  return Lattice::build({"a", "b", "c", "d", "e", "f", "g"},
                        {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"b", "e"}, {"c", "e"}, {"d", "f"}, {"e", "g"}, {"f", "g"}});
}

Lattice lattice_r() {
  auto covers = n_covers();
  covers.emplace_back("b", "i");
  covers.emplace_back("i", "g");
  return Lattice::build({"a", "b", "c", "d", "e", "f", "g", "h", "i", "l"}, covers);
}

Lattice chain(unsigned m) {
  if (m < 1) throw Error(ErrorKind::BadParameters, "chain needs m >= 1");
  std::vector<std::string> names;
  std::vector<CoverPair> rel;
  for (unsigned i = 1; i <= m; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i > 1) rel.emplace_back(names[i - 2], names[i - 1]);
  }
  return Lattice::build(std::move(names), rel);
}

namespace {

std::vector<CoverPair> ladder_covers(unsigned n) {
  std::vector<CoverPair> rel;
  auto x = [](unsigned i) { return "x" + std::to_string(i); };
  auto y = [](unsigned i) { return "y" + std::to_string(i); };
  for (unsigned i = 1; i <= n; ++i) {
    rel.emplace_back(x(i), y(i));
    if (i < n) {
      rel.emplace_back(x(i), x(i + 1));
      rel.emplace_back(y(i), y(i + 1));
    }
  }
  return rel;
}

std::vector<std::string> ladder_names(unsigned n) {
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (unsigned i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

}  // namespace

Lattice divisor_ladder(unsigned n) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "divisor ladder needs n >= 1");
  return Lattice::build(ladder_names(n), ladder_covers(n));
}

Lattice lk(unsigned n, unsigned k) {
  if (n < 2 || k < 1 || k > n - 1) throw Error(ErrorKind::BadParameters, "Lk needs 1 <= k <= n-1");
  auto names = ladder_names(n);
  names.push_back("z");
  auto rel = ladder_covers(n);
  rel.emplace_back("x" + std::to_string(k), "z");
  rel.emplace_back("z", "y" + std::to_string(k + 1));
  return Lattice::build(std::move(names), rel);
}

Lattice m3() {
  return Lattice::build({"a", "b1", "b2", "b3", "e"},
                        {{"a", "b1"}, {"a", "b2"}, {"a", "b3"}, {"b1", "e"}, {"b2", "e"}, {"b3", "e"}});
}

Lattice n5() {
  return Lattice::build({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"c", "e"}, {"a", "d"}, {"d", "e"}});
}

Lattice by_name(std::string_view descriptor) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto colon = descriptor.find(':', start);
    parts.push_back(descriptor.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  const auto head = parts[0];
  if (parts.size() == 1) {
    if (head == "N") return lattice_n();
    if (head == "Q") return lattice_q();
    if (head == "R") return lattice_r();
    if (head == "M3") return m3();
    if (head == "N5") return n5();
  } else if (parts.size() == 2) {
    if (head == "Chain") return chain(parse_uint(parts[1], descriptor));
    if (head == "D" || head == "DivisorLadder") return divisor_ladder(parse_uint(parts[1], descriptor));
  } else if (parts.size() == 3 && head == "Lk") {
    return lk(parse_uint(parts[1], descriptor), parse_uint(parts[2], descriptor));
  }
  throw Error(ErrorKind::BadParameters, "unknown fixture '" + std::string(descriptor) + "'");
}

std::vector<std::string> catalogue() { return {"N", "Q", "R", "M3", "N5", "Chain:<m>", "D:<n>", "Lk:<n>:<k>"}; }

}  // namespace fixtures

}  // namespace latticelab
