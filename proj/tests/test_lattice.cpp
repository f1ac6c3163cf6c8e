#include <gtest/gtest.h>

#include <functional>
#include <optional>
#include <set>

#include "latticelab/error.hpp"
#include "latticelab/lattice.hpp"
#include "oracles.hpp"

using namespace latticelab;

namespace {

std::vector<std::string> corpus() {
  return {"N", "Q", "R", "M3", "N5", "Chain:1", "Chain:4", "D:1", "D:2", "D:3", "D:4", "D:5", "D:6",
          "Lk:2:1", "Lk:3:1", "Lk:3:2", "Lk:4:2", "Lk:5:3"};
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(LatticeBuild, ChainBasics) {
  auto c = fixtures::chain(5);
  EXPECT_EQ(c.size(), 5u);
  EXPECT_EQ(c.name(c.bottom()), "c1");
  EXPECT_EQ(c.name(c.top()), "c5");
  EXPECT_TRUE(c.is_graded());
  EXPECT_EQ(c.length(), 4u);
  EXPECT_TRUE(incomparable_pairs(c).empty());
}

TEST(LatticeBuild, RedundantCoversAreReduced) {
  auto l = Lattice::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  EXPECT_EQ(l.covers().size(), 2u);
  EXPECT_TRUE(l.less(l.at("a"), l.at("c")));
}

TEST(LatticeBuild, Errors) {
  EXPECT_EQ(kind_of([] { Lattice::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }), ErrorKind::NotAPoset);
  EXPECT_EQ(kind_of([] { Lattice::build({"a", "b"}, {{"a", "z"}}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { Lattice::build({"a", "a"}, {}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { Lattice::build({"1x"}, {}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { Lattice::build({"a", "b"}, {}); }), ErrorKind::NoBounds);
  // b and c have two minimal upper bounds d and e.
  EXPECT_EQ(kind_of([] {
              Lattice::build({"a", "b", "c", "d", "e", "f"},
                             {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"b", "e"}, {"c", "e"}, {"d", "f"}, {"e", "f"}});
            }),
            ErrorKind::NotALattice);
  EXPECT_EQ(kind_of([] { fixtures::lk(3, 3); }), ErrorKind::BadParameters);
  EXPECT_EQ(kind_of([] { fixtures::by_name("Lk:3"); }), ErrorKind::BadParameters);
}

TEST(LatticeBuild, NotALatticeWitnessIsFirstPair) {
  try {
    Lattice::build({"a", "b", "c", "d", "e", "f"},
                   {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"b", "e"}, {"c", "e"}, {"d", "f"}, {"e", "f"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotALattice);
    EXPECT_NE(std::string(e.what()).find("(b, c)"), std::string::npos) << e.what();
  }
}

TEST(LatticeFixtures, ShapesOfNamedLattices) {
  auto n = fixtures::lattice_n();
  EXPECT_EQ(n.size(), 9u);
  EXPECT_TRUE(n.is_graded());
  EXPECT_EQ(n.length(), 4u);
  EXPECT_TRUE(is_modular(n).modular);
  EXPECT_FALSE(is_distributive(n).distributive);

  auto r = fixtures::lattice_r();
  EXPECT_EQ(r.size(), 10u);
  EXPECT_TRUE(r.less(r.at("b"), r.at("i")));
  EXPECT_TRUE(r.less(r.at("i"), r.at("g")));
  EXPECT_TRUE(is_modular(r).modular);

  auto lk = fixtures::lk(2, 1);
  EXPECT_EQ(lk.elements(), (std::vector<std::string>{"x1", "x2", "y1", "y2", "z"}));
  EXPECT_EQ(lk.name(lk.meet(lk.at("z"), lk.at("y1"))), "x1");
  EXPECT_EQ(lk.name(lk.join(lk.at("z"), lk.at("y1"))), "y2");

  auto d2 = fixtures::divisor_ladder(2);
  EXPECT_EQ(d2.size(), 4u);
  EXPECT_EQ(incomparable_pairs(d2).size(), 1u);
}

TEST(LatticeFixtures, QContainsAPentagon) {
  auto q = fixtures::lattice_q();
  auto dist = is_distributive(q);
  EXPECT_FALSE(dist.distributive);
  ASSERT_TRUE(dist.witness.has_value());
  auto mod = is_modular(q);
  EXPECT_FALSE(mod.modular);
  ASSERT_TRUE(mod.witness.has_value());
  EXPECT_TRUE(is_valid_witness(q, *mod.witness));
  EXPECT_EQ(mod.witness->kind, SublatticeKind::Pentagon);
  std::vector<Element> named;
  for (const char* x : {"b", "d", "e", "f", "g"}) named.push_back(q.at(x));
  EXPECT_EQ(oracle::shape_of(q, named), oracle::Shape::Pentagon);
}

TEST(LatticeProperties, AbsorptionOnCorpus) {
  for (const auto& name : corpus()) {
    auto l = fixtures::by_name(name);
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y) {
        ASSERT_EQ(l.meet(x, l.join(x, y)), x) << name;
        ASSERT_EQ(l.join(x, l.meet(x, y)), x) << name;
      }
  }
}

TEST(LatticeProperties, DistributiveAndModularAgreeWithFiveSubsetOracle) {
  for (const auto& name : corpus()) {
    auto l = fixtures::by_name(name);
    if (l.size() > 12) continue;
    bool m3 = oracle::has_shape(l, oracle::Shape::Diamond);
    bool n5 = oracle::has_shape(l, oracle::Shape::Pentagon);
    EXPECT_EQ(is_distributive(l).distributive, !m3 && !n5) << name;
    EXPECT_EQ(is_modular(l).modular, !n5) << name;
    EXPECT_EQ(find_sublattice(l, SublatticeKind::Diamond).has_value(), m3) << name;
    EXPECT_EQ(find_sublattice(l, SublatticeKind::Pentagon).has_value(), n5) << name;
    if (auto w = find_sublattice(l, SublatticeKind::Diamond)) EXPECT_TRUE(is_valid_witness(l, *w)) << name;
    if (auto w = find_sublattice(l, SublatticeKind::Pentagon)) EXPECT_TRUE(is_valid_witness(l, *w)) << name;
  }
}

TEST(LatticeProperties, AdmissibleSetsMatchSubsetFilter) {
  for (const auto& name : corpus()) {
    auto l = fixtures::by_name(name);
    if (l.size() > 12) continue;
    std::set<std::vector<Element>> expected;
    for (std::uint32_t mask = 0; mask < (1u << l.size()); ++mask)
      if (oracle::admissible_by_substitution(l, mask)) {
        std::vector<Element> s;
        for (Element x = 0; x < l.size(); ++x)
          if (mask >> x & 1u) s.push_back(x);
        expected.insert(s);
      }
    auto got = enumerate_admissible_sets(l);
    std::set<std::vector<Element>> got_set;
    for (const auto& a : got) {
      EXPECT_TRUE(is_admissible(l, a.members));
      got_set.insert(a.members);
    }
    EXPECT_EQ(got.size(), got_set.size()) << name;
    EXPECT_EQ(got_set, expected) << name;
    for (std::size_t i = 1; i < got.size(); ++i) {
      const auto& a = got[i - 1].members;
      const auto& b = got[i].members;
      EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b)) << name;
    }
  }
}

TEST(LatticeProperties, RestrictionIsClosedUnderAmbientOperations) {
  for (const auto& name : {"Q", "N", "R", "Lk:3:1", "D:3"}) {
    auto l = fixtures::by_name(name);
    for (const auto& a : enumerate_admissible_sets(l)) {
      if (a.members.empty() || a.members.size() == l.size()) continue;
      std::optional<Lattice> restricted;
      try {
        restricted = restrict_to_complement(l, a);
      } catch (const Error& e) {
        // Complements without a top or bottom are legitimate; they are not lattices.
        EXPECT_TRUE(e.kind() == ErrorKind::NoBounds || e.kind() == ErrorKind::NotALattice) << name;
        continue;
      }
      const Lattice& sub = *restricted;
      for (Element x = 0; x < sub.size(); ++x)
        for (Element y = 0; y < sub.size(); ++y) {
          Element ax = l.at(sub.name(x)), ay = l.at(sub.name(y));
          if (l.comparable(ax, ay)) continue;
          EXPECT_EQ(sub.name(sub.join(x, y)), l.name(l.join(ax, ay))) << name;
          EXPECT_EQ(sub.name(sub.meet(x, y)), l.name(l.meet(ax, ay))) << name;
        }
    }
  }
}

TEST(LatticeProperties, RestrictRejectsNonAdmissible) {
  auto q = fixtures::lattice_q();
  EXPECT_EQ(kind_of([&] { restrict_to_complement(q, AdmissibleSet{{q.at("b")}}); }), ErrorKind::NotAdmissible);
}

TEST(LatticeProperties, RankTwoDiamondsInModularNonDistributive) {
  for (const auto& name : corpus()) {
    auto l = fixtures::by_name(name);
    bool eligible = l.is_graded() && is_modular(l).modular && !is_distributive(l).distributive;
    if (!eligible) {
      EXPECT_EQ(kind_of([&] { find_rank2_diamond(l); }), ErrorKind::PreconditionViolated) << name;
      continue;
    }
    auto d = find_rank2_diamond(l);
    EXPECT_EQ(l.rank(d.top), l.rank(d.bottom) + 2) << name;
    ASSERT_GE(d.atoms.size(), 3u) << name;
    for (std::size_t i = 0; i < d.atoms.size(); ++i)
      for (std::size_t j = i + 1; j < d.atoms.size(); ++j) {
        EXPECT_EQ(l.join(d.atoms[i], d.atoms[j]), d.top) << name;
        EXPECT_EQ(l.meet(d.atoms[i], d.atoms[j]), d.bottom) << name;
      }
  }
}

TEST(LatticeOps, JoinIrreduciblesAndDual) {
  auto d = fixtures::divisor_ladder(4);
  EXPECT_EQ(join_irreducibles(d).size(), 4u);
  auto n = fixtures::lattice_n();
  auto nd = dual(n);
  EXPECT_EQ(nd.name(nd.bottom()), "l");
  for (Element x = 0; x < n.size(); ++x)
    for (Element y = 0; y < n.size(); ++y) EXPECT_EQ(nd.join(x, y), n.meet(x, y));
  EXPECT_EQ(dual(nd), n);
}

TEST(LatticeOps, ProductOfChainsIsDistributive) {
  auto p = product(fixtures::chain(2), fixtures::chain(3));
  EXPECT_EQ(p.size(), 6u);
  EXPECT_TRUE(is_distributive(p).distributive);
  EXPECT_TRUE(p.find("c1_c1").has_value());
}

TEST(LatticeOps, CatalogueResolves) {
  EXPECT_EQ(fixtures::catalogue().size(), 8u);
  for (const auto& name : corpus()) EXPECT_NO_THROW(fixtures::by_name(name)) << name;
  EXPECT_EQ(fixtures::by_name("DivisorLadder:3"), fixtures::divisor_ladder(3));
}
