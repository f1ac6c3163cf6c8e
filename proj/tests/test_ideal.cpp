#include <gtest/gtest.h>

#include "latticelab/error.hpp"
#include "latticelab/ideal.hpp"
#include "latticelab/joinmeet.hpp"
#include "oracles.hpp"

using namespace latticelab;

namespace {

Ideal make(const RingPtr& r, const std::vector<std::string>& gens) { return Ideal::parse(r, gens); }

}  // namespace

TEST(MonomialIdeal, MinimalGeneratorsAndDimension) {
  auto r = Ring::make({"a", "b", "c"});
  auto m = initial_ideal(make(r, {"a*b", "a^2*b", "b*c", "a*b*c"}), MonomialOrder::degrevlex(3));
  EXPECT_EQ(m.strings(r->names()), (std::vector<std::string>{"a*b", "b*c"}));
  EXPECT_EQ(krull_dim(m), 2u);  // {a, c} avoids both supports
  EXPECT_TRUE(is_squarefree(m));
  EXPECT_TRUE(m.contains(Monomial(std::vector<unsigned>{0, 2, 1})));
  EXPECT_EQ(krull_dim(MonomialIdeal(3, {Monomial()})), 0u);
  EXPECT_EQ(krull_dim(MonomialIdeal(3)), 3u);
  MonomialIdeal x(3, {Monomial::variable(0)}), y(3, {Monomial::variable(1)});
  EXPECT_EQ(x.intersect(y), MonomialIdeal(3, {Monomial::variable(0) * Monomial::variable(1)}));
  EXPECT_FALSE(is_squarefree(MonomialIdeal(3, {Monomial::variable(2, 2)})));
}

TEST(Ideal, MembershipAndRadicalMembership) {
  auto r = Ring::make({"x", "y"});
  auto i = make(r, {"x^2", "x*y"});
  EXPECT_TRUE(ideal_member(parse_polynomial("x^3 + x*y^2", r), i));
  EXPECT_FALSE(ideal_member(parse_polynomial("x", r), i));
  EXPECT_TRUE(radical_member(parse_polynomial("x", r), i));
  EXPECT_FALSE(radical_member(parse_polynomial("y", r), i));
  EXPECT_EQ(dimension(i), 1u);
}

TEST(Ideal, IntersectionAndElimination) {
  auto r = Ring::make({"x", "y", "z"});
  auto xy = intersect(make(r, {"x"}), make(r, {"y"}));
  EXPECT_TRUE(ideal_equal(xy, make(r, {"x*y"})));
  auto twisted = intersect(make(r, {"x - y"}), make(r, {"x - z"}));
  EXPECT_TRUE(ideal_equal(twisted, make(r, {"x^2 - x*y - x*z + y*z"})));
  auto e = eliminate(make(r, {"x - y", "y - z"}), {1});
  EXPECT_TRUE(ideal_equal(e, make(r, {"x - z"})));
  auto three = intersect(std::vector<Ideal>{make(r, {"x"}), make(r, {"y"}), make(r, {"z"})});
  EXPECT_TRUE(ideal_equal(three, make(r, {"x*y*z"})));
}

TEST(Ideal, ColonSaturationAndDivision) {
  auto r = Ring::make({"x", "y"});
  auto i = make(r, {"x^2*y", "x*y^3"});
  EXPECT_TRUE(ideal_equal(colon(i, parse_polynomial("x", r)), make(r, {"x*y", "y^3"})));
  EXPECT_TRUE(ideal_equal(saturate(i, parse_polynomial("x", r)), make(r, {"y"})));
  EXPECT_TRUE(ideal_equal(saturate_by_variables(i, {0, 1}), make(r, {"1"})));
  EXPECT_EQ(divide_exact(parse_polynomial("x^2 - y^2", r), parse_polynomial("x - y", r)).str(), "x + y");
  try {
    divide_exact(parse_polynomial("x^2 + y", r), parse_polynomial("x", r));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

TEST(Ideal, ColonByVariableEqualsSaturationOnRadicalJoinMeetIdeals) {
  for (const char* name : {"Q", "R", "D:3", "Chain:3", "Lk:3:1"}) {
    auto l = fixtures::by_name(name);
    auto jm = join_meet_ideal(l);
    const auto& r = jm.ideal.ring();
    for (std::size_t v = 0; v < r->nvars(); ++v) {
      auto f = Polynomial::variable(r, v);
      EXPECT_TRUE(ideal_equal(colon(jm.ideal, f), saturate(jm.ideal, f))) << name << " " << r->names()[v];
    }
  }
}

TEST(Ideal, VariableSaturationRoutesAgree) {
  for (const char* name : {"Q", "N", "M3", "N5", "Lk:2:1"}) {
    auto l = fixtures::by_name(name);
    auto jm = join_meet_ideal(l);
    const auto& r = jm.ideal.ring();
    ASSERT_TRUE(is_homogeneous(jm.ideal));
    std::vector<std::size_t> all;
    for (std::size_t v = 0; v < r->nvars(); ++v) all.push_back(v);
    auto fast = saturate_by_variables(jm.ideal, all);
    auto slow = saturate(jm.ideal, variable_product(r, all));
    EXPECT_TRUE(ideal_equal(fast, slow)) << name;
    std::vector<std::size_t> two{0, r->nvars() - 1};
    EXPECT_TRUE(ideal_equal(saturate_by_variables(jm.ideal, two), saturate(jm.ideal, variable_product(r, two))))
        << name;
  }
}

TEST(Ideal, ContainmentAndEquality) {
  auto r = Ring::make({"x", "y"});
  auto big = make(r, {"x", "y"});
  auto small = make(r, {"x^2", "x*y"});
  EXPECT_TRUE(ideal_contains(big, small));
  EXPECT_FALSE(ideal_contains(small, big));
  EXPECT_TRUE(ideal_equal(small.plus(make(r, {"y"})), make(r, {"x^2", "y"})));
  EXPECT_FALSE(is_homogeneous(make(r, {"x - 1"})));
  EXPECT_EQ(variable_product(r, {}).str(), "1");
}

TEST(Ideal, GroebnerCacheIsSharedByCopies) {
  auto r = Ring::make({"x", "y"});
  auto i = make(r, {"x*y - 1"});
  auto copy = i;
  EXPECT_EQ(i.groebner().get(), copy.groebner().get());
  EXPECT_NE(i.groebner().get(), i.groebner(MonomialOrder::lex(2)).get());
}
