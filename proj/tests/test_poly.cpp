#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "latticelab/error.hpp"
#include "latticelab/polynomial.hpp"
#include "oracles.hpp"

using namespace latticelab;

namespace {

RingPtr abc(Field f = {}) { return Ring::make({"a", "b", "c"}, f); }

Monomial mono(std::initializer_list<unsigned> e) { return Monomial(std::vector<unsigned>(e)); }

}  // namespace

TEST(Monomial, Arithmetic) {
  auto m = mono({2, 0, 1});
  auto n = mono({1, 3, 0});
  EXPECT_EQ(m.degree(), 3u);
  EXPECT_EQ(m.support(), 0b101u);
  EXPECT_EQ(m * n, mono({3, 3, 1}));
  EXPECT_EQ(m.lcm(n), mono({2, 3, 1}));
  EXPECT_EQ(m.gcd(n), mono({1, 0, 0}));
  EXPECT_EQ((m * n) / n, m);
  EXPECT_TRUE(n.gcd(m).divides(m));
  EXPECT_FALSE(m.divides(n));
  EXPECT_FALSE(m.is_squarefree());
  EXPECT_TRUE(mono({1, 1, 0}).is_squarefree());
  EXPECT_TRUE(mono({0, 1, 0}).coprime(mono({1, 0, 1})));
  EXPECT_EQ(Monomial::variable(2, 4), mono({0, 0, 4}));
}

TEST(MonomialOrder, LexAndDegRevLex) {
  auto lex = MonomialOrder::lex(3);
  auto drl = MonomialOrder::degrevlex(3);
  // a > b^2 in lex, b^2 > a in degrevlex.
  EXPECT_TRUE(lex.greater(mono({1, 0, 0}), mono({0, 2, 0})));
  EXPECT_TRUE(drl.greater(mono({0, 2, 0}), mono({1, 0, 0})));
  // Degree 2 in degrevlex: a^2 > ab > b^2 > ac > bc > c^2.
  std::vector<Monomial> deg2 = {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
  for (std::size_t i = 1; i < deg2.size(); ++i) EXPECT_TRUE(drl.greater(deg2[i - 1], deg2[i])) << i;
  // Priority c > b > a reverses roles.
  auto custom = MonomialOrder::lex({2, 1, 0});
  EXPECT_TRUE(custom.greater(mono({0, 0, 1}), mono({5, 0, 0})));
}

TEST(MonomialOrder, TotalAndMultiplicative) {
  std::mt19937_64 rng(7);
  for (auto order : {MonomialOrder::lex(4), MonomialOrder::degrevlex(4), MonomialOrder::degrevlex({3, 1, 0, 2}),
                     MonomialOrder::elimination({1}, MonomialOrder::degrevlex(4))}) {
    for (int trial = 0; trial < 300; ++trial) {
      auto a = oracle::random_monomial(rng, 4, rng() % 5);
      auto b = oracle::random_monomial(rng, 4, rng() % 5);
      auto w = oracle::random_monomial(rng, 4, rng() % 3);
      auto ab = order.compare(a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(order.compare(b, a), 0 <=> ab);
      EXPECT_EQ(order.compare(a * w, b * w), ab);
      EXPECT_TRUE(order.compare(a * w, a) >= 0);
    }
  }
}

TEST(MonomialOrder, EliminationBlockDominates) {
  auto e = MonomialOrder::elimination({0}, MonomialOrder::degrevlex(3));
  EXPECT_TRUE(e.greater(mono({1, 0, 0}), mono({0, 5, 5})));
  EXPECT_TRUE(e.greater(mono({1, 2, 0}), mono({1, 0, 1})));
}

TEST(MonomialOrder, ParseDescriptor) {
  std::vector<std::string> names = {"a", "b", "c"};
  EXPECT_EQ(parse_order("lex", names), MonomialOrder::lex(3));
  EXPECT_EQ(parse_order("degrevlex:", names), MonomialOrder::degrevlex(3));
  EXPECT_EQ(parse_order("lex:c,a,b", names), MonomialOrder::lex({2, 0, 1}));
  EXPECT_EQ(parse_order("lex:c,a,b", names).describe(names), "lex:c,a,b");
  for (const char* bad : {"lex:a,b", "lex:a,a,b", "lex:a,b,q", "grlex", "lex:a,,b"}) {
    try {
      parse_order(bad, names);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Polynomial, ParseAndPrint) {
  auto r = abc();
  auto f = parse_polynomial("a*b - c^2", r);
  EXPECT_EQ(f.str(), "a*b - c^2");
  EXPECT_EQ(parse_polynomial("(a - b)^2", r).str(), "a^2 - 2*a*b + b^2");
  EXPECT_EQ(parse_polynomial("3/2*a - 1/2*a + 0*b", r).str(), "a");
  EXPECT_EQ(parse_polynomial("-c + 2", r).str(), "-c + 2");
  EXPECT_EQ(parse_polynomial("a*b*c - a*b*c", r).str(), "0");
  EXPECT_TRUE(parse_polynomial("b^2 - a*c", r).is_binomial_shape());
  EXPECT_FALSE(parse_polynomial("b^2 - 2*a*c", r).is_binomial_shape());
  for (const char* bad : {"a +", "a**b", "q", "a^", "(a", "a/0", "1/"}) {
    try {
      parse_polynomial(bad, r);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Polynomial, RingArithmeticLaws) {
  auto r = abc();
  std::mt19937_64 rng(11);
  auto random_poly = [&] {
    std::vector<Term> terms;
    for (int i = 0; i < 4; ++i)
      terms.push_back({Coefficient(static_cast<long>(rng() % 7) - 3), oracle::random_monomial(rng, 3, rng() % 4)});
    return Polynomial::from_terms(r, terms);
  };
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(), g = random_poly(), h = random_poly();
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f + g, poly_arith(Arith::Add, f, g));
    EXPECT_EQ(parse_polynomial(f.str(), r), f);
    for (std::size_t i = 1; i < f.terms().size(); ++i)
      EXPECT_TRUE(r->order().greater(f.terms()[i - 1].mono, f.terms()[i].mono));
  }
}

TEST(Polynomial, ReorderingAndEmbedding) {
  auto r = abc();
  auto f = parse_polynomial("a + b^2", r);
  EXPECT_EQ(f.leading().mono, mono({0, 2, 0}));
  auto lexr = r->with_order(MonomialOrder::lex(3));
  auto g = f.in_ring(lexr);
  EXPECT_EQ(g.leading().mono, mono({1, 0, 0}));
  EXPECT_EQ(leading_term(MonomialOrder::lex(3), f).second, mono({1, 0, 0}));
  auto ext = r->extended("t");
  EXPECT_EQ(ext->nvars(), 4u);
  EXPECT_EQ(f.in_ring(ext).str(), "b^2 + a");
  EXPECT_EQ(r->extended("a")->names().back(), "a_");
}

TEST(Polynomial, RingMismatchAndZero) {
  auto f = parse_polynomial("a", abc());
  auto g = parse_polynomial("a", Ring::make({"a", "b"}));
  try {
    (void)(f + g);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingMismatch);
  }
  try {
    (void)Polynomial(abc()).leading();
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
  }
}

TEST(Field, PrimeFieldArithmetic) {
  auto f7 = Field::prime(7);
  EXPECT_EQ(f7.add(5, 4), 2);
  EXPECT_EQ(f7.mul(3, 5), 1);
  EXPECT_EQ(f7.inv(3), 5);
  EXPECT_EQ(f7.normalize(Coefficient(1, 2)), 4);
  EXPECT_EQ(f7.format(6), "-1");
  for (long a = 1; a < 7; ++a) EXPECT_EQ(f7.mul(a, f7.inv(a)), 1);
  auto r = abc(f7);
  EXPECT_EQ(parse_polynomial("8*a - b", r).str(), "a - b");
  EXPECT_TRUE(parse_polynomial("7*a", r).is_zero());
  try {
    Field::prime(9);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParameters);
  }
  try {
    (void)f7.inv(0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDivisor);
  }
}
