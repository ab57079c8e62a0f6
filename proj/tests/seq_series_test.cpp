#include "grossone/seq_series.hpp"

#include <vector>

#include <gtest/gtest.h>

#include "grossone/error.hpp"
#include "test_support.hpp"

namespace grossone {
namespace {

using testing::G;
using testing::Generator;
using testing::Q;
using testing::Rat;
using testing::Terms;

TEST(ValidateLength, Cases) {
  EXPECT_TRUE(validate_length(G()));
  EXPECT_FALSE(validate_length(add(G(), Rat("1"))));
  EXPECT_TRUE(validate_length(Terms({{"2/5", "1"}})));
  EXPECT_TRUE(validate_length(GrossNumber()));
  EXPECT_FALSE(validate_length(Rat("-1")));
  EXPECT_FALSE(validate_length(Rat("1/2")));
  EXPECT_THROW(SeqDescriptor::Make(add(G(), Rat("1")), "too long"), Error);
  EXPECT_EQ(SeqDescriptor::Make(G(), "naturals").label, "naturals");
}

TEST(IsComplete, Cases) {
  EXPECT_TRUE(is_complete(G()));
  EXPECT_FALSE(is_complete(Terms({{"1/2", "1"}})));
  EXPECT_FALSE(is_complete(Rat("5")));
}

TEST(Concat, Cases) {
  const Concatenation c = concat(Terms({{"2/5", "1"}}), Terms({{"4/5", "1"}}));
  EXPECT_EQ(c.first, G());
  EXPECT_EQ(c.leftover, Terms({{"1/5", "1"}}));
  const Concatenation finite = concat(Rat("3"), Rat("4"));
  EXPECT_EQ(finite.first, Rat("7"));
  EXPECT_TRUE(finite.leftover.is_zero());
  // Hilbert's hotel: min(G + 1, G) = G, overflow (G + 1) - G = 1.
  const Concatenation hotel = concat(G(), Rat("1"));
  EXPECT_EQ(hotel.first, G());
  EXPECT_EQ(hotel.leftover, Rat("1"));
  EXPECT_THROW(concat(add(G(), Rat("1")), Rat("1")), Error);
}

TEST(Concat, ConservesLength) {
  Generator gen(41);
  for (int i = 0; i < 1000; ++i) {
    auto length = [&] {
      const Rational fraction(mpz_class(static_cast<long>(gen.Int(0, 12))), mpz_class(12));
      return add(scale(G(), fraction), from_rational(Rational(gen.Int(0, 20)) * Rational(fraction < Rational(1) ? 1 : 0)));
    };
    const GrossNumber l1 = length();
    const GrossNumber l2 = length();
    ASSERT_TRUE(validate_length(l1));
    ASSERT_TRUE(validate_length(l2));
    const Concatenation c = concat(l1, l2);
    ASSERT_EQ(add(c.first, c.leftover), add(l1, l2));
    ASSERT_TRUE(cmp(c.first, G()) <= 0);
  }
}

TEST(SumConst, Cases) {
  const GrossNumber five_g = Terms({{"5", "1"}});
  EXPECT_EQ(sum_const(Rational(10), five_g), Terms({{"50", "1"}}));
  EXPECT_EQ(sum_const(Rational(3), five_g), Terms({{"15", "1"}}));
  const DivisionResult ratio = div(sum_const(Rational(3), five_g), sum_const(Rational(10), five_g), 8);
  EXPECT_TRUE(ratio.exact);
  EXPECT_EQ(ratio.quotient, Rat("0.3"));
  const GrossNumber s1 = sum_const(Rational(10), Terms({{"3", "1"}, {"4", "0"}}));
  EXPECT_EQ(s1, Terms({{"30", "1"}, {"40", "0"}}));
  EXPECT_EQ(sub(s1, sum_const(Rational(3), Terms({{"10", "1"}}))), Rat("40"));
  EXPECT_TRUE(sum_const(Q("2.5"), GrossNumber()).is_zero());
  EXPECT_THROW(sum_const(Rational(1), Terms({{"1", "-1"}})), Error);
}

TEST(SumConst, Linear) {
  Generator gen(42);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen.Digit();
    const Rational b = gen.Digit();
    const GrossNumber k = add(scale(G(), Rational(gen.Int(0, 9))), Rat(std::to_string(gen.Int(0, 50))));
    ASSERT_EQ(sum_const(a + b, k), add(sum_const(a, k), sum_const(b, k)));
  }
}

TEST(SumPoly, Cases) {
  const std::vector<Rational> identity = {Rational(0), Rational(1)};
  EXPECT_EQ(sum_poly(identity, G()), Terms({{"0.5", "2"}, {"0.5", "1"}}));
  EXPECT_EQ(sum_poly(std::vector<Rational>{Rational(1)}, G()), G());
  EXPECT_EQ(sum_poly(identity, Rat("10")), Rat("55"));
  const std::vector<Rational> quartic = {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)};
  try {
    sum_poly(quartic, G());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegreeTooHigh);
  }
}

TEST(SumPoly, MatchesBruteForce) {
  Generator gen(43);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> c;
    const auto degree = gen.Int(0, 3);
    for (std::int64_t d = 0; d <= degree; ++d) c.push_back(gen.Digit(20, 6));
    const auto k = gen.Int(0, 200);
    Rational brute;
    for (std::int64_t x = 1; x <= k; ++x) {
      Rational term;
      Rational xp(1);
      for (const auto& coefficient : c) {
        term += coefficient * xp;
        xp *= Rational(x);
      }
      brute += term;
    }
    ASSERT_EQ(sum_poly(c, from_rational(Rational(k))), from_rational(brute));
  }
}

// The closed forms at k = G agree with brute-force sums when G is replaced
// by a finite n, for every n in 1..50.
TEST(SumPoly, SymbolicAgreesWithSubstitution) {
  for (std::size_t d = 0; d < 4; ++d) {
    std::vector<Rational> c(d + 1);
    c[d] = Rational(1);
    const GrossNumber symbolic = sum_poly(c, G());
    for (long n = 1; n <= 50; ++n) {
      Rational brute;
      for (long x = 1; x <= n; ++x) brute += Rational(x).pow(static_cast<long>(d));
      ASSERT_EQ(*testing::Substitute(symbolic, Rational(n)), brute);
    }
  }
}

TEST(SumGeometric, Cases) {
  const ExtendedValue v = sum_geometric(Q("1/2"), G());
  EXPECT_EQ(v, sub(ExtendedValue(Rat("1")), ExtendedValue::Atom(PowAtom{Rational(2), neg(G())})));
  Rational brute;
  for (long i = 1; i <= 10; ++i) brute += Q("1/2").pow(i);
  ASSERT_EQ(brute, Q("1023/1024"));
  EXPECT_EQ(sum_geometric(Q("1/2"), Rat("10")), ExtendedValue(from_rational(brute)));
  EXPECT_TRUE(sum_geometric(Q("1/2"), GrossNumber()).is_zero());
  try {
    sum_geometric(Rational(1), G());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRatioOne);
  }
}

TEST(SumGeometric, Telescoping) {
  Generator gen(44);
  for (int i = 0; i < 300; ++i) {
    Rational r = gen.Digit(9, 9);
    if (r == Rational(1)) continue;
    const auto k = gen.Int(0, 30);
    const ExtendedValue s = sum_geometric(r, from_rational(Rational(k)));
    ASSERT_TRUE(s.is_gross());
    const Rational sum = *s.pure_part().as_rational();
    ASSERT_EQ((Rational(1) - r) * sum + r.pow(k + 1), r);
  }
  for (const char* ratio : {"1/2", "1/3", "2/7", "3", "-1/2", "-5"}) {
    const Rational r = Q(ratio);
    const ExtendedValue s = sum_geometric(r, G());
    EXPECT_EQ(s.pure_part(), from_rational(r / (Rational(1) - r))) << ratio;
  }
}

TEST(SumGeometric, ResidueIsInfinitesimal) {
  const ExtendedValue residue = sub(sum_geometric(Q("1/2"), G()), ExtendedValue(Rat("1")));
  EXPECT_EQ(classify_extended(residue), NumberClass::kInfinitesimal);
}

TEST(EApproximant, Cases) {
  EXPECT_EQ(e_approximant(Rat("1")), ExtendedValue(Rat("2")));
  EXPECT_EQ(e_approximant(Rat("3")), ExtendedValue(from_rational(Q("64/27"))));
  const ExtendedValue e0 = e_approximant(G());
  ASSERT_TRUE(e0.symbolic().has_value());
  EXPECT_EQ(e0.symbolic()->base, Terms({{"1", "0"}, {"1", "-1"}}));
  EXPECT_EQ(e0.symbolic()->exponent, G());
  const ExtendedValue e1 = e_approximant(Terms({{"1", "2"}}));
  EXPECT_EQ(e1.symbolic()->base, Terms({{"1", "0"}, {"1", "-2"}}));
  EXPECT_THROW(e_approximant(Rat("0")), Error);
}

}  // namespace
}  // namespace grossone
