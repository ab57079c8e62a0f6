#include "grossone/format.hpp"

#include <gtest/gtest.h>

#include "grossone/expr.hpp"
#include "test_support.hpp"

namespace grossone {
namespace {

using testing::G;
using testing::Generator;
using testing::Q;
using testing::Rat;
using testing::Terms;

TEST(Format, MixedPowerSum) {
  const GrossNumber sum = Terms({{"16.5", "44.2"}, {"-12", "12"}, {"6.23", "3"}, {"27.1", "0"}, {"15", "-4.1"}});
  EXPECT_EQ(format(sum), "16.5G^44.2 - 12G^12 + 6.23G^3 + 27.1 + 15G^-4.1");
}

TEST(Format, UnitDigitsAndPowers) {
  EXPECT_EQ(format(Terms({{"-1", "19"}, {"0.7", "15"}})), "-G^19 + 0.7G^15");
  EXPECT_EQ(format(G()), "G");
  EXPECT_EQ(format(Terms({{"1", "0"}})), "1");
  EXPECT_EQ(format(Terms({{"-1", "0"}})), "-1");
  EXPECT_EQ(format(GrossNumber()), "0");
  EXPECT_EQ(format(Terms({{"2", "1/3"}})), "2G^(1/3)");
  EXPECT_EQ(format(Terms({{"2", "-1/3"}})), "2G^(-1/3)");
  EXPECT_EQ(format(GrossNumber::Monomial(Rational(1), Terms({{"1", "-1"}}))), "G^(G^-1)");
  EXPECT_EQ(format(GrossNumber::Monomial(Rational(11), Terms({{"-15", "1"}, {"2.3", "0"}}))), "11G^(-15G + 2.3)");
}

TEST(Format, NonTerminatingDigits) {
  EXPECT_EQ(format(Terms({{"1/55", "1"}, {"3", "0"}})), "G/55 + 3");
  EXPECT_EQ(format(Terms({{"-5/6", "2"}})), "-5G^2/6");
  EXPECT_EQ(format(Terms({{"1", "0"}, {"2/3", "-1"}})), "1 + 2G^-1/3");
  EXPECT_EQ(format(Rat("-2/3")), "-2/3");
}

TEST(Format, DecimalMode) {
  EXPECT_EQ(format(Terms({{"1", "0"}, {"2/3", "-1"}}), FormatOptions::Decimal(5)), "1 + 0.66667G^-1");
  EXPECT_EQ(format(Terms({{"1/55", "1"}}), FormatOptions::Decimal(3)), "0.0182G");
  EXPECT_EQ(format(Terms({{"27.1", "0"}}), FormatOptions::Decimal(5)), "27.1");
}

// Decimal output parses back to the same value when the digits fit the
// requested precision.
TEST(Format, DecimalModeKeepsRepresentableValues) {
  Generator gen(61);
  for (int i = 0; i < 500; ++i) {
    std::vector<Term> raw;
    for (int j = 0; j < 3; ++j) {
      raw.push_back(Term{Rat(std::to_string(gen.Int(-4, 4))),
                         Rational(mpz_class(static_cast<long>(gen.Int(-999, 999))), mpz_class(100))});
    }
    const GrossNumber a = GrossNumber::Canonicalize(std::move(raw));
    ASSERT_EQ(eval(parse(format(a, FormatOptions::Decimal(5)))), ExtendedValue(a));
  }
}

TEST(Format, ExtendedValues) {
  const ExtendedValue tiny = ExtendedValue::Atom(PowAtom{Rational(2), neg(G())});
  EXPECT_EQ(format(sub(ExtendedValue(Rat("1")), tiny)), "1 - 2^(-G)");
  EXPECT_EQ(format(ExtendedValue::Atom(PowAtom{Rational(10), scale(G(), Rational(2))})), "10^(2G)");
  EXPECT_EQ(format(ExtendedValue::Atom(PowAtom{Q("4/3"), G()})), "(4/3)^(G)");
  EXPECT_EQ(format(ExtendedValue::Atom(PowAtom{Q("1.5"), G()})), "1.5^(G)");
  const ExtendedValue product = mul(ExtendedValue(Terms({{"-2", "1"}, {"-1", "0"}})), tiny);
  EXPECT_EQ(format(product), "-(2G + 1)*2^(-G)");
  EXPECT_EQ(format(mul(ExtendedValue(Terms({{"2/3", "1"}})), tiny)), "2G/3*2^(-G)");
  EXPECT_EQ(format(ExtendedValue::Symbolic(SymbolicPower{Terms({{"1", "0"}, {"1", "-2"}}), Terms({{"1", "2"}})})),
            "(1 + G^-2)^(G^2)");
}

}  // namespace
}  // namespace grossone
