#include "grossone/session.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "grossone/error.hpp"
#include "test_support.hpp"

namespace grossone {
namespace {

using testing::Generator;

TEST(Session, CardOfSetExpression) {
  Session s;
  EXPECT_EQ(s.Execute(":card (N(4,5) & N(3,11)) | {3,4,5,69}"), "G/55 + 3");
  EXPECT_EQ(s.Execute(":card N(3,5)"), "0.2G");
  EXPECT_EQ(s.Execute(":card Z"), "2G + 1");
  EXPECT_EQ(s.Execute(":card Q1"), "4G^2 + 2G");
  EXPECT_EQ(s.Execute(":card Q2"), "2G^2 + 1");
  EXPECT_EQ(s.Execute(":card N^3"), "G^3");
  EXPECT_EQ(s.Execute(":card R(10)"), "10^(2G)");
  EXPECT_EQ(s.Execute(":card grid(2)"), "2G^3");
  EXPECT_EQ(s.Execute(":card line(2)"), "2G*2^(G)");
}

TEST(Session, DivisionReport) {
  Session s;
  EXPECT_EQ(s.Execute(":div -10G^3 + 16 + 42G^-3 ; 5G^3 + 7"),
            "R1 = 30 + 42G^-3\nR2 = 0\nquotient = -2 + 6G^-3\nremainder = 0\nexact = true");
  EXPECT_EQ(s.Execute(":div -10G^3 + 16 + 40G^-3 ; 5G^3 + 7 ; 2"),
            "R1 = 30 + 40G^-3\nR2 = -2G^-3\nquotient = -2 + 6G^-3\nremainder = -2G^-3\nexact = false");
}

TEST(Session, ExpressionsAndLet) {
  Session s;
  EXPECT_EQ(s.Execute("G - G"), "0");
  EXPECT_EQ(s.Execute("   "), "");
  EXPECT_EQ(s.Execute("let x = 3G^2"), "x = 3G^2");
  EXPECT_EQ(s.Execute("5x^3 - x^2"), "135G^6 - 9G^4");
  EXPECT_EQ(s.Execute("let x = x + 1"), "x = 3G^2 + 1");
  ASSERT_EQ(s.environment().size(), 1U);
}

TEST(Session, OtherCommands) {
  Session s;
  EXPECT_EQ(s.Execute(":concat 2G/5 ; 4G/5"), "first = G, leftover = 0.2G");
  EXPECT_EQ(s.Execute(":sum poly ; 0, 1 ; k=G"), "0.5G^2 + 0.5G");
  EXPECT_EQ(s.Execute(":sum geom ; 1/2 ; k=G"), "1 - 2^(-G)");
  EXPECT_EQ(s.Execute(":sum const ; 3 ; k=G/3"), "G");
  EXPECT_EQ(s.Execute(":count linear(1,1) ; G"), "G");
  EXPECT_EQ(s.Execute(":e G"), "(1 + G^-1)^(G)");
  EXPECT_EQ(s.Execute(":e 2"), "2.25");
  EXPECT_EQ(s.Execute(":classify 2 - (2 - 10^(-G))"), "Infinitesimal");
  EXPECT_EQ(s.Execute(":classify 3 + G^-1"), "FiniteMixed");
  EXPECT_EQ(s.Execute(":parity G/2 + 1"), "Odd");
  EXPECT_EQ(s.Execute(":cmp 2^(2G) ; G"), "Greater");
  EXPECT_EQ(s.Execute(":cmp G ; G + 1"), "Less");
}

TEST(Session, SettingsApplyToLaterCommandsOnly) {
  Session s;
  EXPECT_EQ(s.Execute("1 + 2G^-1/3"), "1 + 2G^-1/3");
  EXPECT_EQ(s.Execute(":set format decimal:5"), "");
  EXPECT_EQ(s.Execute("1 + 2G^-1/3"), "1 + 0.66667G^-1");
  EXPECT_EQ(s.Execute(":set format exact"), "");
  EXPECT_THROW(s.Execute("1/(G + 1)"), Error);
  EXPECT_EQ(s.Execute(":set strict off"), "");
  EXPECT_EQ(s.Execute(":set max_div_terms 2"), "");
  EXPECT_EQ(s.Execute("1/(G + 1)"), "G^-1 - G^-2");
  EXPECT_THROW(s.Execute(":set format fancy"), Error);
  EXPECT_THROW(s.Execute(":set max_div_terms 0"), Error);
  EXPECT_EQ(s.settings().max_div_terms, 2U);
}

TEST(Session, HelpListsEveryCommand) {
  const std::string help = HelpText();
  for (const char* command : {"let", ":div", ":card", ":count", ":sum", ":concat", ":e ", ":classify", ":parity",
                              ":cmp", ":set", ":help", ":quit"}) {
    EXPECT_NE(help.find(command), std::string::npos) << command;
  }
  Session s;
  EXPECT_EQ(s.Execute(":help"), help);
}

TEST(Session, ErrorsLeaveSessionUsable) {
  Session s;
  s.Execute("let a = 2");
  EXPECT_THROW(s.Execute("y + 1"), Error);
  EXPECT_THROW(s.Execute("1 +"), SyntaxError);
  EXPECT_THROW(s.Execute(":frobnicate"), Error);
  EXPECT_THROW(s.Execute(":card N(0,3)"), Error);
  EXPECT_EQ(s.Execute("a * G"), "2G");
  EXPECT_FALSE(s.quit_requested());
  s.Execute(":quit");
  EXPECT_TRUE(s.quit_requested());
}

TEST(Batch, ExitCodes) {
  {
    Session s;
    std::istringstream in("# comment\n\nlet x = G\nx + 1\n");
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(run_batch(in, out, err, s), 0);
    EXPECT_EQ(out.str(), "x = G\nG + 1\n");
    EXPECT_EQ(err.str(), "");
  }
  {
    Session s;
    std::istringstream in("");
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(run_batch(in, out, err, s), 0);
    EXPECT_EQ(out.str(), "");
  }
  {
    Session s;
    std::istringstream in("1 + 1\nq + 1\nG/0\n3\n");
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(run_batch(in, out, err, s), 1);
    EXPECT_EQ(out.str(), "2\n3\n");
    EXPECT_NE(err.str().find("line 2:"), std::string::npos);
    EXPECT_NE(err.str().find("line 3:"), std::string::npos);
    EXPECT_NE(err.str().find("first error at line 2"), std::string::npos);
  }
}

TEST(Repl, OutputMatchesFormat) {
  Generator gen(71);
  std::string script;
  std::string expected;
  for (int i = 0; i < 200; ++i) {
    const GrossNumber a = gen.Nested();
    script += format(a) + "\n";
    expected += format(a) + "\n";
  }
  script += "nope\n:quit\n1\n";
  Session s;
  std::istringstream in(script);
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run_repl(in, out, err, s, false), 0);
  EXPECT_EQ(out.str(), expected);
  EXPECT_NE(err.str().find("UnboundVariable"), std::string::npos);
}

}  // namespace
}  // namespace grossone
