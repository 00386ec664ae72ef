#include <gtest/gtest.h>

#include "dsmfuse/error.hpp"
#include "dsmfuse/formula.hpp"

using namespace dsmfuse;

TEST(Formula, ParsesPrecedence) {
  EXPECT_EQ(Formula::parse("a | b & c").to_string(), Formula::parse("a | (b & c)").to_string());
  EXPECT_EQ(Formula::parse("a -> b -> c").to_string(), Formula::parse("a -> (b -> c)").to_string());
  EXPECT_EQ(Formula::parse("~a & b").to_string(), Formula::parse("(~a) & b").to_string());
  EXPECT_EQ(Formula::parse("(a -> b) & c").kind(), Formula::Kind::conjunction);
}

TEST(Formula, VariablesAreSortedAndUnique) {
  EXPECT_EQ(Formula::parse("c | (a & c) -> b").variables(), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Formula, Evaluate) {
  const Formula f = Formula::parse("a -> b");
  const bool tf[] = {true, false};
  const bool ft[] = {false, true};
  EXPECT_FALSE(f.evaluate(tf));
  EXPECT_TRUE(f.evaluate(ft));
}

TEST(Formula, ParseErrorsCarryColumn) {
  try {
    (void)Formula::parse("a & (b | ");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos);
  }
  EXPECT_THROW((void)Formula::parse("a b"), InputError);
  EXPECT_THROW((void)Formula::parse(""), InputError);
  EXPECT_THROW((void)Formula::parse("a $ b"), InputError);
}

TEST(Tautology, Examples) {
  EXPECT_TRUE(tautology_check(Formula::parse("a | ~a")));
  EXPECT_TRUE(tautology_check(Formula::parse("((a -> b) & (c -> d)) -> ((a & c) -> (b & d))")));
  EXPECT_FALSE(tautology_check(Formula::parse("a -> b")));
  EXPECT_FALSE(tautology_check(Formula::parse("(a -> b) -> (b -> a)")));
}

TEST(Tautology, ClassicalPrinciplesHold) {
  const auto all = classical_principles();
  ASSERT_EQ(all.size(), 6u);
  for (const auto& p : all) EXPECT_TRUE(tautology_check(Formula::parse(p.text))) << p.name;
}

TEST(Tautology, RefusesTooManyVariables) {
  EXPECT_THROW((void)tautology_check(Formula::parse("a | b | c | d | e | f | g")), InputError);
}

TEST(Tautology, AgreesWithBruteForce) {
  // Independent enumeration through evaluate().
  const char* samples[] = {"(a & b) -> a", "a -> (a & b)", "~(a & b) -> (~a | ~b)", "(a | b) & ~a -> b", "a & ~a"};
  for (const char* text : samples) {
    const Formula f = Formula::parse(text);
    const std::size_t n = f.variables().size();
    bool all = true;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      bool values[8];
      for (std::size_t i = 0; i < n; ++i) values[i] = (mask >> i) & 1U;
      all = all && f.evaluate(std::span<const bool>(values, n));
    }
    EXPECT_EQ(tautology_check(f), all) << text;
  }
}
