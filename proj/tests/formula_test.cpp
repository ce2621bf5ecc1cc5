#include <gtest/gtest.h>

#include "generators.hpp"

using namespace cxk;
using namespace cxk::literals;
using namespace cxk::testing;

TEST(Formula, HashConsing) {
  Formula a = Formula::imp(Formula::var("p"), Formula::neg(Formula::var("q")));
  Formula b = Formula::imp(Formula::var("p"), Formula::neg(Formula::var("q")));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.id(), b.id());
  EXPECT_EQ(a.size(), 4u);
  EXPECT_FALSE(Formula::var("p") == Formula::var("p", true));
}

TEST(Formula, ParsePrecedence) {
  EXPECT_EQ(parse_formula("p -> q -> r"),
            Formula::imp("p"_f, Formula::imp("q"_f, "r"_f)));
  EXPECT_EQ(parse_formula("p | q & r"), Formula::disj("p"_f, Formula::conj("q"_f, "r"_f)));
  EXPECT_EQ(parse_formula("~p & q"), Formula::conj(Formula::neg("p"_f), "q"_f));
  EXPECT_EQ(parse_formula("~~p"), Formula::neg(Formula::neg("p"_f)));
  EXPECT_EQ(parse_formula("(p -> q) -> p"), Formula::imp(Formula::imp("p"_f, "q"_f), "p"_f));
  EXPECT_EQ(parse_formula("p & q & r"), Formula::conj(Formula::conj("p"_f, "q"_f), "r"_f));
}

TEST(Formula, PrintMinimalParens) {
  EXPECT_EQ(print(parse_formula("(p -> q) -> (p -> ~q)")), "(p -> q) -> p -> ~q");
  EXPECT_EQ(print(parse_formula("~(p -> ~q)")), "~(p -> ~q)");
  EXPECT_EQ(print(parse_formula("(p | q) & r")), "(p | q) & r");
  EXPECT_EQ(print(parse_formula("p | (q | r)")), "p | (q | r)");
}

TEST(Formula, UnicodeOutputOnly) {
  EXPECT_EQ(print(parse_formula("~(p & q) -> p | q"), true), "∼(p ∧ q) → p ∨ q");
  EXPECT_THROW(parse_formula("∼p"), ParseError);
}

TEST(Formula, Primed) {
  EXPECT_THROW(parse_formula("p'"), ParseError);
  Formula f = parse_formula("p' -> q", ParseOptions{true});
  EXPECT_TRUE(f.lhs().primed());
  EXPECT_EQ(print(f), "p' -> q");
  EXPECT_TRUE(has_primed(f));
  EXPECT_FALSE(has_negation(f));
}

TEST(Formula, ParseErrorsReportOffset) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  for (auto c : std::vector<Case>{{"p ->", 4}, {"p q", 2}, {"(p", 2}, {"", 0}, {"p & | q", 4}}) {
    try {
      parse_formula(c.text);
      ADD_FAILURE() << "accepted \"" << c.text << "\"";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.offset(), c.offset) << c.text;
      EXPECT_FALSE(e.expected().empty());
    }
  }
}

TEST(Formula, RoundTripProperty) {
  Rng rng(11);
  FormulaGen g;
  for (int i = 0; i < 2000; ++i) {
    Formula f = g.upto(rng, 40);
    ASSERT_EQ(parse_formula(print(f)), f) << print(f);
  }
}

TEST(Formula, SizeProperty) {
  Rng rng(12);
  FormulaGen g;
  for (std::size_t n = 1; n <= 30; ++n) EXPECT_EQ(g.exact(rng, n).size(), n);
}

TEST(Formula, AllFormulasCounts) {
  // 2 atoms: sizes 1..4 give 2, 2, 14, 38.
  std::vector<std::string> atoms{"p", "q"};
  EXPECT_EQ(all_formulas(atoms, 1).size(), 2u);
  EXPECT_EQ(all_formulas(atoms, 2).size(), 2u);
  EXPECT_EQ(all_formulas(atoms, 3).size(), 14u);
  EXPECT_EQ(all_formulas(atoms, 4).size(), 38u);
}

TEST(Closure, ContainsSubformulasAndNegatedComponents) {
  auto u = closure(parse_sequent("~(p -> q) => r & s"));
  for (const char* f : {"~(p -> q)", "p -> q", "p", "q", "~q", "r & s", "r", "s"})
    EXPECT_TRUE(u.contains(parse_formula(f))) << f;
}

TEST(Closure, ClosedUnderComponentsProperty) {
  Rng rng(13);
  FormulaGen g;
  for (int i = 0; i < 300; ++i) {
    Sequent s = random_sequent(rng, g, 8, 2);
    auto u = closure(s);
    ASSERT_TRUE(u.contains(s.succedent));
    for (const auto& f : s.context) ASSERT_TRUE(u.contains(f));
    for (const auto& f : u.members()) {
      if (f.is_binary()) {
        ASSERT_TRUE(u.contains(f.lhs()) && u.contains(f.rhs())) << print(f);
      } else if (f.is_neg()) {
        Formula a = f.arg();
        ASSERT_TRUE(u.contains(a));
        if (a.is_neg()) ASSERT_TRUE(u.contains(a.arg()));
        if (a.is_imp()) ASSERT_TRUE(u.contains(a.lhs()) && u.contains(Formula::neg(a.rhs())));
        if (a.is_and() || a.is_or())
          ASSERT_TRUE(u.contains(Formula::neg(a.lhs())) && u.contains(Formula::neg(a.rhs())));
      }
    }
    // Linear bound: ∼ᵏ of a subformula with k ≤ 3.
    std::size_t seed = s.succedent.size();
    for (const auto& f : s.context) seed += f.size();
    ASSERT_LE(u.size(), 4 * seed);
  }
}
