#include <gtest/gtest.h>

#include "generators.hpp"

using namespace cxk;
using namespace cxk::literals;
using namespace cxk::testing;

namespace {
Formula P(const char* s) { return parse_formula(s, ParseOptions{true}); }
}  // namespace

TEST(Embedding, Clauses) {
  EXPECT_EQ(translate_f("p"_f), P("p"));
  EXPECT_EQ(translate_f("~p"_f), P("p'"));
  EXPECT_EQ(translate_f("~~p"_f), P("p"));
  EXPECT_EQ(translate_f("~(p & q)"_f), P("p' | q'"));
  EXPECT_EQ(translate_f("~(p | q)"_f), P("p' & q'"));
  EXPECT_EQ(translate_f("~(p -> q)"_f), P("p -> q'"));
  EXPECT_EQ(translate_f("~(~p -> ~~q)"_f), P("p' -> q'"));
  EXPECT_EQ(translate_f("(p -> q) -> ~(p -> ~q)"_f), P("(p -> q) -> p -> q"));
}

TEST(Embedding, RejectsPrimedInput) {
  EXPECT_THROW(translate_f(P("p'")), ContractError);
}

TEST(Embedding, SequentTranslation) {
  Sequent s = translate_f(parse_sequent("~p, ~(q & r) => ~~p"));
  EXPECT_EQ(s, parse_sequent("p', q' | r' => p", ParseOptions{true}));
}

TEST(Embedding, NegationFreeAndBoundedProperty) {
  Rng rng(71);
  FormulaGen g;
  FormulaGen pos;
  pos.negation = false;
  for (int i = 0; i < 1000; ++i) {
    Formula f = g.upto(rng, 20);
    Formula t = translate_f(f);
    ASSERT_FALSE(has_negation(t)) << print(f);
    ASSERT_LE(t.size(), f.size()) << print(f);
    Formula q = pos.upto(rng, 20);
    ASSERT_EQ(translate_f(q), q);
  }
}

TEST(Embedding, Examples) {
  for (const char* t : {"((p -> q) -> p) -> p", "(p -> q) -> ~(p -> ~q)", "~p | p", "p, ~p => q"}) {
    auto r = embed_check(parse_sequent(t));
    EXPECT_TRUE(r.agree()) << t << " " << to_string(r.smc) << " " << to_string(r.ljp_peirce);
  }
  EXPECT_EQ(embed_check(parse_sequent("~p | p")).smc, Verdict::Unprovable);
}

TEST(Embedding, AgreementProperty) {
  Rng rng(72);
  FormulaGen g;
  for (int i = 0; i < 100; ++i) {
    Sequent s = random_sequent(rng, g, 6, 2);
    auto r = embed_check(s);
    ASSERT_TRUE(r.agree()) << print(s) << " / " << print(r.target);
  }
}
