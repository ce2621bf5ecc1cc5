#include <gtest/gtest.h>

#include "generators.hpp"

using namespace cxk;
using namespace cxk::literals;
using namespace cxk::testing;

namespace {

Sequent seq(const char* text) { return parse_sequent(text, ParseOptions{true}); }

SequentProof init(const char* s, const char* atom) {
  return SequentProof(seq(s), RuleId::init1, parse_formula(atom));
}

}  // namespace

TEST(Sequent, ParseAndPrint) {
  Sequent s = parse_sequent("q, p, q => p & q");
  EXPECT_EQ(s.context.size(), 2u);
  EXPECT_EQ(print(s), "p, q => p & q");
  EXPECT_EQ(parse_sequent("p -> p").context.size(), 0u);
  EXPECT_EQ(parse_sequent(" => p").succedent, "p"_f);
  EXPECT_THROW(parse_sequent("p, => q"), ParseError);
  EXPECT_THROW(parse_sequent("p =>"), ParseError);
}

TEST(Sequent, ContextIsASet) {
  Context c{"p"_f, "q"_f, "p"_f};
  EXPECT_EQ(c.size(), 2u);
  EXPECT_TRUE(c.with("p"_f).size() == 2);
  EXPECT_TRUE(Context{"p"_f}.subset_of(c));
  EXPECT_EQ(c.without("p"_f).size(), 1u);
}

TEST(RuleTable, Membership) {
  using C = CalculusId;
  using R = RuleId;
  EXPECT_FALSE(admits(C::LJP, R::neg_left));
  EXPECT_FALSE(admits(C::LJP, R::peirce));
  EXPECT_TRUE(admits(C::LJP_PEIRCE, R::peirce));
  EXPECT_TRUE(admits(C::SC, R::init2));
  EXPECT_FALSE(admits(C::SC, R::ex_middle));
  EXPECT_TRUE(admits(C::SC3, R::ex_middle));
  EXPECT_FALSE(admits(C::SC3, R::peirce));
  EXPECT_TRUE(admits(C::SMC, R::peirce));
  EXPECT_FALSE(admits(C::SMC, R::ex_middle));
  EXPECT_TRUE(admits(C::SCN, R::peirce) && admits(C::SCN, R::ex_middle));
  EXPECT_TRUE(admits(C::SMC_STAR, R::g_ex_middle));
  EXPECT_FALSE(admits(C::SMC_STAR, R::peirce));
  EXPECT_TRUE(admits(C::SCN_STAR, R::ex_middle));
  for (auto c : kAllCalculi) EXPECT_TRUE(admits(c, R::cut));
}

TEST(RuleTable, ConnexiveCalculiExtendSc) {
  for (auto c : kConnexiveCalculi)
    for (auto r : kAllRules)
      if (admits(CalculusId::SC, r)) EXPECT_TRUE(admits(c, r)) << to_string(c) << to_string(r);
}

TEST(RuleTable, NamesRoundTrip) {
  for (auto c : kAllCalculi) EXPECT_EQ(calculus_from_string(to_string(c)), c);
  for (auto r : kAllRules) EXPECT_EQ(rule_from_string(to_string(r)), r);
  EXPECT_FALSE(calculus_from_string("lk").has_value());
}

TEST(Checker, AcceptsSmallProof) {
  // p & q => q & p
  SequentProof left1(seq("p & q => q"), RuleId::and_left, "p & q"_f, {init("p, q, p & q => q", "q")});
  SequentProof left2(seq("p & q => p"), RuleId::and_left, "p & q"_f, {init("p, q, p & q => p", "p")});
  SequentProof root(seq("p & q => q & p"), RuleId::and_right, {}, {left1, left2});
  EXPECT_TRUE(check_proof(CalculusId::LJP, root).ok());
  EXPECT_TRUE(check_proof(CalculusId::SC, root).ok());
}

TEST(Checker, ReportsFailures) {
  SequentProof bad_axiom = init("q => p", "p");
  auto r = check_proof(CalculusId::SC, bad_axiom);
  EXPECT_EQ(r.failure, CheckFailure::schema_mismatch);

  SequentProof em(seq("=> p | ~p"), RuleId::ex_middle, "p"_f,
                  {init("p => p | ~p", "p"), init("p => p | ~p", "p")});
  EXPECT_EQ(check_proof(CalculusId::SC, em).failure, CheckFailure::rule_not_in_calculus);

  SequentProof arity(seq("p => p & p"), RuleId::and_right, {}, {init("p => p", "p")});
  EXPECT_EQ(check_proof(CalculusId::SC, arity).failure, CheckFailure::arity_mismatch);

  SequentProof neg(seq("~p => ~p"), RuleId::init2, "~p"_f);
  EXPECT_TRUE(check_proof(CalculusId::SC, neg).ok());
  EXPECT_EQ(check_proof(CalculusId::LJP, neg).failure, CheckFailure::language_mismatch);

  // Failure path points at the offending premise.
  SequentProof deep(seq("p & q => q & p"), RuleId::and_right, {},
                    {init("p & q => q", "q"), init("p & q => p", "p")});
  auto d = check_proof(CalculusId::SC, deep);
  EXPECT_FALSE(d.ok());
  EXPECT_EQ(d.path, (std::vector<std::size_t>{0}));
  EXPECT_NE(d.describe().find("/0"), std::string::npos);
}

TEST(Checker, CutNeedsFormula) {
  SequentProof cut(seq("p => p"), RuleId::cut, {}, {init("p => p", "p"), init("p => p", "p")});
  EXPECT_EQ(check_proof(CalculusId::SC, cut).failure, CheckFailure::principal_missing);
}

TEST(Json, ProofRoundTrip) {
  SequentProof p = identity_proof("~(p -> q) | (r & ~s)"_f, Context{"t"_f});
  auto j = to_json(p);
  SequentProof back = proof_from_json(j);
  EXPECT_EQ(to_json(back), j);
  EXPECT_TRUE(check_proof(CalculusId::SC, back).ok());
  EXPECT_THROW(proof_from_json(nlohmann::json{{"rule", "bogus"}}), FormatError);
  EXPECT_THROW(proof_from_json(nlohmann::json::array()), FormatError);
}

TEST(Identity, ValidInEveryCalculusProperty) {
  Rng rng(21);
  FormulaGen g;
  for (int i = 0; i < 300; ++i) {
    Formula a = g.upto(rng, 12);
    Context gamma{g.upto(rng, 3)};
    SequentProof p = identity_proof(a, gamma);
    ASSERT_EQ(p.conclusion().succedent, a);
    ASSERT_TRUE(p.conclusion().context.contains(a));
    ASSERT_TRUE(is_cut_free(p));
    for (auto c : kConnexiveCalculi) ASSERT_TRUE(check_proof(c, p).ok()) << print(a);
  }
  FormulaGen pos;
  pos.negation = false;
  for (int i = 0; i < 100; ++i)
    ASSERT_TRUE(check_proof(CalculusId::LJP, identity_proof(pos.upto(rng, 12), {})).ok());
}

TEST(Weakening, PreservesValidityProperty) {
  Rng rng(22);
  FormulaGen g;
  for (int i = 0; i < 200; ++i) {
    SequentProof p = identity_proof(g.upto(rng, 8), {});
    Context extra{g.upto(rng, 5), g.upto(rng, 5)};
    for (auto c : {CalculusId::SC, CalculusId::SCN_STAR}) {
      SequentProof w = weaken_proof(c, p, extra);
      ASSERT_TRUE(check_proof(c, w).ok());
      ASSERT_TRUE(extra.subset_of(w.conclusion().context));
      ASSERT_EQ(node_count(w), node_count(p));
      ASSERT_EQ(height(w), height(p));
    }
  }
}

TEST(Weakening, RejectsCut) {
  SequentProof cut(seq("p => p"), RuleId::cut, "p"_f, {init("p => p", "p"), init("p => p", "p")});
  EXPECT_TRUE(check_proof(CalculusId::SC, cut).ok());
  EXPECT_THROW(weaken_proof(CalculusId::SC, cut, Context{"q"_f}), ContractError);
  EXPECT_TRUE(check_proof(CalculusId::SC, weaken_any(cut, Context{"q"_f})).ok());
}
