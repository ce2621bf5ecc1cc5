#include <gtest/gtest.h>

#include "generators.hpp"

using namespace cxk;
using namespace cxk::literals;
using namespace cxk::testing;

namespace {

using R = NdRuleId;
Derivation A(const char* f, std::optional<int> l = std::nullopt) {
  return Derivation::assume(parse_formula(f), l);
}
Derivation D(R r, const char* f, std::vector<Derivation> ps, std::optional<int> dis = std::nullopt) {
  return Derivation::make(r, parse_formula(f), std::move(ps), dis);
}

}  // namespace

TEST(NatDed, RuleMetadata) {
  EXPECT_EQ(arity(R::or_E), 3);
  EXPECT_EQ(arity(R::neg_and_E), 3);
  EXPECT_EQ(arity(R::EM), 2);
  EXPECT_TRUE(is_intro(R::neg_imp_I));
  EXPECT_TRUE(is_elim(R::neg_or_E2));
  EXPECT_FALSE(admits(NdSystemId::NC, R::EM));
  EXPECT_TRUE(admits(NdSystemId::NC3, R::EM));
  EXPECT_TRUE(admits(NdSystemId::NMC, R::GEM));
  EXPECT_FALSE(admits(NdSystemId::NMC, R::EM));
  EXPECT_EQ(paired_calculus(NdSystemId::NMC), CalculusId::SMC_STAR);
  for (auto s : kAllNdSystems) EXPECT_EQ(nd_system_from_string(to_string(s)), s);
  for (auto r : kAllNdRules) EXPECT_EQ(nd_rule_from_string(to_string(r)), r);
}

TEST(NatDed, BoethiusDerivation) {
  // [p -> q]1 [p]2 ... derives ~(p -> ~q) from p -> q.
  Derivation inner = D(R::imp_E, "q", {A("p -> q", 1), A("p", 2)});
  Derivation d = D(R::imp_I, "(p -> q) -> ~(p -> ~q)",
                   {D(R::neg_imp_I, "~(p -> ~q)", {D(R::negneg_I, "~~q", {inner})}, 2)}, 1);
  auto rep = check_derivation(NdSystemId::NC, d);
  EXPECT_TRUE(rep.ok()) << rep.describe();
  EXPECT_TRUE(open_assumptions(d).empty());
  EXPECT_TRUE(is_normal(d));
  EXPECT_EQ(node_count(d), 6u);
}

TEST(NatDed, OpenAssumptionsRespectScope) {
  // The ->I binds the leaf under it only; the unlabelled leaf stays open.
  Derivation d = D(R::and_I, "(p -> p) & p", {D(R::imp_I, "p -> p", {A("p", 1)}, 1), A("p")});
  EXPECT_TRUE(check_derivation(NdSystemId::NC, d).ok());
  EXPECT_EQ(open_assumptions(d), (std::set<Formula>{"p"_f}));
  EXPECT_EQ(open_context(d), Context{"p"_f});

  // A labelled leaf outside its binder is rejected.
  Derivation out = D(R::and_I, "(p -> p) & p", {D(R::imp_I, "p -> p", {A("p", 1)}, 1), A("p", 1)});
  auto rep = check_derivation(NdSystemId::NC, out);
  EXPECT_EQ(rep.failure, CheckFailure::discharge_violation);
  EXPECT_EQ(rep.path, (Path{1}));
}

TEST(NatDed, CheckerFailures) {
  // Discharged formula must match the binder.
  Derivation wrong = D(R::imp_I, "p -> q", {A("q", 1)}, 1);
  EXPECT_EQ(check_derivation(NdSystemId::NC, wrong).failure, CheckFailure::discharge_violation);

  Derivation schema = D(R::and_E1, "q", {A("p & q")});
  EXPECT_EQ(check_derivation(NdSystemId::NC, schema).failure, CheckFailure::schema_mismatch);

  Derivation em = Derivation::make(R::EM, "q"_f, {A("q"), A("q")}, 1, "p"_f);
  EXPECT_EQ(check_derivation(NdSystemId::NC, em).failure, CheckFailure::rule_not_in_calculus);
  EXPECT_TRUE(check_derivation(NdSystemId::NC3, em).ok());

  Derivation arity = D(R::imp_E, "q", {A("p -> q")});
  EXPECT_EQ(check_derivation(NdSystemId::NC, arity).failure, CheckFailure::arity_mismatch);

  Derivation primed = Derivation::assume(parse_formula("p'", ParseOptions{true}));
  EXPECT_EQ(check_derivation(NdSystemId::NC, primed).failure, CheckFailure::language_mismatch);
}

TEST(NatDed, VacuousDischargeAllowed) {
  Derivation d = D(R::imp_I, "q -> p", {A("p")}, 7);
  EXPECT_TRUE(check_derivation(NdSystemId::NC, d).ok());
  EXPECT_EQ(open_assumptions(d), (std::set<Formula>{"p"_f}));
}

TEST(NatDed, ExcludedMiddleHypInferred) {
  Derivation d = Derivation::make(R::EM, "~p | p"_f,
                                  {D(R::or_I1, "~p | p", {A("~p", 1)}), D(R::or_I2, "~p | p", {A("p", 1)})},
                                  1);
  ASSERT_TRUE(d.hyp().has_value());
  EXPECT_EQ(*d.hyp(), "p"_f);
  EXPECT_TRUE(check_derivation(NdSystemId::NC3, d).ok());
  EXPECT_TRUE(open_assumptions(d).empty());
}

TEST(NatDed, MaximumFormulas) {
  Derivation detour = D(R::negneg_E, "p", {D(R::negneg_I, "~~p", {A("p")})});
  auto m = maximum_formulas(detour);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].path, (Path{0}));
  EXPECT_EQ(m[0].formula, "~~p"_f);
  EXPECT_FALSE(is_normal(detour));

  // A case split feeding an elimination is also a maximum formula.
  Derivation split = D(R::and_E1, "p",
                       {D(R::or_E, "p & p", {A("q | q"), A("p & p"), A("p & p")}, 1)});
  EXPECT_EQ(maximum_formulas(split).size(), 1u);

  // Minor premises do not count.
  Derivation minor = D(R::imp_E, "q", {A("p -> q"), D(R::and_E1, "p", {A("p & r")})});
  EXPECT_TRUE(is_normal(minor));
}

TEST(NatDed, JsonRoundTripProperty) {
  Rng rng(41);
  for (auto sys : kAllNdSystems) {
    DerivationGen gen(sys);
    for (int i = 0; i < 100; ++i) {
      Derivation d = gen.generate(rng);
      auto j = to_json(d);
      Derivation back = derivation_from_json(j);
      ASSERT_EQ(to_json(back), j);
    }
  }
  EXPECT_THROW(derivation_from_json(nlohmann::json{{"rule", "assumption"}}), FormatError);
  EXPECT_THROW(derivation_from_json(nlohmann::json{{"rule", "x"}, {"formula", "p"}}), FormatError);
}

TEST(NatDed, GeneratedDerivationsAreValidProperty) {
  Rng rng(42);
  for (auto sys : kAllNdSystems) {
    for (bool plant : {false, true}) {
      DerivationGen gen(sys);
      gen.plant = plant;
      for (int i = 0; i < 200; ++i) {
        Derivation d = gen.generate(rng);
        auto rep = check_derivation(sys, d);
        ASSERT_TRUE(rep.ok()) << rep.describe() << "\n" << to_json(d).dump();
        ASSERT_LE(node_count(d), 15u);
      }
    }
  }
}

TEST(NatDed, SubstitutionProperty) {
  // Replacing an open assumption by a derivation of it keeps validity and
  // the end formula, and open assumptions become (oa(d) - {a}) ∪ oa(e).
  Rng rng(43);
  DerivationGen gen(NdSystemId::NCN);
  int done = 0;
  for (int i = 0; i < 300; ++i) {
    Derivation d = gen.generate(rng);
    auto oa = open_assumptions(d);
    if (oa.empty()) continue;
    Formula a = *oa.begin();
    Derivation e = D(R::and_E1, print(a).c_str(), {Derivation::assume(Formula::conj(a, "r"_f))});
    int next = max_label(d) + 1;
    Derivation s = substitute_open(d, a, e, next);
    auto rep = check_derivation(NdSystemId::NCN, s);
    ASSERT_TRUE(rep.ok()) << rep.describe();
    ASSERT_EQ(end_formula(s), end_formula(d));
    auto expect = oa;
    expect.erase(a);
    expect.insert(Formula::conj(a, "r"_f));
    ASSERT_EQ(open_assumptions(s), expect);
    ++done;
  }
  EXPECT_GT(done, 50);
}

TEST(NatDed, DistinctLabelsPreservesMeaningProperty) {
  Rng rng(44);
  DerivationGen gen(NdSystemId::NMC);
  for (int i = 0; i < 200; ++i) {
    Derivation d = gen.generate(rng);
    Derivation e = distinct_labels(d);
    ASSERT_TRUE(check_derivation(NdSystemId::NMC, e).ok());
    ASSERT_EQ(open_assumptions(e), open_assumptions(d));
    ASSERT_EQ(node_count(e), node_count(d));
  }
}
