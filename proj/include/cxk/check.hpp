#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cxk/proof.hpp"

namespace cxk {

enum class CheckFailure {
  none,
  rule_not_in_calculus,
  arity_mismatch,
  schema_mismatch,
  principal_missing,
  language_mismatch,
  discharge_violation,
};

inline std::string_view to_string(CheckFailure f) {
  switch (f) {
    case CheckFailure::none: return "ok";
    case CheckFailure::rule_not_in_calculus: return "rule not in calculus";
    case CheckFailure::arity_mismatch: return "arity mismatch";
    case CheckFailure::schema_mismatch: return "schema mismatch";
    case CheckFailure::principal_missing: return "principal missing";
    case CheckFailure::language_mismatch: return "formula outside the calculus language";
    case CheckFailure::discharge_violation: return "discharge-scope violation";
  }
  return "?";
}

/// Result of checking a proof or derivation. On failure, `path` lists the
/// premise indices from the root to the first offending node (pre-order).
struct CheckReport {
  CheckFailure failure = CheckFailure::none;
  std::vector<std::size_t> path;
  std::string rule;
  std::string reason;

  bool ok() const { return failure == CheckFailure::none; }
  explicit operator bool() const { return ok(); }

  std::string describe() const {
    if (ok()) return "valid";
    std::string p = "/";
    for (std::size_t i = 0; i < path.size(); ++i) p += (i ? "." : "") + std::to_string(path[i]);
    return std::string(to_string(failure)) + " at " + p + " (" + rule + "): " + reason;
  }
};

inline std::string path_to_string(const std::vector<std::size_t>& path) {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "." : "") + std::to_string(path[i]);
  return s;
}

namespace detail {

struct PremiseShape {
  Context added;  // formulas the schema places in the premise context
  Formula succedent;
};

class ProofChecker {
 public:
  explicit ProofChecker(CalculusId calc) : calc_(calc) {}

  CheckReport run(const SequentProof& p) {
    std::vector<std::size_t> path;
    visit(p, path);
    return report_;
  }

 private:
  bool visit(const SequentProof& p, std::vector<std::size_t>& path) {
    if (!check_node(p, path)) return false;
    for (std::size_t i = 0; i < p.premises().size(); ++i) {
      path.push_back(i);
      bool ok = visit(p.premises()[i], path);
      path.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  bool fail(const SequentProof& p, const std::vector<std::size_t>& path, CheckFailure f,
            std::string reason) {
    report_.failure = f;
    report_.path = path;
    report_.rule = std::string(to_string(p.rule()));
    report_.reason = std::move(reason);
    return false;
  }

  bool in_language(const Formula& f) const {
    return is_connexive(calc_) ? !has_primed(f) : !has_negation(f);
  }

  bool check_node(const SequentProof& p, const std::vector<std::size_t>& path) {
    const Sequent& s = p.conclusion();
    for (const auto& f : s.context)
      if (!in_language(f)) return fail(p, path, CheckFailure::language_mismatch, print(f));
    if (!in_language(s.succedent))
      return fail(p, path, CheckFailure::language_mismatch, print(s.succedent));
    if (!admits(calc_, p.rule()))
      return fail(p, path, CheckFailure::rule_not_in_calculus,
                  std::string(to_string(p.rule())) + " is not a rule of " +
                      std::string(to_string(calc_)));
    if (static_cast<int>(p.premises().size()) != arity(p.rule()))
      return fail(p, path, CheckFailure::arity_mismatch,
                  "expected " + std::to_string(arity(p.rule())) + " premises, got " +
                      std::to_string(p.premises().size()));
    return check_schema(p, path);
  }

  // Γ is shared between conclusion and every premise. For left rules the
  // principal formula must be in the conclusion and Γ may or may not contain it.
  bool shared(const SequentProof& p, const std::vector<std::size_t>& path,
              const std::optional<Formula>& left_principal,
              const std::vector<PremiseShape>& shapes) {
    const Context& c = p.conclusion().context;
    std::vector<Context> gammas;
    if (left_principal) {
      if (!c.contains(*left_principal))
        return fail(p, path, CheckFailure::schema_mismatch,
                    "principal " + print(*left_principal) + " not in conclusion context");
      gammas = {c.without(*left_principal), c};
    } else {
      gammas = {c};
    }
    std::string first_mismatch;
    for (const auto& g : gammas) {
      bool all = true;
      for (std::size_t i = 0; i < shapes.size() && all; ++i) {
        Sequent want{g.unite(shapes[i].added), shapes[i].succedent};
        const Sequent& got = p.premises()[i].conclusion();
        if (!(want == got)) {
          all = false;
          if (first_mismatch.empty())
            first_mismatch = "premise " + std::to_string(i) + ": expected " + print(want) +
                             ", got " + print(got);
        }
      }
      if (all) return true;
    }
    return fail(p, path, CheckFailure::schema_mismatch, first_mismatch);
  }

  // conclusion context = extra ∪ Γ₁ ∪ Δ with premise 1 = Γ₁ ⇒ left_suc and
  // premise 2 = discharged, Δ ⇒ γ.
  bool split(const SequentProof& p, const std::vector<std::size_t>& path,
             const std::optional<Formula>& principal, const Formula& left_suc,
             const Formula& discharged) {
    const Sequent& s = p.conclusion();
    const Sequent& a = p.premises()[0].conclusion();
    const Sequent& b = p.premises()[1].conclusion();
    if (!(a.succedent == left_suc))
      return fail(p, path, CheckFailure::schema_mismatch,
                  "premise 0 succedent: expected " + print(left_suc) + ", got " +
                      print(a.succedent));
    if (!(b.succedent == s.succedent))
      return fail(p, path, CheckFailure::schema_mismatch,
                  "premise 1 succedent: expected " + print(s.succedent) + ", got " +
                      print(b.succedent));
    if (!b.context.contains(discharged))
      return fail(p, path, CheckFailure::schema_mismatch,
                  "premise 1 context lacks " + print(discharged));
    Context base = principal ? a.context.with(*principal) : a.context;
    Context c1 = base.unite(b.context.without(discharged));
    Context c2 = base.unite(b.context);
    if (s.context == c1 || s.context == c2) return true;
    return fail(p, path, CheckFailure::schema_mismatch,
                "conclusion context: expected " + print(Sequent{c1, s.succedent}) + ", got " +
                    print(s));
  }

  bool check_schema(const SequentProof& p, const std::vector<std::size_t>& path) {
    const Sequent& s = p.conclusion();
    const Formula& g = s.succedent;
    const Formula* pf = p.principal_formula();
    auto mismatch = [&](const std::string& why) {
      return fail(p, path, CheckFailure::schema_mismatch, why);
    };
    auto need = [&](const char* what) {
      return fail(p, path, CheckFailure::principal_missing, std::string("needs ") + what);
    };
    // Right rules: principal is optional but must equal the succedent if given.
    auto right = [&](bool shape_ok, const char* shape) {
      if (pf && !(*pf == g)) return mismatch("principal must be the succedent");
      if (!shape_ok) return mismatch(std::string("succedent must have the form ") + shape);
      return true;
    };
    auto left = [&](bool (Formula::*pred)() const, const char* shape) -> bool {
      if (!pf) return need(shape);
      if (!((*pf).*pred)()) return mismatch(std::string("principal must have the form ") + shape);
      return true;
    };

    switch (p.rule()) {
      case RuleId::init1:
        if (!g.is_var()) return mismatch("succedent must be an atom");
        if (pf && !(*pf == g)) return mismatch("principal must be the succedent atom");
        if (!s.context.contains(g)) return mismatch(print(g) + " not in context");
        return true;
      case RuleId::init2:
        if (!g.is_neg_atom()) return mismatch("succedent must be a negated atom");
        if (pf && !(*pf == g)) return mismatch("principal must be the succedent");
        if (!s.context.contains(g)) return mismatch(print(g) + " not in context");
        return true;
      case RuleId::cut:
        if (!pf) return need("the cut formula");
        return split(p, path, std::nullopt, *pf, *pf);
      case RuleId::imp_left:
        if (!left(&Formula::is_imp, "a -> b")) return false;
        return split(p, path, *pf, pf->lhs(), pf->rhs());
      case RuleId::neg_imp_left:
        if (!pf) return need("~(a -> b)");
        if (!pf->is_neg_of(Kind::Imp)) return mismatch("principal must have the form ~(a -> b)");
        return split(p, path, *pf, pf->arg().lhs(), Formula::neg(pf->arg().rhs()));
      case RuleId::imp_right:
        if (!right(g.is_imp(), "a -> b")) return false;
        return shared(p, path, std::nullopt, {{Context{g.lhs()}, g.rhs()}});
      case RuleId::and_left:
        if (!left(&Formula::is_and, "a & b")) return false;
        return shared(p, path, *pf, {{Context{pf->lhs(), pf->rhs()}, g}});
      case RuleId::and_right:
        if (!right(g.is_and(), "a & b")) return false;
        return shared(p, path, std::nullopt, {{{}, g.lhs()}, {{}, g.rhs()}});
      case RuleId::or_left:
        if (!left(&Formula::is_or, "a | b")) return false;
        return shared(p, path, *pf, {{Context{pf->lhs()}, g}, {Context{pf->rhs()}, g}});
      case RuleId::or_right1:
        if (!right(g.is_or(), "a | b")) return false;
        return shared(p, path, std::nullopt, {{{}, g.lhs()}});
      case RuleId::or_right2:
        if (!right(g.is_or(), "a | b")) return false;
        return shared(p, path, std::nullopt, {{{}, g.rhs()}});
      case RuleId::neg_left:
        if (!left(&Formula::is_double_neg, "~~a")) return false;
        return shared(p, path, *pf, {{Context{pf->arg().arg()}, g}});
      case RuleId::neg_right:
        if (!right(g.is_double_neg(), "~~a")) return false;
        return shared(p, path, std::nullopt, {{{}, g.arg().arg()}});
      case RuleId::neg_imp_right:
        if (!right(g.is_neg_of(Kind::Imp), "~(a -> b)")) return false;
        return shared(p, path, std::nullopt,
                      {{Context{g.arg().lhs()}, Formula::neg(g.arg().rhs())}});
      case RuleId::neg_and_left: {
        if (!pf) return need("~(a & b)");
        if (!pf->is_neg_of(Kind::And)) return mismatch("principal must have the form ~(a & b)");
        Formula a = pf->arg();
        return shared(p, path, *pf,
                      {{Context{Formula::neg(a.lhs())}, g}, {Context{Formula::neg(a.rhs())}, g}});
      }
      case RuleId::neg_and_right1:
        if (!right(g.is_neg_of(Kind::And), "~(a & b)")) return false;
        return shared(p, path, std::nullopt, {{{}, Formula::neg(g.arg().lhs())}});
      case RuleId::neg_and_right2:
        if (!right(g.is_neg_of(Kind::And), "~(a & b)")) return false;
        return shared(p, path, std::nullopt, {{{}, Formula::neg(g.arg().rhs())}});
      case RuleId::neg_or_left: {
        if (!pf) return need("~(a | b)");
        if (!pf->is_neg_of(Kind::Or)) return mismatch("principal must have the form ~(a | b)");
        Formula a = pf->arg();
        return shared(p, path, *pf,
                      {{Context{Formula::neg(a.lhs()), Formula::neg(a.rhs())}, g}});
      }
      case RuleId::neg_or_right:
        if (!right(g.is_neg_of(Kind::Or), "~(a | b)")) return false;
        return shared(p, path, std::nullopt,
                      {{{}, Formula::neg(g.arg().lhs())}, {{}, Formula::neg(g.arg().rhs())}});
      case RuleId::ex_middle:
        if (!pf) return need("the excluded-middle formula");
        return shared(p, path, std::nullopt,
                      {{Context{Formula::neg(*pf)}, g}, {Context{*pf}, g}});
      case RuleId::peirce:
        if (!pf) return need("the witness a -> b");
        if (!pf->is_imp() || !(pf->lhs() == g))
          return mismatch("witness must be an implication whose antecedent is the succedent");
        return shared(p, path, std::nullopt, {{Context{*pf}, g}});
      case RuleId::g_ex_middle: {
        const auto* pr = p.principal_pair();
        if (!pr) return need("the pair [a, b]");
        return shared(p, path, std::nullopt,
                      {{Context{Formula::imp(pr->first, pr->second)}, g},
                       {Context{pr->first}, g}});
      }
    }
    return mismatch("unknown rule");
  }

  CalculusId calc_;
  CheckReport report_;
};

}  // namespace detail

/// Checks that every node instantiates a rule schema of `calc` under set
/// semantics for contexts. The report pinpoints the first failing node.
inline CheckReport check_proof(CalculusId calc, const SequentProof& p) {
  return detail::ProofChecker(calc).run(p);
}

}  // namespace cxk
