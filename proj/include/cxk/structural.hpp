#pragma once

#include <stdexcept>
#include <string>

#include "cxk/check.hpp"

namespace cxk {

/// Raised when an operation's documented precondition does not hold.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cut-free proof of α, Γ ⇒ α by structural induction on α.
///
/// Atoms close with init1 and negated atoms with init2; every compound case
/// unfolds one connective on each side and recurses on strictly smaller
/// formulas. Only rules of sC are used, so the result is valid in every
/// calculus whose language contains α.
inline SequentProof identity_proof(const Formula& a, const Context& gamma) {
  const Context c = gamma.with(a);
  auto seq = [](const Context& ctx, const Formula& f) { return Sequent{ctx, f}; };

  switch (a.kind()) {
    case Kind::Var: return SequentProof(seq(c, a), RuleId::init1, a);
    case Kind::And: {
      // α∧β, Γ ⇒ α∧β from α,β,α∧β,Γ ⇒ α and ... ⇒ β
      Context cc = c.with(a.lhs()).with(a.rhs());
      auto half = [&](const Formula& x, const Formula& other) {
        return SequentProof(seq(c, x), RuleId::and_left, a,
                            {identity_proof(x, cc.without(x).with(other))});
      };
      return SequentProof(seq(c, a), RuleId::and_right, a,
                          {half(a.lhs(), a.rhs()), half(a.rhs(), a.lhs())});
    }
    case Kind::Or: {
      auto branch = [&](const Formula& x, RuleId r) {
        Context cx = c.with(x);
        return SequentProof(seq(cx, a), r, a, {identity_proof(x, cx)});
      };
      return SequentProof(seq(c, a), RuleId::or_left, a,
                          {branch(a.lhs(), RuleId::or_right1), branch(a.rhs(), RuleId::or_right2)});
    }
    case Kind::Imp: {
      Context ca = c.with(a.lhs());
      SequentProof left = identity_proof(a.lhs(), ca);
      SequentProof right = identity_proof(a.rhs(), ca);
      SequentProof mp(seq(ca, a.rhs()), RuleId::imp_left, a, {left, right});
      return SequentProof(seq(c, a), RuleId::imp_right, a, {mp});
    }
    case Kind::Neg: break;
  }

  const Formula b = a.arg();
  switch (b.kind()) {
    case Kind::Var: return SequentProof(seq(c, a), RuleId::init2, a);
    case Kind::Neg: {
      // ∼∼δ: peel on the left, then rebuild on the right.
      const Formula d = b.arg();
      Context cd = c.with(d);
      SequentProof inner(seq(c, d), RuleId::neg_left, a, {identity_proof(d, cd)});
      return SequentProof(seq(c, a), RuleId::neg_right, a, {inner});
    }
    case Kind::And: {
      auto branch = [&](const Formula& x, RuleId r) {
        Formula nx = Formula::neg(x);
        Context cx = c.with(nx);
        return SequentProof(seq(cx, a), r, a, {identity_proof(nx, cx)});
      };
      return SequentProof(seq(c, a), RuleId::neg_and_left, a,
                          {branch(b.lhs(), RuleId::neg_and_right1),
                           branch(b.rhs(), RuleId::neg_and_right2)});
    }
    case Kind::Or: {
      Formula nl = Formula::neg(b.lhs()), nr = Formula::neg(b.rhs());
      Context cc = c.with(nl).with(nr);
      auto half = [&](const Formula& x) {
        return SequentProof(seq(c, x), RuleId::neg_or_left, a, {identity_proof(x, cc)});
      };
      return SequentProof(seq(c, a), RuleId::neg_or_right, a, {half(nl), half(nr)});
    }
    case Kind::Imp: {
      Formula nb = Formula::neg(b.rhs());
      Context ca = c.with(b.lhs());
      SequentProof left = identity_proof(b.lhs(), ca);
      SequentProof right = identity_proof(nb, ca);
      SequentProof mp(seq(ca, nb), RuleId::neg_imp_left, a, {left, right});
      return SequentProof(seq(c, a), RuleId::neg_imp_right, a, {mp});
    }
  }
  throw std::logic_error("identity_proof: unreachable");
}

namespace detail {

inline SequentProof weaken_nodes(const SequentProof& p, const Context& extra) {
  std::vector<SequentProof> premises;
  premises.reserve(p.premises().size());
  for (const auto& q : p.premises()) premises.push_back(weaken_nodes(q, extra));
  const Sequent& s = p.conclusion();
  return SequentProof(Sequent{s.context.unite(extra), s.succedent}, p.rule(), p.principal(),
                      std::move(premises));
}

}  // namespace detail

/// Adds `extra` to the context of every node. Valid for any checker-valid
/// proof, with or without cuts; weaken_proof is the cut-free entry point.
inline SequentProof weaken_any(const SequentProof& p, const Context& extra) {
  if (extra.subset_of(p.conclusion().context)) {
    // Nothing new at the root can still be new higher up; only skip when
    // every node already contains `extra`.
    bool all = true;
    std::vector<const SequentProof*> stack{&p};
    while (!stack.empty() && all) {
      const SequentProof* q = stack.back();
      stack.pop_back();
      if (!extra.subset_of(q->conclusion().context)) all = false;
      for (const auto& r : q->premises()) stack.push_back(&r);
    }
    if (all) return p;
  }
  return detail::weaken_nodes(p, extra);
}

/// Constructive weakening: a cut-free proof of extra ∪ Γ ⇒ γ with the same
/// rule skeleton as `p`.
inline SequentProof weaken_proof(CalculusId calc, const SequentProof& p, const Context& extra) {
  if (!is_cut_free(p)) throw ContractError("weaken_proof: input contains cut");
  if (auto r = check_proof(calc, p); !r) throw ContractError("weaken_proof: " + r.describe());
  return weaken_any(p, extra);
}

/// Rewrites every (Peirce) node into (g-ex-middle) with α := the succedent
/// and the second premise closed by identity_proof. Turns sMC/sCN proofs
/// into sMC*/sCN* proofs without introducing cuts.
inline SequentProof peirce_to_gem(const SequentProof& p) {
  std::vector<SequentProof> premises;
  premises.reserve(p.premises().size());
  for (const auto& q : p.premises()) premises.push_back(peirce_to_gem(q));
  if (p.rule() != RuleId::peirce)
    return SequentProof(p.conclusion(), p.rule(), p.principal(), std::move(premises));
  const Formula witness = *p.principal_formula();
  const Sequent& s = p.conclusion();
  premises.push_back(identity_proof(s.succedent, s.context));
  return SequentProof(s, RuleId::g_ex_middle, std::make_pair(witness.lhs(), witness.rhs()),
                      std::move(premises));
}

}  // namespace cxk
