#pragma once

#include "cxk/natded.hpp"
#include "cxk/prover.hpp"

namespace cxk {

namespace detail {

// Same proof with conclusion context exactly `target` (a superset).
inline SequentProof lift(const SequentProof& p, const Context& target) {
  if (p.conclusion().context == target) return p;
  return weaken_any(p, target);
}

inline SequentProof cut(const Context& ctx, const Formula& suc, const Formula& cut_formula,
                        SequentProof left, SequentProof right) {
  return SequentProof(Sequent{ctx, suc}, RuleId::cut, cut_formula,
                      {std::move(left), std::move(right)});
}

class NdToSc {
 public:
  SequentProof run(const Derivation& d) {
    const Context gamma = open_context(d);
    const Formula& f = d.formula();
    auto premise = [&](std::size_t i) { return run(d.premise(i)); };
    auto seq = [&](const Context& c, const Formula& g) { return Sequent{c, g}; };

    switch (d.rule()) {
      case NdRuleId::assumption: return identity_proof(f, {});

      case NdRuleId::imp_I:
      case NdRuleId::neg_imp_I: {
        const Formula a = d.rule() == NdRuleId::imp_I ? f.lhs() : f.arg().lhs();
        SequentProof body = lift(premise(0), gamma.with(a));
        RuleId r = d.rule() == NdRuleId::imp_I ? RuleId::imp_right : RuleId::neg_imp_right;
        return SequentProof(seq(gamma, f), r, f, {body});
      }

      case NdRuleId::and_I:
      case NdRuleId::neg_or_I: {
        RuleId r = d.rule() == NdRuleId::and_I ? RuleId::and_right : RuleId::neg_or_right;
        return SequentProof(seq(gamma, f), r, f,
                            {lift(premise(0), gamma), lift(premise(1), gamma)});
      }
      case NdRuleId::or_I1:
      case NdRuleId::or_I2:
      case NdRuleId::negneg_I:
      case NdRuleId::neg_and_I1:
      case NdRuleId::neg_and_I2: {
        RuleId r = d.rule() == NdRuleId::or_I1        ? RuleId::or_right1
                   : d.rule() == NdRuleId::or_I2      ? RuleId::or_right2
                   : d.rule() == NdRuleId::negneg_I   ? RuleId::neg_right
                   : d.rule() == NdRuleId::neg_and_I1 ? RuleId::neg_and_right1
                                                      : RuleId::neg_and_right2;
        return SequentProof(seq(gamma, f), r, f, {premise(0)});
      }

      case NdRuleId::imp_E: {
        // Γ0 ⇒ α→β cut against α→β, Γ1 ⇒ β.
        const Formula m = d.premise(0).formula();
        SequentProof minor = premise(1);
        const Context& g1 = minor.conclusion().context;
        SequentProof left(seq(g1.with(m), f), RuleId::imp_left, m,
                          {minor, identity_proof(f, g1)});
        return cut(gamma, f, m, premise(0), left);
      }

      case NdRuleId::neg_imp_E: {
        // Γ1 ⇒ ∼(α→β) and Γ2 ⇒ α composed by two cuts against
        // ∼(α→β), α ⇒ ∼β.
        const Formula m = d.premise(0).formula();
        const Formula a = m.arg().lhs();
        SequentProof major = premise(0);
        SequentProof left(seq(Context{m, a}, f), RuleId::neg_imp_left, m,
                          {identity_proof(a, {}), identity_proof(f, {})});
        Context inner_ctx = major.conclusion().context.with(a);
        SequentProof inner = cut(inner_ctx, f, m, major, left);
        return cut(gamma, f, a, premise(1), inner);
      }

      case NdRuleId::and_E1:
      case NdRuleId::and_E2:
      case NdRuleId::negneg_E:
      case NdRuleId::neg_or_E1:
      case NdRuleId::neg_or_E2: {
        // Γ ⇒ μ cut against μ ⇒ f.
        const Formula m = d.premise(0).formula();
        SequentProof left = [&] {
          switch (d.rule()) {
            case NdRuleId::and_E1:
            case NdRuleId::and_E2: {
              Formula other = d.rule() == NdRuleId::and_E1 ? m.rhs() : m.lhs();
              return SequentProof(seq(Context{m}, f), RuleId::and_left, m,
                                  {identity_proof(f, Context{other})});
            }
            case NdRuleId::negneg_E:
              return SequentProof(seq(Context{m}, f), RuleId::neg_left, m, {identity_proof(f, {})});
            default: {
              Formula nl = Formula::neg(m.arg().lhs()), nr = Formula::neg(m.arg().rhs());
              Formula other = d.rule() == NdRuleId::neg_or_E1 ? nr : nl;
              return SequentProof(seq(Context{m}, f), RuleId::neg_or_left, m,
                                  {identity_proof(f, Context{other})});
            }
          }
        }();
        return cut(gamma, f, m, premise(0), left);
      }

      case NdRuleId::or_E:
      case NdRuleId::neg_and_E: {
        const Formula m = d.premise(0).formula();
        Formula a = d.rule() == NdRuleId::or_E ? m.lhs() : Formula::neg(m.arg().lhs());
        Formula b = d.rule() == NdRuleId::or_E ? m.rhs() : Formula::neg(m.arg().rhs());
        RuleId r = d.rule() == NdRuleId::or_E ? RuleId::or_left : RuleId::neg_and_left;
        SequentProof left(seq(gamma.with(m), f), r, m,
                          {lift(premise(1), gamma.with(a)), lift(premise(2), gamma.with(b))});
        return cut(gamma, f, m, premise(0), left);
      }

      case NdRuleId::EM: {
        Formula a = d.hyp() ? *d.hyp() : f;
        return SequentProof(seq(gamma, f), RuleId::ex_middle, a,
                            {lift(premise(0), gamma.with(Formula::neg(a))),
                             lift(premise(1), gamma.with(a))});
      }
      case NdRuleId::GEM: {
        Formula w = d.hyp() ? *d.hyp() : Formula::imp(f, f);
        return SequentProof(seq(gamma, f), RuleId::g_ex_middle, std::make_pair(w.lhs(), w.rhs()),
                            {lift(premise(0), gamma.with(w)), lift(premise(1), gamma.with(w.lhs()))});
      }
    }
    throw std::logic_error("nd_to_sc: unknown rule");
  }
};

class ScToNd {
 public:
  explicit ScToNd(int next) : next_(next) {}

  Derivation run(const SequentProof& p) {
    const Formula& g = p.conclusion().succedent;
    auto prem = [&](std::size_t i) { return run(p.premise(i)); };
    auto pf = [&]() { return *p.principal_formula(); };
    auto intro = [&](NdRuleId r, std::vector<Derivation> ps, std::optional<int> l = std::nullopt) {
      return Derivation::make(r, g, std::move(ps), l);
    };

    switch (p.rule()) {
      case RuleId::init1:
      case RuleId::init2: return Derivation::assume(g);

      case RuleId::imp_right:
      case RuleId::neg_imp_right: {
        Formula a = p.rule() == RuleId::imp_right ? g.lhs() : g.arg().lhs();
        int l = next_++;
        NdRuleId r = p.rule() == RuleId::imp_right ? NdRuleId::imp_I : NdRuleId::neg_imp_I;
        return intro(r, {label_open(prem(0), a, l)}, l);
      }
      case RuleId::and_right: return intro(NdRuleId::and_I, {prem(0), prem(1)});
      case RuleId::neg_or_right: return intro(NdRuleId::neg_or_I, {prem(0), prem(1)});
      case RuleId::or_right1: return intro(NdRuleId::or_I1, {prem(0)});
      case RuleId::or_right2: return intro(NdRuleId::or_I2, {prem(0)});
      case RuleId::neg_right: return intro(NdRuleId::negneg_I, {prem(0)});
      case RuleId::neg_and_right1: return intro(NdRuleId::neg_and_I1, {prem(0)});
      case RuleId::neg_and_right2: return intro(NdRuleId::neg_and_I2, {prem(0)});

      case RuleId::and_left: {
        Formula m = pf();
        Derivation d = prem(0);
        d = substitute_open(d, m.lhs(), elim(NdRuleId::and_E1, m.lhs(), m), next_);
        return substitute_open(d, m.rhs(), elim(NdRuleId::and_E2, m.rhs(), m), next_);
      }
      case RuleId::neg_left: {
        Formula m = pf();
        return substitute_open(prem(0), m.arg().arg(), elim(NdRuleId::negneg_E, m.arg().arg(), m),
                               next_);
      }
      case RuleId::neg_or_left: {
        Formula m = pf();
        Formula nl = Formula::neg(m.arg().lhs()), nr = Formula::neg(m.arg().rhs());
        Derivation d = prem(0);
        d = substitute_open(d, nl, elim(NdRuleId::neg_or_E1, nl, m), next_);
        return substitute_open(d, nr, elim(NdRuleId::neg_or_E2, nr, m), next_);
      }
      case RuleId::imp_left:
      case RuleId::neg_imp_left: {
        Formula m = pf();
        bool neg = p.rule() == RuleId::neg_imp_left;
        Formula out = neg ? Formula::neg(m.arg().rhs()) : m.rhs();
        Derivation minor = prem(0);
        Derivation e = Derivation::make(neg ? NdRuleId::neg_imp_E : NdRuleId::imp_E, out,
                                        {Derivation::assume(m), minor});
        return substitute_open(prem(1), out, e, next_);
      }
      case RuleId::or_left:
      case RuleId::neg_and_left: {
        Formula m = pf();
        bool neg = p.rule() == RuleId::neg_and_left;
        Formula a = neg ? Formula::neg(m.arg().lhs()) : m.lhs();
        Formula b = neg ? Formula::neg(m.arg().rhs()) : m.rhs();
        int l = next_++;
        return Derivation::make(neg ? NdRuleId::neg_and_E : NdRuleId::or_E, g,
                                {Derivation::assume(m), label_open(prem(0), a, l),
                                 label_open(prem(1), b, l)},
                                l);
      }
      case RuleId::ex_middle: {
        Formula a = pf();
        int l = next_++;
        return Derivation::make(NdRuleId::EM, g,
                                {label_open(prem(0), Formula::neg(a), l), label_open(prem(1), a, l)},
                                l, a);
      }
      case RuleId::g_ex_middle: {
        auto [a, b] = *p.principal_pair();
        Formula w = Formula::imp(a, b);
        int l = next_++;
        return Derivation::make(NdRuleId::GEM, g,
                                {label_open(prem(0), w, l), label_open(prem(1), a, l)}, l, w);
      }
      case RuleId::peirce:
      case RuleId::cut: break;
    }
    throw std::logic_error("sc_to_nd: unexpected rule " + std::string(to_string(p.rule())));
  }

 private:
  static Derivation elim(NdRuleId r, const Formula& out, const Formula& major) {
    return Derivation::make(r, out, {Derivation::assume(major)});
  }

  int next_;
};

}  // namespace detail

/// Translates a derivation into a proof of oa(D) ⇒ end(D) in the paired
/// calculus. Eliminations become cuts against left rules; the result may
/// contain cuts.
inline SequentProof nd_to_sc(NdSystemId sys, const Derivation& d) {
  if (auto rep = check_derivation(sys, d); !rep) throw ContractError("nd_to_sc: " + rep.describe());
  SequentProof p = detail::NdToSc().run(d);
  if (auto rep = check_proof(paired_calculus(sys), p); !rep)
    throw std::logic_error("nd_to_sc produced an invalid proof: " + rep.describe());
  return p;
}

/// Translates a cut-free proof into a normal derivation of its succedent
/// whose open assumptions lie in its context. sMC and sCN proofs are first
/// rewritten into sMC*/sCN* with peirce_to_gem.
inline Derivation sc_to_nd(CalculusId calc, const SequentProof& p) {
  auto sys = paired_system(calc);
  if (!sys) throw ContractError("sc_to_nd: no natural deduction system for " + std::string(to_string(calc)));
  if (auto rep = check_proof(calc, p); !rep) throw ContractError("sc_to_nd: " + rep.describe());
  if (!is_cut_free(p)) throw ContractError("sc_to_nd: input contains cut");
  const SequentProof q = calc == CalculusId::SMC || calc == CalculusId::SCN ? peirce_to_gem(p) : p;
  Derivation d = detail::ScToNd(1).run(q);

  if (auto rep = check_derivation(*sys, d); !rep)
    throw std::logic_error("sc_to_nd produced an invalid derivation: " + rep.describe());
  if (!is_normal(d)) throw std::logic_error("sc_to_nd produced a non-normal derivation");
  if (d.formula() != p.conclusion().succedent)
    throw std::logic_error("sc_to_nd changed the end formula");
  for (const auto& f : open_assumptions(d))
    if (!p.conclusion().context.contains(f))
      throw std::logic_error("sc_to_nd left " + print(f) + " open");
  return d;
}

/// Normal form by translation: nd_to_sc, cut elimination, sc_to_nd.
inline Derivation normalize(NdSystemId sys, const Derivation& d, const SearchConfig& cfg = {}) {
  const CalculusId calc = paired_calculus(sys);
  SequentProof p = nd_to_sc(sys, d);
  SequentProof q = eliminate_cut(calc, p, cfg);
  return sc_to_nd(calc, q);
}

}  // namespace cxk
