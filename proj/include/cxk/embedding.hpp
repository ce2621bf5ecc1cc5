#pragma once

#include <unordered_map>

#include "cxk/prover.hpp"

namespace cxk {

namespace detail {

class Translator {
 public:
  Formula f(const Formula& x) {
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    Formula out = compute(x);
    memo_.emplace(x, out);
    return out;
  }

 private:
  Formula compute(const Formula& x) {
    switch (x.kind()) {
      case Kind::Var:
        if (x.primed()) throw ContractError("translate_f: primed atom " + print(x) + " in input");
        return x;
      case Kind::And: return Formula::conj(f(x.lhs()), f(x.rhs()));
      case Kind::Or: return Formula::disj(f(x.lhs()), f(x.rhs()));
      case Kind::Imp: return Formula::imp(f(x.lhs()), f(x.rhs()));
      case Kind::Neg: break;
    }
    const Formula a = x.arg();
    switch (a.kind()) {
      case Kind::Var:
        if (a.primed()) throw ContractError("translate_f: primed atom " + print(a) + " in input");
        return Formula::var(a.name(), true);
      case Kind::Neg: return f(a.arg());
      case Kind::And: return Formula::disj(f(Formula::neg(a.lhs())), f(Formula::neg(a.rhs())));
      case Kind::Or: return Formula::conj(f(Formula::neg(a.lhs())), f(Formula::neg(a.rhs())));
      case Kind::Imp: return Formula::imp(f(a.lhs()), f(Formula::neg(a.rhs())));
    }
    throw std::logic_error("translate_f: unreachable");
  }

  std::unordered_map<Formula, Formula, FormulaHash> memo_;
};

}  // namespace detail

/// The ∼-eliminating translation: ∼p becomes the primed atom p', and
/// negations are pushed inward through ∧, ∨, → and ∼∼.
inline Formula translate_f(const Formula& phi) { return detail::Translator().f(phi); }

inline Sequent translate_f(const Sequent& s) {
  detail::Translator t;
  std::vector<Formula> ctx;
  for (const auto& g : s.context) ctx.push_back(t.f(g));
  return Sequent{Context(std::move(ctx)), t.f(s.succedent)};
}

struct EmbedReport {
  Sequent source;
  Sequent target;
  Verdict smc;
  Verdict ljp_peirce;

  /// Both sides decided and equal. Budget exhaustion on either side is not
  /// agreement.
  bool agree() const {
    return smc != Verdict::ResourceExceeded && ljp_peirce != Verdict::ResourceExceeded &&
           smc == ljp_peirce;
  }
};

/// Decides S in sMC and f(S) in LJ⁺ + (Peirce).
inline EmbedReport embed_check(const Sequent& s, const SearchConfig& cfg = {}) {
  Sequent t = translate_f(s);
  return {s, t, decide(CalculusId::SMC, s, cfg).verdict,
          decide(CalculusId::LJP_PEIRCE, t, cfg).verdict};
}

}  // namespace cxk
