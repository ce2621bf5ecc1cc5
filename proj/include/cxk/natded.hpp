#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cxk/check.hpp"

namespace cxk {

enum class NdSystemId { NC, NC3, NMC, NCN };

enum class NdRuleId {
  assumption,
  imp_I,
  imp_E,
  and_I,
  and_E1,
  and_E2,
  or_I1,
  or_I2,
  or_E,
  negneg_I,
  negneg_E,
  neg_imp_I,
  neg_imp_E,
  neg_and_I1,
  neg_and_I2,
  neg_and_E,
  neg_or_I,
  neg_or_E1,
  neg_or_E2,
  EM,
  GEM,
};

inline constexpr std::array<NdSystemId, 4> kAllNdSystems = {NdSystemId::NC, NdSystemId::NC3,
                                                            NdSystemId::NMC, NdSystemId::NCN};

inline constexpr std::array<NdRuleId, 21> kAllNdRules = {
    NdRuleId::assumption, NdRuleId::imp_I,      NdRuleId::imp_E,      NdRuleId::and_I,
    NdRuleId::and_E1,     NdRuleId::and_E2,     NdRuleId::or_I1,      NdRuleId::or_I2,
    NdRuleId::or_E,       NdRuleId::negneg_I,   NdRuleId::negneg_E,   NdRuleId::neg_imp_I,
    NdRuleId::neg_imp_E,  NdRuleId::neg_and_I1, NdRuleId::neg_and_I2, NdRuleId::neg_and_E,
    NdRuleId::neg_or_I,   NdRuleId::neg_or_E1,  NdRuleId::neg_or_E2,  NdRuleId::EM,
    NdRuleId::GEM};

inline constexpr int arity(NdRuleId r) {
  switch (r) {
    case NdRuleId::assumption: return 0;
    case NdRuleId::imp_E:
    case NdRuleId::and_I:
    case NdRuleId::neg_imp_E:
    case NdRuleId::neg_or_I:
    case NdRuleId::EM:
    case NdRuleId::GEM: return 2;
    case NdRuleId::or_E:
    case NdRuleId::neg_and_E: return 3;
    default: return 1;
  }
}

/// (EM) and (GEM) count as introduction rules.
inline constexpr bool is_intro(NdRuleId r) {
  switch (r) {
    case NdRuleId::imp_I:
    case NdRuleId::and_I:
    case NdRuleId::or_I1:
    case NdRuleId::or_I2:
    case NdRuleId::negneg_I:
    case NdRuleId::neg_imp_I:
    case NdRuleId::neg_and_I1:
    case NdRuleId::neg_and_I2:
    case NdRuleId::neg_or_I:
    case NdRuleId::EM:
    case NdRuleId::GEM: return true;
    default: return false;
  }
}

inline constexpr bool is_elim(NdRuleId r) { return r != NdRuleId::assumption && !is_intro(r); }

inline constexpr bool discharges(NdRuleId r) {
  switch (r) {
    case NdRuleId::imp_I:
    case NdRuleId::neg_imp_I:
    case NdRuleId::or_E:
    case NdRuleId::neg_and_E:
    case NdRuleId::EM:
    case NdRuleId::GEM: return true;
    default: return false;
  }
}

inline constexpr bool admits(NdSystemId s, NdRuleId r) {
  if (r == NdRuleId::EM) return s == NdSystemId::NC3 || s == NdSystemId::NCN;
  if (r == NdRuleId::GEM) return s == NdSystemId::NMC || s == NdSystemId::NCN;
  return true;
}

/// Sequent calculus each system corresponds to.
inline constexpr CalculusId paired_calculus(NdSystemId s) {
  switch (s) {
    case NdSystemId::NC: return CalculusId::SC;
    case NdSystemId::NC3: return CalculusId::SC3;
    case NdSystemId::NMC: return CalculusId::SMC_STAR;
    case NdSystemId::NCN: return CalculusId::SCN_STAR;
  }
  return CalculusId::SC;
}

inline std::optional<NdSystemId> paired_system(CalculusId c) {
  switch (c) {
    case CalculusId::SC: return NdSystemId::NC;
    case CalculusId::SC3: return NdSystemId::NC3;
    case CalculusId::SMC:
    case CalculusId::SMC_STAR: return NdSystemId::NMC;
    case CalculusId::SCN:
    case CalculusId::SCN_STAR: return NdSystemId::NCN;
    default: return std::nullopt;
  }
}

inline constexpr std::string_view to_string(NdSystemId s) {
  switch (s) {
    case NdSystemId::NC: return "nc";
    case NdSystemId::NC3: return "nc3";
    case NdSystemId::NMC: return "nmc";
    case NdSystemId::NCN: return "ncn";
  }
  return "?";
}

inline std::optional<NdSystemId> nd_system_from_string(std::string_view s) {
  for (NdSystemId x : kAllNdSystems)
    if (to_string(x) == s) return x;
  return std::nullopt;
}

inline constexpr std::string_view to_string(NdRuleId r) {
  switch (r) {
    case NdRuleId::assumption: return "assumption";
    case NdRuleId::imp_I: return "imp_I";
    case NdRuleId::imp_E: return "imp_E";
    case NdRuleId::and_I: return "and_I";
    case NdRuleId::and_E1: return "and_E1";
    case NdRuleId::and_E2: return "and_E2";
    case NdRuleId::or_I1: return "or_I1";
    case NdRuleId::or_I2: return "or_I2";
    case NdRuleId::or_E: return "or_E";
    case NdRuleId::negneg_I: return "negneg_I";
    case NdRuleId::negneg_E: return "negneg_E";
    case NdRuleId::neg_imp_I: return "neg_imp_I";
    case NdRuleId::neg_imp_E: return "neg_imp_E";
    case NdRuleId::neg_and_I1: return "neg_and_I1";
    case NdRuleId::neg_and_I2: return "neg_and_I2";
    case NdRuleId::neg_and_E: return "neg_and_E";
    case NdRuleId::neg_or_I: return "neg_or_I";
    case NdRuleId::neg_or_E1: return "neg_or_E1";
    case NdRuleId::neg_or_E2: return "neg_or_E2";
    case NdRuleId::EM: return "EM";
    case NdRuleId::GEM: return "GEM";
  }
  return "?";
}

inline std::optional<NdRuleId> nd_rule_from_string(std::string_view s) {
  for (NdRuleId r : kAllNdRules)
    if (to_string(r) == s) return r;
  return std::nullopt;
}

using Path = std::vector<std::size_t>;

/// Natural-deduction derivation with explicit discharge labels.
///
/// A discharging node may carry a label; assumption leaves carrying the same
/// label in the premises the rule discharges into are bound by it (the
/// innermost such node wins). Unlabelled leaves are always open. For (EM)
/// the node also records α, for (GEM) the implication α→β; when not given
/// they are read off the bound leaves.
class Derivation {
 public:
  static Derivation assume(Formula f, std::optional<int> label = std::nullopt) {
    return Derivation(Node{NdRuleId::assumption, f, {}, std::nullopt, label, std::nullopt});
  }

  static Derivation make(NdRuleId rule, Formula f, std::vector<Derivation> premises,
                         std::optional<int> discharge = std::nullopt,
                         std::optional<Formula> hyp = std::nullopt);

  NdRuleId rule() const { return node_->rule; }
  const Formula& formula() const { return node_->formula; }
  const std::vector<Derivation>& premises() const { return node_->premises; }
  const Derivation& premise(std::size_t i) const { return node_->premises.at(i); }
  std::optional<int> discharge() const { return node_->discharge; }
  std::optional<int> label() const { return node_->label; }
  /// α for (EM), α→β for (GEM).
  std::optional<Formula> hyp() const { return node_->hyp; }

  bool is_assumption() const { return rule() == NdRuleId::assumption; }

  const Derivation& at(const Path& path) const {
    const Derivation* d = this;
    for (auto i : path) {
      if (i >= d->premises().size()) throw std::out_of_range("derivation path out of range");
      d = &d->premises()[i];
    }
    return *d;
  }

  /// Copy with the subtree at `path` replaced.
  Derivation replace_at(const Path& path, const Derivation& sub, std::size_t from = 0) const {
    if (from == path.size()) return sub;
    auto ps = premises();
    if (path[from] >= ps.size()) throw std::out_of_range("derivation path out of range");
    ps[path[from]] = ps[path[from]].replace_at(path, sub, from + 1);
    return with_premises(std::move(ps));
  }

  Derivation with_premises(std::vector<Derivation> ps) const {
    return Derivation(Node{rule(), formula(), std::move(ps), discharge(), label(), hyp()});
  }
  Derivation with_label(std::optional<int> l) const {
    return Derivation(Node{rule(), formula(), premises(), discharge(), l, hyp()});
  }
  Derivation with_discharge(std::optional<int> l) const {
    return Derivation(Node{rule(), formula(), premises(), l, label(), hyp()});
  }

  bool same_node(const Derivation& o) const { return node_ == o.node_; }

 private:
  struct Node {
    NdRuleId rule;
    Formula formula;
    std::vector<Derivation> premises;
    std::optional<int> discharge;
    std::optional<int> label;
    std::optional<Formula> hyp;
  };
  explicit Derivation(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

/// Formula a rule discharges into premise `i` of `d`, if any. `d` must have
/// the rule's arity.
inline std::optional<Formula> discharged_in(const Derivation& d, std::size_t i) {
  const Formula& f = d.formula();
  switch (d.rule()) {
    case NdRuleId::imp_I:
      if (i == 0 && f.is_imp()) return f.lhs();
      break;
    case NdRuleId::neg_imp_I:
      if (i == 0 && f.is_neg_of(Kind::Imp)) return f.arg().lhs();
      break;
    case NdRuleId::or_E: {
      const Formula& m = d.premise(0).formula();
      if (!m.is_or()) break;
      if (i == 1) return m.lhs();
      if (i == 2) return m.rhs();
      break;
    }
    case NdRuleId::neg_and_E: {
      const Formula& m = d.premise(0).formula();
      if (!m.is_neg_of(Kind::And)) break;
      if (i == 1) return Formula::neg(m.arg().lhs());
      if (i == 2) return Formula::neg(m.arg().rhs());
      break;
    }
    case NdRuleId::EM:
      if (!d.hyp()) break;
      if (i == 0) return Formula::neg(*d.hyp());
      if (i == 1) return *d.hyp();
      break;
    case NdRuleId::GEM:
      if (!d.hyp() || !d.hyp()->is_imp()) break;
      if (i == 0) return *d.hyp();
      if (i == 1) return d.hyp()->lhs();
      break;
    default: break;
  }
  return std::nullopt;
}

/// Which premises of a discharging rule its label reaches.
inline bool binds_into(NdRuleId r, std::size_t i) {
  switch (r) {
    case NdRuleId::imp_I:
    case NdRuleId::neg_imp_I: return i == 0;
    case NdRuleId::or_E:
    case NdRuleId::neg_and_E: return i == 1 || i == 2;
    case NdRuleId::EM:
    case NdRuleId::GEM: return i == 0 || i == 1;
    default: return false;
  }
}

namespace detail {

// Leaves labelled `label` that are not captured by a binder inside `d`.
inline void free_leaves(const Derivation& d, int label, std::vector<Formula>& out) {
  if (d.is_assumption()) {
    if (d.label() == label) out.push_back(d.formula());
    return;
  }
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    if (d.discharge() == label && binds_into(d.rule(), i)) continue;
    free_leaves(d.premise(i), label, out);
  }
}

}  // namespace detail

inline Derivation Derivation::make(NdRuleId rule, Formula f, std::vector<Derivation> premises,
                                   std::optional<int> discharge, std::optional<Formula> hyp) {
  if (rule == NdRuleId::assumption) throw std::invalid_argument("use Derivation::assume");
  if (!hyp && discharge && premises.size() == 2 &&
      (rule == NdRuleId::EM || rule == NdRuleId::GEM)) {
    std::vector<Formula> first, second;
    detail::free_leaves(premises[0], *discharge, first);
    detail::free_leaves(premises[1], *discharge, second);
    if (rule == NdRuleId::EM) {
      if (!second.empty())
        hyp = second.front();
      else if (!first.empty() && first.front().is_neg())
        hyp = first.front().arg();
    } else {
      if (!first.empty() && first.front().is_imp())
        hyp = first.front();
      else if (!second.empty())
        hyp = Formula::imp(second.front(), second.front());
    }
  }
  return Derivation(Node{rule, f, std::move(premises), discharge, std::nullopt, hyp});
}

inline const Formula& end_formula(const Derivation& d) { return d.formula(); }

inline std::size_t node_count(const Derivation& d) {
  std::size_t n = 1;
  for (const auto& p : d.premises()) n += node_count(p);
  return n;
}

namespace detail {

inline void collect_open(const Derivation& d, std::map<int, int>& bound,
                         std::set<Formula>& out) {
  if (d.is_assumption()) {
    if (!d.label() || !bound.count(*d.label()) || bound[*d.label()] == 0) out.insert(d.formula());
    return;
  }
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    bool binds = d.discharge() && binds_into(d.rule(), i);
    if (binds) ++bound[*d.discharge()];
    collect_open(d.premise(i), bound, out);
    if (binds) --bound[*d.discharge()];
  }
}

}  // namespace detail

/// Formulas of leaves not bound by any discharging ancestor.
inline std::set<Formula> open_assumptions(const Derivation& d) {
  std::map<int, int> bound;
  std::set<Formula> out;
  detail::collect_open(d, bound, out);
  return out;
}

inline Context open_context(const Derivation& d) {
  auto oa = open_assumptions(d);
  return Context(std::vector<Formula>(oa.begin(), oa.end()));
}

namespace detail {

class DerivationChecker {
 public:
  explicit DerivationChecker(NdSystemId sys) : sys_(sys) {}

  CheckReport run(const Derivation& d) {
    Path path;
    std::map<int, Formula> env;
    visit(d, path, env);
    return report_;
  }

 private:
  bool fail(CheckFailure f, const Path& path, const Derivation& d, std::string reason) {
    report_ = CheckReport{f, path, std::string(to_string(d.rule())), std::move(reason)};
    return false;
  }

  bool visit(const Derivation& d, Path& path, const std::map<int, Formula>& env) {
    if (has_primed(d.formula()))
      return fail(CheckFailure::language_mismatch, path, d,
                  "primed atom in " + print(d.formula()));
    if (!admits(sys_, d.rule()))
      return fail(CheckFailure::rule_not_in_calculus, path, d,
                  std::string(to_string(d.rule())) + " is not a rule of " +
                      std::string(to_string(sys_)));
    if (d.premises().size() != static_cast<std::size_t>(arity(d.rule())))
      return fail(CheckFailure::arity_mismatch, path, d,
                  "expected " + std::to_string(arity(d.rule())) + " premises, got " +
                      std::to_string(d.premises().size()));
    if (d.is_assumption()) {
      if (!d.label()) return true;
      auto it = env.find(*d.label());
      if (it == env.end())
        return fail(CheckFailure::discharge_violation, path, d,
                    "label " + std::to_string(*d.label()) + " is not bound here");
      if (it->second != d.formula())
        return fail(CheckFailure::discharge_violation, path, d,
                    "label " + std::to_string(*d.label()) + " discharges " + print(it->second) +
                        ", leaf is " + print(d.formula()));
      return true;
    }
    if (d.discharge() && !discharges(d.rule()))
      return fail(CheckFailure::schema_mismatch, path, d, "rule does not discharge assumptions");
    if (std::string why = schema(d); !why.empty())
      return fail(CheckFailure::schema_mismatch, path, d, why);

    for (std::size_t i = 0; i < d.premises().size(); ++i) {
      path.push_back(i);
      bool ok;
      if (d.discharge() && binds_into(d.rule(), i)) {
        auto inner = env;
        auto f = discharged_in(d, i);
        if (!f) {
          // (EM)/(GEM) without a recorded α: only vacuous discharge is possible.
          std::vector<Formula> leaves;
          free_leaves(d.premise(i), *d.discharge(), leaves);
          if (!leaves.empty())
            return fail(CheckFailure::discharge_violation, path, d.premise(i),
                        "cannot determine the discharged formula");
          inner.erase(*d.discharge());
        } else {
          inner.insert_or_assign(*d.discharge(), *f);
        }
        ok = visit(d.premise(i), path, inner);
      } else {
        ok = visit(d.premise(i), path, env);
      }
      path.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  // Empty string when the node's formula fits its premises.
  static std::string schema(const Derivation& d) {
    const Formula& f = d.formula();
    auto P = [&](std::size_t i) { return d.premise(i).formula(); };
    auto need = [](bool ok, std::string why) { return ok ? std::string() : why; };
    auto eq = [](const Formula& a, const Formula& b, const char* what) {
      return a == b ? std::string()
                    : std::string(what) + " should be " + print(b) + ", is " + print(a);
    };
    switch (d.rule()) {
      case NdRuleId::assumption: return {};
      case NdRuleId::imp_I:
        if (!f.is_imp()) return "conclusion is not an implication";
        return eq(P(0), f.rhs(), "premise");
      case NdRuleId::imp_E:
        if (!P(0).is_imp()) return "major premise is not an implication";
        if (auto e = eq(P(1), P(0).lhs(), "minor premise"); !e.empty()) return e;
        return eq(f, P(0).rhs(), "conclusion");
      case NdRuleId::and_I:
        if (!f.is_and()) return "conclusion is not a conjunction";
        if (auto e = eq(P(0), f.lhs(), "premise 0"); !e.empty()) return e;
        return eq(P(1), f.rhs(), "premise 1");
      case NdRuleId::and_E1:
        if (!P(0).is_and()) return "premise is not a conjunction";
        return eq(f, P(0).lhs(), "conclusion");
      case NdRuleId::and_E2:
        if (!P(0).is_and()) return "premise is not a conjunction";
        return eq(f, P(0).rhs(), "conclusion");
      case NdRuleId::or_I1:
        if (!f.is_or()) return "conclusion is not a disjunction";
        return eq(P(0), f.lhs(), "premise");
      case NdRuleId::or_I2:
        if (!f.is_or()) return "conclusion is not a disjunction";
        return eq(P(0), f.rhs(), "premise");
      case NdRuleId::or_E:
        if (!P(0).is_or()) return "major premise is not a disjunction";
        if (auto e = eq(P(1), f, "premise 1"); !e.empty()) return e;
        return eq(P(2), f, "premise 2");
      case NdRuleId::negneg_I: return eq(f, Formula::neg(Formula::neg(P(0))), "conclusion");
      case NdRuleId::negneg_E: return eq(P(0), Formula::neg(Formula::neg(f)), "premise");
      case NdRuleId::neg_imp_I:
        if (!f.is_neg_of(Kind::Imp)) return "conclusion is not a negated implication";
        return eq(P(0), Formula::neg(f.arg().rhs()), "premise");
      case NdRuleId::neg_imp_E:
        if (!P(0).is_neg_of(Kind::Imp)) return "major premise is not a negated implication";
        if (auto e = eq(P(1), P(0).arg().lhs(), "minor premise"); !e.empty()) return e;
        return eq(f, Formula::neg(P(0).arg().rhs()), "conclusion");
      case NdRuleId::neg_and_I1:
        if (!f.is_neg_of(Kind::And)) return "conclusion is not a negated conjunction";
        return eq(P(0), Formula::neg(f.arg().lhs()), "premise");
      case NdRuleId::neg_and_I2:
        if (!f.is_neg_of(Kind::And)) return "conclusion is not a negated conjunction";
        return eq(P(0), Formula::neg(f.arg().rhs()), "premise");
      case NdRuleId::neg_and_E:
        if (!P(0).is_neg_of(Kind::And)) return "major premise is not a negated conjunction";
        if (auto e = eq(P(1), f, "premise 1"); !e.empty()) return e;
        return eq(P(2), f, "premise 2");
      case NdRuleId::neg_or_I:
        if (!f.is_neg_of(Kind::Or)) return "conclusion is not a negated disjunction";
        if (auto e = eq(P(0), Formula::neg(f.arg().lhs()), "premise 0"); !e.empty()) return e;
        return eq(P(1), Formula::neg(f.arg().rhs()), "premise 1");
      case NdRuleId::neg_or_E1:
        if (!P(0).is_neg_of(Kind::Or)) return "premise is not a negated disjunction";
        return eq(f, Formula::neg(P(0).arg().lhs()), "conclusion");
      case NdRuleId::neg_or_E2:
        if (!P(0).is_neg_of(Kind::Or)) return "premise is not a negated disjunction";
        return eq(f, Formula::neg(P(0).arg().rhs()), "conclusion");
      case NdRuleId::EM:
      case NdRuleId::GEM:
        if (d.rule() == NdRuleId::GEM && d.hyp() && !d.hyp()->is_imp())
          return "recorded hypothesis is not an implication";
        if (auto e = eq(P(0), f, "premise 0"); !e.empty()) return e;
        return need(P(1) == f, "premise 1 should be " + print(f) + ", is " + print(P(1)));
    }
    return "unknown rule";
  }

  NdSystemId sys_;
  CheckReport report_;
};

}  // namespace detail

inline CheckReport check_derivation(NdSystemId sys, const Derivation& d) {
  return detail::DerivationChecker(sys).run(d);
}

// ---------------------------------------------------------------------------
// Maximum formulas

struct MaxOccurrence {
  Path path;  // node whose conclusion is the maximum formula
  Formula formula;
};

inline bool ends_in_max_candidate(NdRuleId r) {
  return is_intro(r) || r == NdRuleId::or_E || r == NdRuleId::neg_and_E;
}

namespace detail {

inline void find_max(const Derivation& d, Path& path, std::vector<MaxOccurrence>& out) {
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    path.push_back(i);
    find_max(d.premise(i), path, out);
    path.pop_back();
  }
  // Every elimination has its major premise first.
  if (is_elim(d.rule()) && !d.premises().empty() && ends_in_max_candidate(d.premise(0).rule())) {
    Path p = path;
    p.push_back(0);
    out.push_back({std::move(p), d.premise(0).formula()});
  }
}

}  // namespace detail

/// Maximum formulas in post-order (leftmost-innermost first).
inline std::vector<MaxOccurrence> maximum_formulas(const Derivation& d) {
  std::vector<MaxOccurrence> out;
  Path path;
  detail::find_max(d, path, out);
  return out;
}

inline bool is_normal(const Derivation& d) { return maximum_formulas(d).empty(); }

// ---------------------------------------------------------------------------
// Labels and substitution

/// Largest label used anywhere in `d`, or 0.
inline int max_label(const Derivation& d) {
  int m = 0;
  if (d.label()) m = std::max(m, *d.label());
  if (d.discharge()) m = std::max(m, *d.discharge());
  for (const auto& p : d.premises()) m = std::max(m, max_label(p));
  return m;
}

namespace detail {

inline Derivation rename_bound(const Derivation& d, std::map<int, int>& env, int& next) {
  if (d.is_assumption()) {
    if (d.label()) {
      if (auto it = env.find(*d.label()); it != env.end()) return d.with_label(it->second);
    }
    return d;
  }
  std::optional<int> fresh;
  if (d.discharge()) fresh = next++;
  std::vector<Derivation> ps;
  ps.reserve(d.premises().size());
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    if (fresh && binds_into(d.rule(), i)) {
      std::map<int, int> inner = env;
      inner.insert_or_assign(*d.discharge(), *fresh);
      ps.push_back(rename_bound(d.premise(i), inner, next));
    } else {
      ps.push_back(rename_bound(d.premise(i), env, next));
    }
  }
  auto out = d.with_premises(std::move(ps));
  return fresh ? out.with_discharge(fresh) : out;
}

}  // namespace detail

/// Gives every binder inside `d` a new label starting at `next` (advanced
/// past the labels used). Free labels are left alone.
inline Derivation freshen_labels(const Derivation& d, int& next) {
  std::map<int, int> env;
  return detail::rename_bound(d, env, next);
}

/// Relabels so that all binders carry distinct labels.
inline Derivation distinct_labels(const Derivation& d) {
  int next = max_label(d) + 1;
  return freshen_labels(d, next);
}

/// Replaces the leaves of `d` bound from outside by `label` with copies of
/// `e`; each copy gets fresh binder labels starting at `next`.
inline Derivation substitute_label(const Derivation& d, int label, const Derivation& e, int& next) {
  if (d.is_assumption()) return d.label() == label ? freshen_labels(e, next) : d;
  std::vector<Derivation> ps;
  ps.reserve(d.premises().size());
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    if (d.discharge() == label && binds_into(d.rule(), i))
      ps.push_back(d.premise(i));
    else
      ps.push_back(substitute_label(d.premise(i), label, e, next));
  }
  return d.with_premises(std::move(ps));
}

/// Replaces unlabelled leaves of formula `a` with copies of `e`.
inline Derivation substitute_open(const Derivation& d, const Formula& a, const Derivation& e,
                                  int& next) {
  if (d.is_assumption()) return (!d.label() && d.formula() == a) ? freshen_labels(e, next) : d;
  std::vector<Derivation> ps;
  ps.reserve(d.premises().size());
  for (const auto& p : d.premises()) ps.push_back(substitute_open(p, a, e, next));
  return d.with_premises(std::move(ps));
}

/// Attaches `label` to the unlabelled leaves of formula `a`.
inline Derivation label_open(const Derivation& d, const Formula& a, int label) {
  if (d.is_assumption()) return (!d.label() && d.formula() == a) ? d.with_label(label) : d;
  std::vector<Derivation> ps;
  ps.reserve(d.premises().size());
  for (const auto& p : d.premises()) ps.push_back(label_open(p, a, label));
  return d.with_premises(std::move(ps));
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const Derivation& d) {
  nlohmann::json j;
  j["rule"] = std::string(to_string(d.rule()));
  j["formula"] = print(d.formula());
  if (d.is_assumption()) {
    j["label"] = d.label() ? nlohmann::json(*d.label()) : nlohmann::json(nullptr);
    return j;
  }
  j["discharge"] = d.discharge() ? nlohmann::json(*d.discharge()) : nlohmann::json(nullptr);
  if (d.hyp()) j["hyp"] = print(*d.hyp());
  j["premises"] = nlohmann::json::array();
  for (const auto& p : d.premises()) j["premises"].push_back(to_json(p));
  return j;
}

namespace detail {

inline std::optional<int> json_label(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_number_integer()) throw FormatError(std::string("\"") + key + "\" must be an integer");
  return j[key].get<int>();
}

}  // namespace detail

inline Derivation derivation_from_json(const nlohmann::json& j, ParseOptions opts = {true}) {
  if (!j.is_object()) throw FormatError("derivation node must be an object");
  if (!j.contains("rule") || !j["rule"].is_string()) throw FormatError("missing \"rule\"");
  auto rule = nd_rule_from_string(j["rule"].get<std::string>());
  if (!rule) throw FormatError("unknown rule \"" + j["rule"].get<std::string>() + "\"");
  if (!j.contains("formula")) throw FormatError("missing \"formula\"");
  Formula f = detail::json_formula(j["formula"], opts);
  if (*rule == NdRuleId::assumption) return Derivation::assume(f, detail::json_label(j, "label"));
  std::vector<Derivation> ps;
  if (j.contains("premises")) {
    if (!j["premises"].is_array()) throw FormatError("\"premises\" must be an array");
    for (const auto& p : j["premises"]) ps.push_back(derivation_from_json(p, opts));
  }
  std::optional<Formula> hyp;
  if (j.contains("hyp") && !j["hyp"].is_null()) hyp = detail::json_formula(j["hyp"], opts);
  return Derivation::make(*rule, f, std::move(ps), detail::json_label(j, "discharge"), hyp);
}

}  // namespace cxk
