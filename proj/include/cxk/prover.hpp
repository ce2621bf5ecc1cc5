#pragma once

#include <array>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cxk/closure.hpp"
#include "cxk/structural.hpp"
#include "cxk/valuation.hpp"

namespace cxk {

struct SearchConfig {
  std::uint64_t node_budget = 5'000'000;
  /// Search (g-ex-middle) directly with α, β over the closure instead of
  /// deciding starred calculi through their unstarred equivalents.
  bool allow_g_ex_middle_direct = false;
  bool memo = true;
  /// Refute sequents that have a two-valued countermodel without expanding
  /// them (see TwoValued). Only cuts branches that cannot succeed.
  bool countermodel_pruning = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::size_t max_depth = 0;
  double seconds = 0.0;
};

enum class Verdict { Provable, Unprovable, ResourceExceeded };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Provable: return "provable";
    case Verdict::Unprovable: return "unprovable";
    case Verdict::ResourceExceeded: return "resource-exceeded";
  }
  return "?";
}

struct ProveResult {
  Verdict verdict = Verdict::Unprovable;
  std::optional<SequentProof> proof;  // set iff verdict == Provable
  SearchStats stats;

  bool provable() const { return verdict == Verdict::Provable; }
};

/// Raised by operations that need a definite answer when the search budget
/// runs out.
class ResourceExceeded : public std::runtime_error {
 public:
  ResourceExceeded(const SearchStats& s)
      : std::runtime_error("node budget exhausted after " + std::to_string(s.nodes) + " nodes"),
        stats(s) {}
  SearchStats stats;
};

namespace detail {

class BackwardSearch {
 public:
  BackwardSearch(CalculusId calc, const Sequent& goal, const SearchConfig& cfg)
      : calc_(calc),
        cfg_(cfg),
        universe_(closure(goal, is_connexive(calc))),
        ex_middle_(admits(calc, RuleId::ex_middle)),
        peirce_(admits(calc, RuleId::peirce)),
        g_ex_middle_(admits(calc, RuleId::g_ex_middle)),
        connexive_(is_connexive(calc)),
        semantics_(calc, universe_.atoms()) {
    for (const auto& f : universe_.members())
      if (f.is_var()) atoms_.push_back(f);
  }

  // Rounds bound the number of (Peirce) / (g-ex-middle) steps on a branch;
  // the last round is unbounded. A round that never hit its bound is final.
  std::optional<SequentProof> run(const Sequent& goal) {
    const bool bounded_rounds = peirce_ || (g_ex_middle_ && cfg_.allow_g_ex_middle_direct);
    const std::vector<std::size_t> limits =
        bounded_rounds ? std::vector<std::size_t>{1, 2, 3, kUnbounded}
                       : std::vector<std::size_t>{kUnbounded};
    for (std::size_t limit : limits) {
      limit_hit_ = false;
      Outcome o = search(goal, 0, limit);
      if (o.proof || !limit_hit_) return o.proof;
    }
    return std::nullopt;
  }

  const SearchStats& stats() const { return stats_; }

 private:
  static constexpr std::size_t kNoLoop = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

  struct Outcome {
    std::optional<SequentProof> proof;
    // Shallowest ancestor depth whose blocking this failure relied on.
    std::size_t loop_ref = kNoLoop;
  };

  struct OverBudget {};

  // Every formula a backward step introduces stays inside the universe or is
  // a Peirce / g-ex-middle witness built from two members.
  bool bounded(const Formula& f) const {
    if (universe_.contains(f)) return true;
    return f.is_imp() && universe_.contains(f.lhs()) && universe_.contains(f.rhs());
  }

  Outcome search(const Sequent& s, std::size_t depth, std::size_t rem) {
    if (cfg_.memo) {
      if (auto it = proved_.find(s); it != proved_.end()) return {it->second, kNoLoop};
      if (auto it = refuted_.find(s); it != refuted_.end() && it->second >= rem)
        return {std::nullopt, kNoLoop};
    }
    if (auto it = branch_.find(s); it != branch_.end()) return {std::nullopt, it->second};
    if (++stats_.nodes > cfg_.node_budget) throw OverBudget{};
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (cfg_.countermodel_pruning && semantics_.falsifiable(s)) return finish(s, depth, kUnbounded, Outcome{});

    if (auto leaf = close_leaf(s)) return finish(s, depth, rem, Outcome{std::move(leaf), kNoLoop});

    branch_.emplace(s, depth);
    Outcome out = expand(s, depth, rem);
    branch_.erase(s);
    return finish(s, depth, rem, std::move(out));
  }

  Outcome finish(const Sequent& s, std::size_t depth, std::size_t rem, Outcome out) {
    if (out.proof) {
      if (cfg_.memo) proved_.emplace(s, *out.proof);
      out.loop_ref = kNoLoop;
      return out;
    }
    if (out.loop_ref >= depth) {
      if (cfg_.memo) {
        auto [it, fresh] = refuted_.emplace(s, rem);
        if (!fresh) it->second = std::max(it->second, rem);
      }
      out.loop_ref = kNoLoop;
    }
    return out;
  }

  std::optional<SequentProof> close_leaf(const Sequent& s) const {
    const Formula& g = s.succedent;
    if (!s.context.contains(g)) return std::nullopt;
    if (g.is_var()) return SequentProof(s, RuleId::init1, g);
    if (connexive_ && g.is_neg_atom()) return SequentProof(s, RuleId::init2, g);
    return identity_proof(g, s.context);
  }

  // All premises must succeed.
  Outcome conjunction(const Sequent& s, RuleId rule, Principal pr,
                      const std::vector<Sequent>& premises, std::size_t depth,
                      std::size_t rem) {
    std::vector<SequentProof> proofs;
    proofs.reserve(premises.size());
    for (const auto& p : premises) {
#ifndef NDEBUG
      for (const auto& f : p.context) assert(bounded(f));
      assert(bounded(p.succedent));
#endif
      Outcome o = search(p, depth + 1, rem);
      if (!o.proof) return {std::nullopt, o.loop_ref};
      proofs.push_back(std::move(*o.proof));
    }
    return {SequentProof(s, rule, std::move(pr), std::move(proofs)), kNoLoop};
  }

  Outcome expand(const Sequent& s, std::size_t depth, std::size_t rem) {
    const Context& ctx = s.context;
    const Formula& g = s.succedent;
    auto with = [&](std::initializer_list<Formula> fs) {
      Context c = ctx;
      for (const auto& f : fs) c = c.with(f);
      return c;
    };
    auto fresh = [&](const Formula& f) { return !ctx.contains(f); };

    // Left rules other than →/∼→ left keep the principal formula and the
    // succedent, so their premises are weakenings of the conclusion: apply
    // the first one that adds something and commit to it.
    for (const auto& f : ctx) {
      switch (f.kind()) {
        case Kind::And:
          if (fresh(f.lhs()) || fresh(f.rhs()))
            return conjunction(s, RuleId::and_left, f, {{with({f.lhs(), f.rhs()}), g}}, depth, rem);
          break;
        case Kind::Or:
          if (fresh(f.lhs()) && fresh(f.rhs()))
            return conjunction(s, RuleId::or_left, f,
                               {{with({f.lhs()}), g}, {with({f.rhs()}), g}}, depth, rem);
          break;
        case Kind::Neg: {
          if (!connexive_) break;
          const Formula a = f.arg();
          if (a.is_neg()) {
            if (fresh(a.arg()))
              return conjunction(s, RuleId::neg_left, f, {{with({a.arg()}), g}}, depth, rem);
          } else if (a.is_and()) {
            Formula nl = Formula::neg(a.lhs()), nr = Formula::neg(a.rhs());
            if (fresh(nl) && fresh(nr))
              return conjunction(s, RuleId::neg_and_left, f, {{with({nl}), g}, {with({nr}), g}},
                                 depth, rem);
          } else if (a.is_or()) {
            Formula nl = Formula::neg(a.lhs()), nr = Formula::neg(a.rhs());
            if (fresh(nl) || fresh(nr))
              return conjunction(s, RuleId::neg_or_left, f, {{with({nl, nr}), g}}, depth, rem);
          }
          break;
        }
        default: break;
      }
    }

    // Invertible right rules.
    switch (g.kind()) {
      case Kind::Imp:
        return conjunction(s, RuleId::imp_right, g, {{with({g.lhs()}), g.rhs()}}, depth, rem);
      case Kind::And:
        return conjunction(s, RuleId::and_right, g, {{ctx, g.lhs()}, {ctx, g.rhs()}}, depth, rem);
      case Kind::Neg: {
        if (!connexive_) break;
        const Formula a = g.arg();
        if (a.is_neg()) return conjunction(s, RuleId::neg_right, g, {{ctx, a.arg()}}, depth, rem);
        if (a.is_imp())
          return conjunction(s, RuleId::neg_imp_right, g,
                             {{with({a.lhs()}), Formula::neg(a.rhs())}}, depth, rem);
        if (a.is_or())
          return conjunction(s, RuleId::neg_or_right, g,
                             {{ctx, Formula::neg(a.lhs())}, {ctx, Formula::neg(a.rhs())}},
                             depth, rem);
        break;
      }
      default: break;
    }

    // Choice points.
    std::size_t loop_ref = kNoLoop;
    auto attempt = [&](Outcome o) -> std::optional<Outcome> {
      if (o.proof) return o;
      loop_ref = std::min(loop_ref, o.loop_ref);
      return std::nullopt;
    };
#define CXK_TRY(expr)                          \
  do {                                         \
    if (auto r = attempt(expr)) return *r;     \
  } while (0)

    if (g.is_or()) {
      CXK_TRY(conjunction(s, RuleId::or_right1, g, {{ctx, g.lhs()}}, depth, rem));
      CXK_TRY(conjunction(s, RuleId::or_right2, g, {{ctx, g.rhs()}}, depth, rem));
    } else if (connexive_ && g.is_neg_of(Kind::And)) {
      const Formula a = g.arg();
      CXK_TRY(conjunction(s, RuleId::neg_and_right1, g, {{ctx, Formula::neg(a.lhs())}}, depth, rem));
      CXK_TRY(conjunction(s, RuleId::neg_and_right2, g, {{ctx, Formula::neg(a.rhs())}}, depth, rem));
    }

    for (const auto& f : ctx) {
      if (f.is_imp()) {
        if (!fresh(f.rhs()) || f.lhs() == g) continue;
        CXK_TRY(conjunction(s, RuleId::imp_left, f, {{ctx, f.lhs()}, {with({f.rhs()}), g}},
                            depth, rem));
      } else if (connexive_ && f.is_neg_of(Kind::Imp)) {
        const Formula a = f.arg();
        Formula nb = Formula::neg(a.rhs());
        if (!fresh(nb) || a.lhs() == g) continue;
        CXK_TRY(conjunction(s, RuleId::neg_imp_left, f, {{ctx, a.lhs()}, {with({nb}), g}}, depth, rem));
      }
    }

    if (ex_middle_) {
      for (const auto& p : atoms_) {
        Formula np = Formula::neg(p);
        if (!fresh(p) || !fresh(np)) continue;
        CXK_TRY(conjunction(s, RuleId::ex_middle, p, {{with({np}), g}, {with({p}), g}}, depth, rem));
      }
    }

    const bool spend = rem != 0;
    const std::size_t next = rem == kUnbounded ? rem : rem - 1;
    if ((peirce_ || (g_ex_middle_ && cfg_.allow_g_ex_middle_direct)) && !spend) limit_hit_ = true;

    if (peirce_ && spend) {
      for (const auto& b : universe_.members()) {
        Formula w = Formula::imp(g, b);
        if (!fresh(w)) continue;
        CXK_TRY(conjunction(s, RuleId::peirce, w, {{with({w}), g}}, depth, next));
      }
    }

    if (g_ex_middle_ && cfg_.allow_g_ex_middle_direct && spend) {
      for (const auto& a : universe_.members()) {
        if (!fresh(a)) continue;
        for (const auto& b : universe_.members()) {
          Formula w = Formula::imp(a, b);
          if (!fresh(w)) continue;
          CXK_TRY(conjunction(s, RuleId::g_ex_middle, std::make_pair(a, b),
                              {{with({w}), g}, {with({a}), g}}, depth, next));
        }
      }
    }
#undef CXK_TRY
    return {std::nullopt, loop_ref};
  }

  CalculusId calc_;
  SearchConfig cfg_;
  FormulaUniverse universe_;
  bool ex_middle_, peirce_, g_ex_middle_, connexive_;
  TwoValued semantics_;
  std::vector<Formula> atoms_;
  SearchStats stats_;
  std::unordered_map<Sequent, SequentProof, SequentHash> proved_;
  // Sequent -> largest remaining step allowance it was refuted with.
  std::unordered_map<Sequent, std::size_t, SequentHash> refuted_;
  bool limit_hit_ = false;
  std::unordered_map<Sequent, std::size_t, SequentHash> branch_;

 public:
  ProveResult decide(const Sequent& goal) {
    auto t0 = std::chrono::steady_clock::now();
    ProveResult r;
    try {
      auto proof = run(goal);
      r.verdict = proof ? Verdict::Provable : Verdict::Unprovable;
      r.proof = std::move(proof);
    } catch (const OverBudget&) {
      r.verdict = Verdict::ResourceExceeded;
    }
    r.stats = stats_;
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
};

inline void require_language(CalculusId calc, const Sequent& s) {
  auto check = [&](const Formula& f) {
    if (is_connexive(calc) && has_primed(f))
      throw ContractError("primed atom in " + print(f) + " is not allowed in " +
                          std::string(to_string(calc)));
    if (!is_connexive(calc) && has_negation(f))
      throw ContractError("~ in " + print(f) + " is not part of " + std::string(to_string(calc)));
  };
  for (const auto& f : s.context) check(f);
  check(s.succedent);
}

}  // namespace detail

/// Terminating cut-free backward proof search.
///
/// Logical rules are applied in G3 style (principal formula retained, full
/// context in both premises of the branching left rules), which under set
/// contexts are literal instances of the calculus schemas. (ex-middle) is
/// instantiated with atoms only, (Peirce) with β ranging over the closure of
/// the goal. A branch never revisits a sequent. Provable results are
/// memoized; a failure is memoized only when it did not depend on an
/// ancestor being blocked. Sequents with a two-valued countermodel (see
/// TwoValued) are refuted without expansion.
///
/// Starred calculi are decided through their unstarred equivalents and the
/// proof is rewritten with peirce_to_gem, unless
/// cfg.allow_g_ex_middle_direct asks for direct (g-ex-middle) search.
inline ProveResult decide(CalculusId calc, const Sequent& goal, const SearchConfig& cfg = {}) {
  if (cfg.node_budget == 0) throw ContractError("node_budget must be positive");
  detail::require_language(calc, goal);
  if (is_starred(calc) && !cfg.allow_g_ex_middle_direct) {
    ProveResult r = decide(unstarred(calc), goal, cfg);
    if (r.proof) r.proof = peirce_to_gem(*r.proof);
    return r;
  }
  ProveResult r = detail::BackwardSearch(calc, goal, cfg).decide(goal);
  if (r.proof) {
    if (!is_cut_free(*r.proof)) throw std::logic_error("decide produced a proof with cut");
    if (auto rep = check_proof(calc, *r.proof); !rep)
      throw std::logic_error("decide produced an invalid proof: " + rep.describe());
  }
  return r;
}

/// Cut elimination by re-derivation: checks `p`, then searches for a
/// cut-free proof of its conclusion.
inline SequentProof eliminate_cut(CalculusId calc, const SequentProof& p,
                                  const SearchConfig& cfg = {}) {
  if (auto rep = check_proof(calc, p); !rep) throw ContractError("eliminate_cut: " + rep.describe());
  if (is_cut_free(p)) return p;
  ProveResult r = decide(calc, p.conclusion(), cfg);
  if (r.verdict == Verdict::ResourceExceeded) throw ResourceExceeded(r.stats);
  if (!r.proof)
    throw std::logic_error("eliminate_cut: no cut-free proof found for a valid proof of " +
                           print(p.conclusion()));
  return *r.proof;
}

inline constexpr std::array<CalculusId, 4> kSeparationColumns = {
    CalculusId::SC, CalculusId::SC3, CalculusId::SMC, CalculusId::SCN};

struct SeparationRow {
  Formula formula;
  std::array<Verdict, 4> verdicts;  // sC, sC3, sMC, sCN
};

/// Decides ⇒ φ in sC, sC3, sMC and sCN for every φ.
inline std::vector<SeparationRow> separation_matrix(const std::vector<Formula>& formulas,
                                                    const SearchConfig& cfg = {}) {
  std::vector<SeparationRow> rows;
  rows.reserve(formulas.size());
  for (const auto& f : formulas) {
    SeparationRow row{f, {}};
    for (std::size_t i = 0; i < kSeparationColumns.size(); ++i)
      row.verdicts[i] = decide(kSeparationColumns[i], Sequent{{}, f}, cfg).verdict;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cxk
