#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cxk/natded.hpp"
#include "cxk/structural.hpp"

namespace cxk {

enum class ReductionKind {
  DetourImp,
  DetourAnd,
  DetourOr,
  PermOrE,
  DetourNegNeg,
  DetourNegImp,
  DetourNegAnd,
  PermNegAndE,
  DetourNegOr,
  PermEM,
  PermGEM,
};

inline std::string_view to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::DetourImp: return "DetourImp";
    case ReductionKind::DetourAnd: return "DetourAnd";
    case ReductionKind::DetourOr: return "DetourOr";
    case ReductionKind::PermOrE: return "PermOrE";
    case ReductionKind::DetourNegNeg: return "DetourNegNeg";
    case ReductionKind::DetourNegImp: return "DetourNegImp";
    case ReductionKind::DetourNegAnd: return "DetourNegAnd";
    case ReductionKind::PermNegAndE: return "PermNegAndE";
    case ReductionKind::DetourNegOr: return "DetourNegOr";
    case ReductionKind::PermEM: return "PermEM";
    case ReductionKind::PermGEM: return "PermGEM";
  }
  return "?";
}

/// The clause that applies at a maximum formula concluded by `r`.
inline ReductionKind reduction_kind(NdRuleId r) {
  switch (r) {
    case NdRuleId::imp_I: return ReductionKind::DetourImp;
    case NdRuleId::and_I: return ReductionKind::DetourAnd;
    case NdRuleId::or_I1:
    case NdRuleId::or_I2: return ReductionKind::DetourOr;
    case NdRuleId::or_E: return ReductionKind::PermOrE;
    case NdRuleId::negneg_I: return ReductionKind::DetourNegNeg;
    case NdRuleId::neg_imp_I: return ReductionKind::DetourNegImp;
    case NdRuleId::neg_and_I1:
    case NdRuleId::neg_and_I2: return ReductionKind::DetourNegAnd;
    case NdRuleId::neg_and_E: return ReductionKind::PermNegAndE;
    case NdRuleId::neg_or_I: return ReductionKind::DetourNegOr;
    case NdRuleId::EM: return ReductionKind::PermEM;
    case NdRuleId::GEM: return ReductionKind::PermGEM;
    default: throw std::invalid_argument("no reduction for " + std::string(to_string(r)));
  }
}

namespace detail {

inline void collect_binders(const Derivation& d, std::vector<int>& out) {
  if (d.discharge()) out.push_back(*d.discharge());
  for (const auto& p : d.premises()) collect_binders(p, out);
}

inline bool binders_distinct(const Derivation& d) {
  std::vector<int> b;
  collect_binders(d, b);
  std::sort(b.begin(), b.end());
  return std::adjacent_find(b.begin(), b.end()) == b.end();
}

// Premise indices holding the branches of a case-splitting rule.
inline std::vector<std::size_t> branch_indices(NdRuleId r) {
  if (r == NdRuleId::or_E || r == NdRuleId::neg_and_E) return {1, 2};
  return {0, 1};  // EM, GEM
}

inline bool is_case_split(NdRuleId r) {
  return r == NdRuleId::or_E || r == NdRuleId::neg_and_E || r == NdRuleId::EM ||
         r == NdRuleId::GEM;
}

// Pushes `parent` (whose premise `slot` is the case split `split`) into
// each branch of the split.
inline Derivation permute(const Derivation& split, const Derivation& parent, std::size_t slot,
                          int& next) {
  std::vector<Derivation> ps = split.premises();
  for (std::size_t b : branch_indices(split.rule())) {
    auto qs = parent.premises();
    qs[slot] = ps[b];
    ps[b] = freshen_labels(parent.with_premises(std::move(qs)), next);
  }
  return Derivation::make(split.rule(), parent.formula(), std::move(ps), split.discharge(),
                          split.hyp());
}

// Contracts a detour: `intro` is premise 0 of the elimination `elim`.
inline Derivation contract(const Derivation& intro, const Derivation& elim, int& next) {
  auto plug = [&](const Derivation& body, std::optional<int> label, const Derivation& e) {
    return label ? substitute_label(body, *label, e, next) : body;
  };
  switch (intro.rule()) {
    case NdRuleId::imp_I:
    case NdRuleId::neg_imp_I:
      return plug(intro.premise(0), intro.discharge(), elim.premise(1));
    case NdRuleId::and_I:
      return elim.rule() == NdRuleId::and_E1 ? intro.premise(0) : intro.premise(1);
    case NdRuleId::neg_or_I:
      return elim.rule() == NdRuleId::neg_or_E1 ? intro.premise(0) : intro.premise(1);
    case NdRuleId::negneg_I: return intro.premise(0);
    case NdRuleId::or_I1:
    case NdRuleId::neg_and_I1: return plug(elim.premise(1), elim.discharge(), intro.premise(0));
    case NdRuleId::or_I2:
    case NdRuleId::neg_and_I2: return plug(elim.premise(2), elim.discharge(), intro.premise(0));
    default: break;
  }
  throw std::logic_error("contract: " + std::string(to_string(intro.rule())) + " is not a detour");
}

}  // namespace detail

/// One reduction step at the maximum formula `at`.
inline Derivation reduce_step(NdSystemId sys, const Derivation& d, const MaxOccurrence& at) {
  if (auto rep = check_derivation(sys, d); !rep)
    throw ContractError("reduce_step: " + rep.describe());
  auto maxima = maximum_formulas(d);
  bool found = std::any_of(maxima.begin(), maxima.end(),
                           [&](const MaxOccurrence& m) { return m.path == at.path; });
  if (!found) throw ContractError("reduce_step: /" + path_to_string(at.path) + " is not a maximum formula");

  Derivation base = detail::binders_distinct(d) ? d : distinct_labels(d);
  int next = max_label(base) + 1;
  Path parent_path(at.path.begin(), at.path.end() - 1);
  const Derivation& parent = base.at(parent_path);
  const Derivation& node = parent.premise(0);

  Derivation replacement = detail::is_case_split(node.rule())
                               ? detail::permute(node, parent, 0, next)
                               : detail::contract(node, parent, next);
  Derivation out = base.replace_at(parent_path, replacement);
  if (auto rep = check_derivation(sys, out); !rep)
    throw std::logic_error("reduce_step produced an invalid derivation: " + rep.describe());
  return out;
}

/// Permutes the rule at `parent_path` into the branches of the case split
/// found at premise `slot` of it. The parent may be any rule; the result is
/// checked and rejected if the move breaks a discharge.
inline Derivation permute_down(NdSystemId sys, const Derivation& d, const Path& parent_path,
                               std::size_t slot) {
  if (auto rep = check_derivation(sys, d); !rep)
    throw ContractError("permute_down: " + rep.describe());
  Derivation base = detail::binders_distinct(d) ? d : distinct_labels(d);
  const Derivation& parent = base.at(parent_path);
  if (slot >= parent.premises().size()) throw ContractError("permute_down: no such premise");
  const Derivation& split = parent.premise(slot);
  if (!detail::is_case_split(split.rule()))
    throw ContractError("permute_down: premise is not (or_E), (neg_and_E), (EM) or (GEM)");
  int next = max_label(base) + 1;
  Derivation out = base.replace_at(parent_path, detail::permute(split, parent, slot, next));
  if (auto rep = check_derivation(sys, out); !rep)
    throw ContractError("permute_down: result is not a derivation: " + rep.describe());
  return out;
}

struct ReductionResult {
  Derivation derivation;
  std::size_t steps = 0;
  bool normal = false;  // false: stopped at the step limit
};

/// Reduces the leftmost-innermost maximum formula until none is left or
/// `max_steps` steps have been taken.
inline ReductionResult normalize_by_reduction(NdSystemId sys, const Derivation& d,
                                              std::size_t max_steps = 10'000) {
  if (auto rep = check_derivation(sys, d); !rep)
    throw ContractError("normalize_by_reduction: " + rep.describe());
  ReductionResult r{d, 0, false};
  while (true) {
    auto maxima = maximum_formulas(r.derivation);
    if (maxima.empty()) {
      r.normal = true;
      return r;
    }
    if (r.steps == max_steps) return r;
    r.derivation = reduce_step(sys, r.derivation, maxima.front());
    ++r.steps;
  }
}

}  // namespace cxk
