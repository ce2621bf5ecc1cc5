#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cxk/calculus.hpp"
#include "cxk/sequent.hpp"

namespace cxk {

/// Two-valued countermodel search used to prune backward proof search.
///
/// Every atom p gets two independent truth values, one for p and one for
/// ∼p; compound negations are read through the usual connexive equivalences
/// (∼∼α as α, ∼(α∧β) as ∼α∨∼β, ∼(α∨β) as ∼α∧∼β, ∼(α→β) as α→∼β). Calculi
/// with (ex-middle) only see valuations where p or ∼p holds. All rules of
/// every calculus preserve truth under this reading, so a falsified sequent
/// is unprovable. The converse is not claimed.
class TwoValued {
 public:
  /// Truth sets over at most this many variables; larger inputs disable
  /// the filter.
  static constexpr std::size_t kMaxVars = 16;

  TwoValued(CalculusId calc, const std::vector<Formula>& atoms)
      : connexive_(is_connexive(calc)) {
    std::size_t per = connexive_ ? 2 : 1;
    if (atoms.size() * per > kMaxVars) return;
    vars_ = atoms.size() * per;
    rows_ = std::size_t{1} << vars_;
    words_ = (rows_ + 63) / 64;
    allowed_ = ones();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      Mask pos = variable(i * per);
      masks_.emplace(atoms[i], pos);
      if (connexive_) {
        Mask neg = variable(i * per + 1);
        masks_.emplace(Formula::neg(atoms[i]), neg);
        if (admits(calc, RuleId::ex_middle)) allowed_ = meet(allowed_, join(pos, neg));
      }
    }
    enabled_ = true;
  }

  bool enabled() const { return enabled_; }

  /// True when some admissible valuation makes every context member true
  /// and the succedent false.
  bool falsifiable(const Sequent& s) {
    if (!enabled_) return false;
    Mask m = allowed_;
    for (const auto& f : s.context) m = meet(m, truth(f));
    m = meet(m, complement(truth(s.succedent)));
    for (auto w : m)
      if (w) return true;
    return false;
  }

 private:
  using Mask = std::vector<std::uint64_t>;

  Mask ones() const {
    Mask m(words_, ~std::uint64_t{0});
    if (rows_ % 64) m.back() = (std::uint64_t{1} << (rows_ % 64)) - 1;
    return m;
  }
  Mask variable(std::size_t v) const {
    Mask m(words_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      if ((r >> v) & 1) m[r / 64] |= std::uint64_t{1} << (r % 64);
    return m;
  }
  static Mask meet(Mask a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
    return a;
  }
  static Mask join(Mask a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
    return a;
  }
  Mask complement(Mask a) const {
    Mask all = ones();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = ~a[i] & all[i];
    return a;
  }
  Mask implies(const Mask& a, const Mask& b) const { return join(complement(a), b); }

  const Mask& truth(const Formula& f) {
    if (auto it = masks_.find(f); it != masks_.end()) return it->second;
    Mask m;
    switch (f.kind()) {
      case Kind::Var: throw std::logic_error("TwoValued: atom " + print(f) + " not registered");
      case Kind::And: m = meet(truth(f.lhs()), truth(f.rhs())); break;
      case Kind::Or: m = join(truth(f.lhs()), truth(f.rhs())); break;
      case Kind::Imp: m = implies(truth(f.lhs()), truth(f.rhs())); break;
      case Kind::Neg: {
        const Formula a = f.arg();
        switch (a.kind()) {
          case Kind::Var: throw std::logic_error("TwoValued: atom " + print(a) + " not registered");
          case Kind::Neg: m = truth(a.arg()); break;
          case Kind::And:
            m = join(truth(Formula::neg(a.lhs())), truth(Formula::neg(a.rhs())));
            break;
          case Kind::Or:
            m = meet(truth(Formula::neg(a.lhs())), truth(Formula::neg(a.rhs())));
            break;
          case Kind::Imp: m = implies(truth(a.lhs()), truth(Formula::neg(a.rhs()))); break;
        }
        break;
      }
    }
    return masks_.emplace(f, std::move(m)).first->second;
  }

  bool connexive_;
  bool enabled_ = false;
  std::size_t vars_ = 0, rows_ = 0, words_ = 0;
  Mask allowed_;
  std::unordered_map<Formula, Mask, FormulaHash> masks_;
};

}  // namespace cxk
