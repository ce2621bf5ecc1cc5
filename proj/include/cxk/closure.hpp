#pragma once

#include <unordered_set>
#include <vector>

#include "cxk/sequent.hpp"

namespace cxk {

/// The finite formula universe that bounds backward proof search for a goal
/// sequent.
///
/// Members are closed under immediate subformulas and under the negated
/// components the ∼-rules introduce (∼α, ∼β for ∼(α∧β), ∼(α∨β); α, ∼β for
/// ∼(α→β)). Every member not already of the form ∼∼β also has its negation
/// in the set. Each member is ∼ᵏ of a subformula with k ≤ 3, so the size is
/// linear in the seed.
class FormulaUniverse {
 public:
  const Sequent& seed() const { return seed_; }
  const std::vector<Formula>& members() const { return members_; }
  bool contains(const Formula& f) const { return index_.count(f) != 0; }
  std::size_t size() const { return members_.size(); }

  /// Atoms occurring in the universe, in member order.
  std::vector<Formula> atoms() const {
    std::vector<Formula> out;
    for (const auto& f : members_)
      if (f.is_var()) out.push_back(f);
    return out;
  }

 private:
  friend FormulaUniverse closure(const Sequent& s, bool with_negation);
  explicit FormulaUniverse(Sequent seed) : seed_(std::move(seed)) {}

  void add(const Formula& f, std::vector<Formula>& work) {
    if (index_.insert(f).second) {
      members_.push_back(f);
      work.push_back(f);
    }
  }

  Sequent seed_;
  std::vector<Formula> members_;
  std::unordered_set<Formula, FormulaHash> index_;
};

/// Builds the universe of `s`. With `with_negation` false only subformulas
/// are collected; the positive calculi use that variant.
inline FormulaUniverse closure(const Sequent& s, bool with_negation = true) {
  FormulaUniverse u(s);
  std::vector<Formula> work;
  for (const auto& f : s.context) u.add(f, work);
  u.add(s.succedent, work);
  while (!work.empty()) {
    Formula f = work.back();
    work.pop_back();
    if (f.is_binary()) {
      u.add(f.lhs(), work);
      u.add(f.rhs(), work);
    } else if (f.is_neg()) {
      Formula a = f.arg();
      u.add(a, work);
      if (with_negation) {
        if (a.is_and() || a.is_or()) {
          u.add(Formula::neg(a.lhs()), work);
          u.add(Formula::neg(a.rhs()), work);
        } else if (a.is_imp()) {
          u.add(a.lhs(), work);
          u.add(Formula::neg(a.rhs()), work);
        }
      }
    }
    if (with_negation && !f.is_double_neg()) u.add(Formula::neg(f), work);
  }
  return u;
}

}  // namespace cxk
