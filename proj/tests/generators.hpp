#pragma once

// Random formulas, sequents and natural-deduction derivations for property
// tests. Everything is driven by an explicit std::mt19937_64 so failures
// reproduce from the seed.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "cxk/cxk.hpp"

namespace cxk::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

struct FormulaGen {
  std::vector<std::string> atoms{"p", "q", "r"};
  bool negation = true;

  /// A formula with exactly `size` nodes.
  Formula exact(Rng& rng, std::size_t size) const {
    if (size <= 1) return Formula::var(atoms[uniform(rng, 0, atoms.size() - 1)]);
    if (size == 2) {
      Formula a = exact(rng, 1);
      return negation ? Formula::neg(a) : a;
    }
    if (negation && coin(rng, 0.25)) return Formula::neg(exact(rng, size - 1));
    std::size_t left = uniform(rng, 1, size - 2);
    Formula a = exact(rng, left), b = exact(rng, size - 1 - left);
    switch (uniform(rng, 0, 2)) {
      case 0: return Formula::conj(a, b);
      case 1: return Formula::disj(a, b);
      default: return Formula::imp(a, b);
    }
  }

  /// A formula with between 1 and `max_size` nodes.
  Formula upto(Rng& rng, std::size_t max_size) const {
    return exact(rng, uniform(rng, 1, max_size));
  }
};

inline Sequent random_sequent(Rng& rng, const FormulaGen& g, std::size_t max_size,
                              std::size_t max_ctx) {
  std::vector<Formula> ctx;
  std::size_t n = uniform(rng, 0, max_ctx);
  for (std::size_t i = 0; i < n; ++i) ctx.push_back(g.upto(rng, max_size));
  return Sequent{Context(ctx), g.upto(rng, max_size)};
}

/// All formulas over `atoms` with exactly `size` nodes.
inline std::vector<Formula> all_formulas(const std::vector<std::string>& atoms, std::size_t size) {
  std::vector<std::vector<Formula>> by(size + 1);
  for (std::size_t n = 1; n <= size; ++n) {
    if (n == 1) {
      for (const auto& a : atoms) by[1].push_back(Formula::var(a));
      continue;
    }
    for (const auto& x : by[n - 1]) by[n].push_back(Formula::neg(x));
    for (std::size_t l = 1; l + 1 < n; ++l)
      for (const auto& x : by[l])
        for (const auto& y : by[n - 1 - l]) {
          by[n].push_back(Formula::conj(x, y));
          by[n].push_back(Formula::disj(x, y));
          by[n].push_back(Formula::imp(x, y));
        }
  }
  return by[size];
}

/// Goal-directed random derivations. With `plant` set, major premises of
/// eliminations are preferably built by an introduction or a case split,
/// which creates maximum formulas.
class DerivationGen {
 public:
  DerivationGen(NdSystemId sys, FormulaGen fg = {}) : sys_(sys), fg_(std::move(fg)) {}

  bool plant = false;
  std::size_t max_nodes = 15;

  Derivation generate(Rng& rng) {
    for (;;) {
      next_label_ = 1;
      std::map<Formula, int> hyps;
      Derivation d = derive(rng, fg_.upto(rng, 4), 5, hyps, false);
      if (node_count(d) <= max_nodes && node_count(d) > 1) return d;
    }
  }

 private:
  Formula side(Rng& rng) { return fg_.upto(rng, 2); }

  Derivation leaf(Rng& rng, const Formula& f, const std::map<Formula, int>& hyps) {
    auto it = hyps.find(f);
    if (it != hyps.end() && coin(rng, 0.8)) return Derivation::assume(f, it->second);
    return Derivation::assume(f);
  }

  Derivation with_hyp(Rng& rng, const Formula& goal, const Formula& h, int label, int depth,
                      std::map<Formula, int> hyps) {
    hyps[h] = label;
    return derive(rng, goal, depth, hyps, false);
  }

  Derivation intro(Rng& rng, const Formula& f, int depth, const std::map<Formula, int>& hyps) {
    auto sub = [&](const Formula& g) { return derive(rng, g, depth - 1, hyps, false); };
    switch (f.kind()) {
      case Kind::Imp: {
        int l = next_label_++;
        return Derivation::make(NdRuleId::imp_I, f,
                                {with_hyp(rng, f.rhs(), f.lhs(), l, depth - 1, hyps)}, l);
      }
      case Kind::And: return Derivation::make(NdRuleId::and_I, f, {sub(f.lhs()), sub(f.rhs())});
      case Kind::Or:
        return coin(rng) ? Derivation::make(NdRuleId::or_I1, f, {sub(f.lhs())})
                         : Derivation::make(NdRuleId::or_I2, f, {sub(f.rhs())});
      case Kind::Var: break;
      case Kind::Neg: {
        const Formula a = f.arg();
        switch (a.kind()) {
          case Kind::Neg: return Derivation::make(NdRuleId::negneg_I, f, {sub(a.arg())});
          case Kind::Imp: {
            int l = next_label_++;
            return Derivation::make(
                NdRuleId::neg_imp_I, f,
                {with_hyp(rng, Formula::neg(a.rhs()), a.lhs(), l, depth - 1, hyps)}, l);
          }
          case Kind::And:
            return coin(rng)
                       ? Derivation::make(NdRuleId::neg_and_I1, f, {sub(Formula::neg(a.lhs()))})
                       : Derivation::make(NdRuleId::neg_and_I2, f, {sub(Formula::neg(a.rhs()))});
          case Kind::Or:
            return Derivation::make(NdRuleId::neg_or_I, f,
                                    {sub(Formula::neg(a.lhs())), sub(Formula::neg(a.rhs()))});
          case Kind::Var: break;
        }
      }
    }
    return leaf(rng, f, hyps);
  }

  Derivation split(Rng& rng, const Formula& f, int depth, const std::map<Formula, int>& hyps) {
    std::vector<int> options{0, 1};
    if (admits(sys_, NdRuleId::EM)) options.push_back(2);
    if (admits(sys_, NdRuleId::GEM)) options.push_back(3);
    int l = next_label_++;
    switch (options[uniform(rng, 0, options.size() - 1)]) {
      case 0: {
        Formula a = side(rng), b = side(rng), m = Formula::disj(a, b);
        return Derivation::make(NdRuleId::or_E, f,
                                {derive(rng, m, depth - 1, hyps, false),
                                 with_hyp(rng, f, a, l, depth - 1, hyps),
                                 with_hyp(rng, f, b, l, depth - 1, hyps)},
                                l);
      }
      case 1: {
        Formula a = side(rng), b = side(rng), m = Formula::neg(Formula::conj(a, b));
        return Derivation::make(NdRuleId::neg_and_E, f,
                                {derive(rng, m, depth - 1, hyps, false),
                                 with_hyp(rng, f, Formula::neg(a), l, depth - 1, hyps),
                                 with_hyp(rng, f, Formula::neg(b), l, depth - 1, hyps)},
                                l);
      }
      case 2: {
        Formula a = side(rng);
        return Derivation::make(NdRuleId::EM, f,
                                {with_hyp(rng, f, Formula::neg(a), l, depth - 1, hyps),
                                 with_hyp(rng, f, a, l, depth - 1, hyps)},
                                l, a);
      }
      default: {
        Formula a = side(rng), w = Formula::imp(a, side(rng));
        return Derivation::make(NdRuleId::GEM, f,
                                {with_hyp(rng, f, w, l, depth - 1, hyps),
                                 with_hyp(rng, f, a, l, depth - 1, hyps)},
                                l, w);
      }
    }
  }

  // Major premise of an elimination: an introduction or a case split when
  // planting, otherwise anything.
  Derivation major(Rng& rng, const Formula& m, int depth, const std::map<Formula, int>& hyps) {
    if (plant && depth > 0 && coin(rng, 0.8)) {
      if (coin(rng, 0.3)) return split(rng, m, depth, hyps);
      return intro(rng, m, depth, hyps);
    }
    return derive(rng, m, depth, hyps, false);
  }

  Derivation elim(Rng& rng, const Formula& f, int depth, const std::map<Formula, int>& hyps) {
    auto sub = [&](const Formula& g) { return derive(rng, g, depth - 1, hyps, false); };
    std::vector<int> options{0, 1, 2, 3};
    if (f.is_neg()) options.insert(options.end(), {4, 5});
    switch (options[uniform(rng, 0, options.size() - 1)]) {
      case 0: {
        Formula a = side(rng);
        return Derivation::make(NdRuleId::imp_E, f,
                                {major(rng, Formula::imp(a, f), depth - 1, hyps), sub(a)});
      }
      case 1: {
        Formula b = side(rng);
        return coin(rng) ? Derivation::make(NdRuleId::and_E1, f,
                                            {major(rng, Formula::conj(f, b), depth - 1, hyps)})
                         : Derivation::make(NdRuleId::and_E2, f,
                                            {major(rng, Formula::conj(b, f), depth - 1, hyps)});
      }
      case 2:
        return Derivation::make(NdRuleId::negneg_E, f,
                                {major(rng, Formula::neg(Formula::neg(f)), depth - 1, hyps)});
      case 3: return split(rng, f, depth, hyps);
      case 4: {
        Formula a = side(rng), m = Formula::neg(Formula::imp(a, f.arg()));
        return Derivation::make(NdRuleId::neg_imp_E, f, {major(rng, m, depth - 1, hyps), sub(a)});
      }
      default: {
        Formula b = side(rng);
        return coin(rng)
                   ? Derivation::make(NdRuleId::neg_or_E1, f,
                                      {major(rng, Formula::neg(Formula::disj(f.arg(), b)),
                                             depth - 1, hyps)})
                   : Derivation::make(NdRuleId::neg_or_E2, f,
                                      {major(rng, Formula::neg(Formula::disj(b, f.arg())),
                                             depth - 1, hyps)});
      }
    }
  }

  Derivation derive(Rng& rng, const Formula& f, int depth, const std::map<Formula, int>& hyps,
                    bool) {
    if (depth <= 0 || coin(rng, 0.25)) return leaf(rng, f, hyps);
    if (coin(rng, plant ? 0.35 : 0.55)) return intro(rng, f, depth, hyps);
    return elim(rng, f, depth, hyps);
  }

  NdSystemId sys_;
  FormulaGen fg_;
  int next_label_ = 1;
};

}  // namespace cxk::testing
