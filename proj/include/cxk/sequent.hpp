#pragma once

#include <algorithm>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "cxk/formula.hpp"

namespace cxk {

/// A finite set of formulas, kept as a sorted vector without duplicates.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<Formula> fs) : items_(fs) { normalize(); }
  explicit Context(std::vector<Formula> fs) : items_(std::move(fs)) { normalize(); }

  bool contains(const Formula& f) const {
    return std::binary_search(items_.begin(), items_.end(), f);
  }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Formula>& items() const { return items_; }

  Context with(const Formula& f) const {
    if (contains(f)) return *this;
    Context c;
    c.items_.reserve(items_.size() + 1);
    auto it = std::lower_bound(items_.begin(), items_.end(), f);
    c.items_.insert(c.items_.end(), items_.begin(), it);
    c.items_.push_back(f);
    c.items_.insert(c.items_.end(), it, items_.end());
    return c;
  }
  Context without(const Formula& f) const {
    Context c;
    c.items_.reserve(items_.size());
    for (const auto& g : items_)
      if (!(g == f)) c.items_.push_back(g);
    return c;
  }
  Context unite(const Context& o) const {
    Context c;
    c.items_.reserve(items_.size() + o.items_.size());
    std::set_union(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
                   std::back_inserter(c.items_));
    return c;
  }
  Context minus(const Context& o) const {
    Context c;
    std::set_difference(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
                        std::back_inserter(c.items_));
    return c;
  }
  bool subset_of(const Context& o) const {
    return std::includes(o.items_.begin(), o.items_.end(), items_.begin(), items_.end());
  }

  /// Printed forms sorted by text; the order used in every serialization.
  std::vector<std::string> sorted_text(bool unicode = false) const {
    std::vector<std::string> out;
    out.reserve(items_.size());
    for (const auto& f : items_) out.push_back(print(f, unicode));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const Context&) const = default;

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<Formula> items_;
};

/// Γ ⇒ γ with Γ a set.
struct Sequent {
  Context context;
  Formula succedent;

  bool operator==(const Sequent&) const = default;
};

struct SequentHash {
  std::size_t operator()(const Sequent& s) const noexcept {
    std::size_t h = s.succedent.id();
    for (const auto& f : s.context) h = h * 0x9E3779B97F4A7C15ull + f.id();
    return h;
  }
};

inline std::string print(const Sequent& s, bool unicode = false) {
  std::string out;
  auto ctx = s.context.sorted_text(unicode);
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) out += ", ";
    out += ctx[i];
  }
  if (!out.empty()) out += ' ';
  out += unicode ? "⇒ " : "=> ";
  out += print(s.succedent, unicode);
  return out;
}

/// Parses `a, b => c`. Without `=>` the text is a single formula and the
/// context is empty.
inline Sequent parse_sequent(std::string_view text, ParseOptions opts = {}) {
  auto arrow = text.find("=>");
  if (arrow == std::string_view::npos) return Sequent{{}, parse_formula(text, opts)};
  std::vector<Formula> ctx;
  std::string_view lhs = text.substr(0, arrow);
  if (lhs.find_first_not_of(" \t\r\n") != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = lhs.find(',', start);
      std::string_view piece = lhs.substr(start, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - start);
      try {
        ctx.push_back(parse_formula(piece, opts));
      } catch (const ParseError& e) {
        throw ParseError(start + e.offset(), e.expected());
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  std::string_view rhs = text.substr(arrow + 2);
  try {
    return Sequent{Context(std::move(ctx)), parse_formula(rhs, opts)};
  } catch (const ParseError& e) {
    throw ParseError(arrow + 2 + e.offset(), e.expected());
  }
}

}  // namespace cxk
