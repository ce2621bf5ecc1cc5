#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace cxk {

enum class Kind : std::uint8_t { Var, And, Or, Imp, Neg };

namespace detail {

struct Node {
  Kind kind;
  std::string name;  // Var only
  bool primed = false;
  const Node* lhs = nullptr;
  const Node* rhs = nullptr;
  std::uint32_t id = 0;
  std::uint32_t size = 1;
};

// Hash-consing table. Every structurally distinct formula is allocated once
// and lives for the rest of the process, so equality is pointer equality.
class FormulaTable {
 public:
  static FormulaTable& instance() {
    static FormulaTable table;
    return table;
  }

  const Node* intern(Kind kind, std::string_view name, bool primed, const Node* lhs,
                     const Node* rhs) {
    Key key{kind, std::string(name), primed, lhs ? lhs->id : 0u, rhs ? rhs->id : 0u};
    std::lock_guard lock(mu_);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    Node& n = nodes_.emplace_back();
    n.kind = kind;
    n.name = key.name;
    n.primed = primed;
    n.lhs = lhs;
    n.rhs = rhs;
    n.id = static_cast<std::uint32_t>(nodes_.size());
    n.size = 1 + (lhs ? lhs->size : 0) + (rhs ? rhs->size : 0);
    index_.emplace(std::move(key), &n);
    return &n;
  }

 private:
  struct Key {
    Kind kind;
    std::string name;
    bool primed;
    std::uint32_t lhs, rhs;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = std::hash<std::string>{}(k.name);
      h = h * 1000003u ^ static_cast<std::size_t>(k.kind);
      h = h * 1000003u ^ static_cast<std::size_t>(k.primed);
      h = h * 1000003u ^ k.lhs;
      h = h * 1000003u ^ k.rhs;
      return h;
    }
  };

  std::mutex mu_;
  std::deque<Node> nodes_;
  std::unordered_map<Key, const Node*, KeyHash> index_;
};

}  // namespace detail

/// A propositional formula over atoms with ∧, ∨, → and connexive negation ∼.
///
/// Formulas are immutable, hash-consed values: two formulas compare equal iff
/// they are syntactically identical, and copying is a pointer copy. The
/// ordering is by creation order of the underlying node, which is stable
/// within a process but not across processes; use print() for anything that
/// must be deterministic across runs.
class Formula {
 public:
  static Formula var(std::string_view name, bool primed = false) {
    return Formula(table().intern(Kind::Var, name, primed, nullptr, nullptr));
  }
  static Formula conj(Formula a, Formula b) { return binary(Kind::And, a, b); }
  static Formula disj(Formula a, Formula b) { return binary(Kind::Or, a, b); }
  static Formula imp(Formula a, Formula b) { return binary(Kind::Imp, a, b); }
  static Formula neg(Formula a) {
    return Formula(table().intern(Kind::Neg, {}, false, a.node_, nullptr));
  }

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_and() const { return kind() == Kind::And; }
  bool is_or() const { return kind() == Kind::Or; }
  bool is_imp() const { return kind() == Kind::Imp; }
  bool is_neg() const { return kind() == Kind::Neg; }
  bool is_binary() const { return is_and() || is_or() || is_imp(); }
  /// ∼p for an atom p.
  bool is_neg_atom() const { return is_neg() && arg().is_var(); }
  /// ∼∼α
  bool is_double_neg() const { return is_neg() && arg().is_neg(); }
  bool is_neg_of(Kind k) const { return is_neg() && arg().kind() == k; }

  const std::string& name() const { return node_->name; }
  bool primed() const { return node_->primed; }

  /// Left operand of a binary connective.
  Formula lhs() const { return Formula(node_->lhs); }
  /// Right operand of a binary connective.
  Formula rhs() const { return Formula(node_->rhs); }
  /// Operand of ∼.
  Formula arg() const { return Formula(node_->lhs); }

  std::size_t size() const { return node_->size; }
  std::uint32_t id() const { return node_->id; }

  bool operator==(const Formula& o) const { return node_ == o.node_; }
  bool operator<(const Formula& o) const { return node_->id < o.node_->id; }

 private:
  explicit Formula(const detail::Node* n) : node_(n) {}
  static detail::FormulaTable& table() { return detail::FormulaTable::instance(); }
  static Formula binary(Kind k, Formula a, Formula b) {
    return Formula(table().intern(k, {}, false, a.node_, b.node_));
  }

  const detail::Node* node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.id(); }
};

/// Raised by the formula and sequent parsers.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected)
      : std::runtime_error(describe(offset, expected)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string describe(std::size_t offset, const std::vector<std::string>& expected) {
    std::string s = "syntax error at offset " + std::to_string(offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) s += i + 1 == expected.size() ? " or " : ", ";
      s += expected[i];
    }
    return s;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

struct ParseOptions {
  /// Accept `p'` atoms (the primed copy used by the embedding target).
  bool allow_primed = false;
};

namespace detail {

// Recursive descent over the grammar
//   formula := imp
//   imp     := or ("->" imp)?
//   or      := and ("|" and)*
//   and     := neg ("&" neg)*
//   neg     := "~" neg | atom | "(" formula ")"
//   atom    := [a-z][a-zA-Z0-9_]* "'"?
class FormulaParser {
 public:
  FormulaParser(std::string_view text, ParseOptions opts) : text_(text), opts_(opts) {}

  Formula parse_all() {
    Formula f = parse_imp();
    skip_ws();
    if (pos_ != text_.size()) fail({"'->'", "'|'", "'&'", "end of input"});
    return f;
  }

  // Parses one formula and leaves the cursor after it; used by the sequent
  // parser, which owns the surrounding punctuation.
  Formula parse_prefix() { return parse_imp(); }
  std::size_t pos() const { return pos_; }
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }
  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected));
  }

 private:
  Formula parse_imp() {
    Formula lhs = parse_or();
    if (peek_arrow()) {
      pos_ += 2;
      return Formula::imp(lhs, parse_imp());
    }
    return lhs;
  }
  Formula parse_or() {
    Formula f = parse_and();
    while (eat("|")) f = Formula::disj(f, parse_and());
    return f;
  }
  Formula parse_and() {
    Formula f = parse_neg();
    while (eat("&")) f = Formula::conj(f, parse_neg());
    return f;
  }
  Formula parse_neg() {
    skip_ws();
    if (eat("~")) return Formula::neg(parse_neg());
    if (eat("(")) {
      Formula f = parse_imp();
      if (!eat(")")) fail({"')'", "'->'", "'|'", "'&'"});
      return f;
    }
    if (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') return parse_atom();
    fail({"'~'", "'('", "atom"});
  }
  Formula parse_atom() {
    std::size_t start = pos_++;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                c == '_';
      if (!ok) break;
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    bool primed = false;
    if (pos_ < text_.size() && text_[pos_] == '\'') {
      if (!opts_.allow_primed) fail({"atom without prime (primed atoms are disabled)"});
      primed = true;
      ++pos_;
    }
    return Formula::var(name, primed);
  }
  bool peek_arrow() {
    skip_ws();
    return text_.substr(pos_, 2) == "->";
  }

  std::string_view text_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
};

inline int precedence(const Formula& f) {
  switch (f.kind()) {
    case Kind::Imp: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    default: return 4;
  }
}

inline void print_to(std::string& out, const Formula& f, bool unicode) {
  auto sub = [&](const Formula& g, bool parens) {
    if (parens) out += '(';
    print_to(out, g, unicode);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Kind::Var:
      out += f.name();
      if (f.primed()) out += '\'';
      return;
    case Kind::Neg:
      out += unicode ? "∼" : "~";
      sub(f.arg(), f.arg().is_binary());
      return;
    case Kind::Imp:
      sub(f.lhs(), f.lhs().is_imp());
      out += unicode ? " → " : " -> ";
      sub(f.rhs(), false);
      return;
    case Kind::Or:
    case Kind::And: {
      int p = precedence(f);
      sub(f.lhs(), precedence(f.lhs()) < p);
      if (f.is_or())
        out += unicode ? " ∨ " : " | ";
      else
        out += unicode ? " ∧ " : " & ";
      sub(f.rhs(), precedence(f.rhs()) <= p);
      return;
    }
  }
}

}  // namespace detail

inline Formula parse_formula(std::string_view text, ParseOptions opts = {}) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw ParseError(0, {"formula"});
  return detail::FormulaParser(text, opts).parse_all();
}

/// Minimal-parenthesis rendering; `->` is right-associative, `&`/`|` left.
inline std::string print(const Formula& f, bool unicode = false) {
  std::string out;
  detail::print_to(out, f, unicode);
  return out;
}

/// True when any atom of `f` is primed.
inline bool has_primed(const Formula& f) {
  if (f.is_var()) return f.primed();
  if (f.is_neg()) return has_primed(f.arg());
  return has_primed(f.lhs()) || has_primed(f.rhs());
}

inline bool has_negation(const Formula& f) {
  if (f.is_var()) return false;
  if (f.is_neg()) return true;
  return has_negation(f.lhs()) || has_negation(f.rhs());
}

inline void collect_atoms(const Formula& f, std::set<Formula>& out) {
  if (f.is_var()) {
    out.insert(f);
  } else if (f.is_neg()) {
    collect_atoms(f.arg(), out);
  } else {
    collect_atoms(f.lhs(), out);
    collect_atoms(f.rhs(), out);
  }
}

namespace literals {
inline Formula operator""_f(const char* s, std::size_t n) {
  return parse_formula(std::string_view(s, n), ParseOptions{true});
}
}  // namespace literals

}  // namespace cxk
