#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cxk/calculus.hpp"
#include "cxk/sequent.hpp"

namespace cxk {

/// What a proof node exhibits: nothing, one formula (the principal formula,
/// the cut formula, the ex-middle α, or the Peirce witness α→β), or the α/β
/// pair of g-ex-middle.
using Principal = std::variant<std::monostate, Formula, std::pair<Formula, Formula>>;

/// A rule-annotated sequent proof. Nodes store full sequents and are shared
/// immutably, so copying a proof is cheap.
class SequentProof {
 public:
  SequentProof(Sequent conclusion, RuleId rule, Principal principal,
               std::vector<SequentProof> premises = {})
      : node_(std::make_shared<const Node>(
            Node{std::move(conclusion), rule, std::move(principal), std::move(premises)})) {}

  const Sequent& conclusion() const { return node_->conclusion; }
  RuleId rule() const { return node_->rule; }
  const Principal& principal() const { return node_->principal; }
  const std::vector<SequentProof>& premises() const { return node_->premises; }
  const SequentProof& premise(std::size_t i) const { return node_->premises.at(i); }

  const Formula* principal_formula() const { return std::get_if<Formula>(&node_->principal); }
  const std::pair<Formula, Formula>* principal_pair() const {
    return std::get_if<std::pair<Formula, Formula>>(&node_->principal);
  }

  bool same_node(const SequentProof& o) const { return node_ == o.node_; }

 private:
  struct Node {
    Sequent conclusion;
    RuleId rule;
    Principal principal;
    std::vector<SequentProof> premises;
  };
  std::shared_ptr<const Node> node_;
};

inline bool is_cut_free(const SequentProof& p) {
  if (p.rule() == RuleId::cut) return false;
  for (const auto& q : p.premises())
    if (!is_cut_free(q)) return false;
  return true;
}

inline std::size_t node_count(const SequentProof& p) {
  std::size_t n = 1;
  for (const auto& q : p.premises()) n += node_count(q);
  return n;
}

inline std::size_t height(const SequentProof& p) {
  std::size_t h = 0;
  for (const auto& q : p.premises()) h = std::max(h, height(q));
  return h + 1;
}

/// Raised when a JSON document does not have the proof or derivation shape.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline nlohmann::json sequent_to_json(const Sequent& s) {
  return {{"ctx", s.context.sorted_text()}, {"suc", print(s.succedent)}};
}

inline nlohmann::json to_json(const SequentProof& p) {
  nlohmann::json j;
  j["rule"] = std::string(to_string(p.rule()));
  j["sequent"] = sequent_to_json(p.conclusion());
  if (const auto* f = p.principal_formula())
    j["principal"] = print(*f);
  else if (const auto* pr = p.principal_pair())
    j["principal"] = nlohmann::json::array({print(pr->first), print(pr->second)});
  else
    j["principal"] = nullptr;
  j["premises"] = nlohmann::json::array();
  for (const auto& q : p.premises()) j["premises"].push_back(to_json(q));
  return j;
}

namespace detail {

inline Formula json_formula(const nlohmann::json& j, ParseOptions opts) {
  if (!j.is_string()) throw FormatError("expected a formula string");
  try {
    return parse_formula(j.get<std::string>(), opts);
  } catch (const ParseError& e) {
    throw FormatError("bad formula \"" + j.get<std::string>() + "\": " + e.what());
  }
}

}  // namespace detail

inline Sequent sequent_from_json(const nlohmann::json& j, ParseOptions opts = {true}) {
  if (!j.is_object() || !j.contains("ctx") || !j.contains("suc") || !j["ctx"].is_array())
    throw FormatError("sequent must be an object with \"ctx\" array and \"suc\"");
  std::vector<Formula> ctx;
  for (const auto& f : j["ctx"]) ctx.push_back(detail::json_formula(f, opts));
  return Sequent{Context(std::move(ctx)), detail::json_formula(j["suc"], opts)};
}

inline SequentProof proof_from_json(const nlohmann::json& j, ParseOptions opts = {true}) {
  if (!j.is_object()) throw FormatError("proof node must be an object");
  if (!j.contains("rule") || !j["rule"].is_string()) throw FormatError("missing \"rule\"");
  auto rule = rule_from_string(j["rule"].get<std::string>());
  if (!rule) throw FormatError("unknown rule \"" + j["rule"].get<std::string>() + "\"");
  if (!j.contains("sequent")) throw FormatError("missing \"sequent\"");
  Sequent s = sequent_from_json(j["sequent"], opts);
  Principal pr;
  if (j.contains("principal") && !j["principal"].is_null()) {
    const auto& pj = j["principal"];
    if (pj.is_array()) {
      if (pj.size() != 2) throw FormatError("principal pair must have two entries");
      pr = std::make_pair(detail::json_formula(pj[0], opts), detail::json_formula(pj[1], opts));
    } else {
      pr = detail::json_formula(pj, opts);
    }
  }
  std::vector<SequentProof> premises;
  if (j.contains("premises")) {
    if (!j["premises"].is_array()) throw FormatError("\"premises\" must be an array");
    for (const auto& q : j["premises"]) premises.push_back(proof_from_json(q, opts));
  }
  return SequentProof(std::move(s), *rule, std::move(pr), std::move(premises));
}

}  // namespace cxk
