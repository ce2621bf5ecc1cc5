#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace cxk {

enum class CalculusId { LJP, LJP_PEIRCE, SC, SC3, SMC, SCN, SMC_STAR, SCN_STAR };

enum class RuleId {
  init1,
  init2,
  cut,
  imp_left,
  imp_right,
  and_left,
  and_right,
  or_left,
  or_right1,
  or_right2,
  neg_left,
  neg_right,
  neg_imp_left,
  neg_imp_right,
  neg_and_left,
  neg_and_right1,
  neg_and_right2,
  neg_or_left,
  neg_or_right,
  ex_middle,
  peirce,
  g_ex_middle,
};

inline constexpr std::array<CalculusId, 8> kAllCalculi = {
    CalculusId::LJP, CalculusId::LJP_PEIRCE, CalculusId::SC,       CalculusId::SC3,
    CalculusId::SMC, CalculusId::SCN,        CalculusId::SMC_STAR, CalculusId::SCN_STAR};

inline constexpr std::array<CalculusId, 6> kConnexiveCalculi = {
    CalculusId::SC,  CalculusId::SC3,      CalculusId::SMC,
    CalculusId::SCN, CalculusId::SMC_STAR, CalculusId::SCN_STAR};

inline constexpr std::array<RuleId, 22> kAllRules = {
    RuleId::init1,          RuleId::init2,          RuleId::cut,
    RuleId::imp_left,       RuleId::imp_right,      RuleId::and_left,
    RuleId::and_right,      RuleId::or_left,        RuleId::or_right1,
    RuleId::or_right2,      RuleId::neg_left,       RuleId::neg_right,
    RuleId::neg_imp_left,   RuleId::neg_imp_right,  RuleId::neg_and_left,
    RuleId::neg_and_right1, RuleId::neg_and_right2, RuleId::neg_or_left,
    RuleId::neg_or_right,   RuleId::ex_middle,      RuleId::peirce,
    RuleId::g_ex_middle};

inline constexpr int arity(RuleId r) {
  switch (r) {
    case RuleId::init1:
    case RuleId::init2: return 0;
    case RuleId::cut:
    case RuleId::imp_left:
    case RuleId::and_right:
    case RuleId::or_left:
    case RuleId::neg_imp_left:
    case RuleId::neg_and_left:
    case RuleId::neg_or_right:
    case RuleId::ex_middle:
    case RuleId::g_ex_middle: return 2;
    default: return 1;
  }
}

inline constexpr bool is_connexive(CalculusId c) {
  return c != CalculusId::LJP && c != CalculusId::LJP_PEIRCE;
}

inline constexpr bool is_starred(CalculusId c) {
  return c == CalculusId::SMC_STAR || c == CalculusId::SCN_STAR;
}

/// The calculus a starred system is decided through (sMC* ~ sMC, sCN* ~ sCN).
inline constexpr CalculusId unstarred(CalculusId c) {
  switch (c) {
    case CalculusId::SMC_STAR: return CalculusId::SMC;
    case CalculusId::SCN_STAR: return CalculusId::SCN;
    default: return c;
  }
}

inline constexpr CalculusId starred(CalculusId c) {
  switch (c) {
    case CalculusId::SMC: return CalculusId::SMC_STAR;
    case CalculusId::SCN: return CalculusId::SCN_STAR;
    default: return c;
  }
}

/// Rule table membership.
inline constexpr bool admits(CalculusId c, RuleId r) {
  switch (r) {
    case RuleId::init1:
    case RuleId::cut:
    case RuleId::imp_left:
    case RuleId::imp_right:
    case RuleId::and_left:
    case RuleId::and_right:
    case RuleId::or_left:
    case RuleId::or_right1:
    case RuleId::or_right2: return true;
    case RuleId::ex_middle:
      return c == CalculusId::SC3 || c == CalculusId::SCN || c == CalculusId::SCN_STAR;
    case RuleId::peirce:
      return c == CalculusId::LJP_PEIRCE || c == CalculusId::SMC || c == CalculusId::SCN;
    case RuleId::g_ex_middle: return is_starred(c);
    default: return is_connexive(c);
  }
}

inline constexpr std::string_view to_string(RuleId r) {
  switch (r) {
    case RuleId::init1: return "init1";
    case RuleId::init2: return "init2";
    case RuleId::cut: return "cut";
    case RuleId::imp_left: return "imp_left";
    case RuleId::imp_right: return "imp_right";
    case RuleId::and_left: return "and_left";
    case RuleId::and_right: return "and_right";
    case RuleId::or_left: return "or_left";
    case RuleId::or_right1: return "or_right1";
    case RuleId::or_right2: return "or_right2";
    case RuleId::neg_left: return "neg_left";
    case RuleId::neg_right: return "neg_right";
    case RuleId::neg_imp_left: return "neg_imp_left";
    case RuleId::neg_imp_right: return "neg_imp_right";
    case RuleId::neg_and_left: return "neg_and_left";
    case RuleId::neg_and_right1: return "neg_and_right1";
    case RuleId::neg_and_right2: return "neg_and_right2";
    case RuleId::neg_or_left: return "neg_or_left";
    case RuleId::neg_or_right: return "neg_or_right";
    case RuleId::ex_middle: return "ex_middle";
    case RuleId::peirce: return "peirce";
    case RuleId::g_ex_middle: return "g_ex_middle";
  }
  return "?";
}

inline std::optional<RuleId> rule_from_string(std::string_view s) {
  for (RuleId r : kAllRules)
    if (to_string(r) == s) return r;
  return std::nullopt;
}

/// Command-line spelling: ljp, ljp-peirce, sc, sc3, smc, scn, smc-star, scn-star.
inline constexpr std::string_view to_string(CalculusId c) {
  switch (c) {
    case CalculusId::LJP: return "ljp";
    case CalculusId::LJP_PEIRCE: return "ljp-peirce";
    case CalculusId::SC: return "sc";
    case CalculusId::SC3: return "sc3";
    case CalculusId::SMC: return "smc";
    case CalculusId::SCN: return "scn";
    case CalculusId::SMC_STAR: return "smc-star";
    case CalculusId::SCN_STAR: return "scn-star";
  }
  return "?";
}

inline std::optional<CalculusId> calculus_from_string(std::string_view s) {
  for (CalculusId c : kAllCalculi)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

}  // namespace cxk
