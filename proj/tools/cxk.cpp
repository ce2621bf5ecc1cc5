// cxk: command-line front end for the proof toolkit.
//
// Exit codes: 0 success / provable / valid, 1 definitive negative or
// contract violation, 2 input or usage error, 3 resource bound hit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "cxk/cxk.hpp"

namespace {

using namespace cxk;

constexpr int kOk = 0, kNegative = 1, kInputError = 2, kResource = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_input(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

CalculusId calculus_arg(const std::string& name) {
  auto c = calculus_from_string(name);
  if (!c) throw InputError("unknown calculus \"" + name + "\"");
  return *c;
}

NdSystemId system_arg(const std::string& name) {
  auto s = nd_system_from_string(name);
  if (!s) throw InputError("unknown natural deduction system \"" + name + "\"");
  return *s;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CXK_BUDGET")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("CXK_BUDGET must be a positive integer, got \"") + env + "\"");
  }
  return SearchConfig{}.node_budget;
}

Path path_arg(const std::string& text) {
  Path p;
  std::string t = text;
  if (!t.empty() && t.front() == '/') t.erase(0, 1);
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad path \"" + text + "\" (expected e.g. 0.1.0)");
    p.push_back(std::stoul(part));
  }
  return p;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// ---------------------------------------------------------------------------

int cmd_prove(const std::string& calc_name, const std::string& text,
              std::optional<std::uint64_t> budget) {
  CalculusId calc = calculus_arg(calc_name);
  Sequent s = parse_sequent(text, ParseOptions{!is_connexive(calc)});
  SearchConfig cfg;
  cfg.node_budget = budget ? *budget : default_budget();
  if (cfg.node_budget == 0) throw InputError("--budget must be positive");
  ProveResult r;
  try {
    r = decide(calc, s, cfg);
  } catch (const ContractError& e) {
    throw InputError(e.what());
  }
  std::cerr << to_string(r.verdict) << " (" << r.stats.nodes << " nodes, depth "
            << r.stats.max_depth << ", " << r.stats.seconds << " s)\n";
  if (r.proof) {
    emit(to_json(*r.proof));
    return kOk;
  }
  return r.verdict == Verdict::Unprovable ? kNegative : kResource;
}

int cmd_check(const std::string& kind, const std::string& system, const std::string& file) {
  CheckReport rep;
  if (kind == "sc") {
    CalculusId calc = calculus_arg(system);
    rep = check_proof(calc, proof_from_json(read_json(file)));
  } else if (kind == "nd") {
    NdSystemId sys = system_arg(system);
    rep = check_derivation(sys, derivation_from_json(read_json(file)));
  } else {
    throw InputError("check kind must be sc or nd, got \"" + kind + "\"");
  }
  std::cout << rep.describe() << "\n";
  return rep.ok() ? kOk : kNegative;
}

struct TransformArgs {
  std::string verb;
  std::string input;  // file, or formula for translate
  std::string system;
  std::string calculus;
  std::string extra;
  std::string at;
  std::size_t steps = 10'000;
  std::optional<std::uint64_t> budget;
};

int cmd_transform(const TransformArgs& a) {
  SearchConfig cfg;
  cfg.node_budget = a.budget ? *a.budget : default_budget();
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw InputError(std::string("missing ") + flag);
  };

  if (a.verb == "translate") {
    std::cout << print(translate_f(parse_formula(a.input))) << "\n";
    return kOk;
  }
  if (a.verb == "nd2sc") {
    need(a.system, "--system");
    emit(to_json(nd_to_sc(system_arg(a.system), derivation_from_json(read_json(a.input)))));
    return kOk;
  }
  if (a.verb == "sc2nd") {
    need(a.calculus, "--calculus");
    emit(to_json(sc_to_nd(calculus_arg(a.calculus), proof_from_json(read_json(a.input)))));
    return kOk;
  }
  if (a.verb == "normalize") {
    need(a.system, "--system");
    emit(to_json(normalize(system_arg(a.system), derivation_from_json(read_json(a.input)), cfg)));
    return kOk;
  }
  if (a.verb == "reduce") {
    need(a.system, "--system");
    NdSystemId sys = system_arg(a.system);
    Derivation d = derivation_from_json(read_json(a.input));
    if (!a.at.empty()) {
      Path p = path_arg(a.at);
      emit(to_json(reduce_step(sys, d, MaxOccurrence{p, d.at(p).formula()})));
      return kOk;
    }
    ReductionResult r = normalize_by_reduction(sys, d, a.steps);
    std::cerr << r.steps << " steps" << (r.normal ? "" : ", step limit reached") << "\n";
    emit(to_json(r.derivation));
    return r.normal ? kOk : kResource;
  }
  if (a.verb == "weaken") {
    need(a.calculus, "--calculus");
    std::vector<Formula> extra;
    if (!a.extra.empty()) {
      Sequent s = parse_sequent(a.extra + " => p", ParseOptions{true});
      extra = s.context.items();
    }
    emit(to_json(weaken_proof(calculus_arg(a.calculus), proof_from_json(read_json(a.input)),
                              Context(extra))));
    return kOk;
  }
  if (a.verb == "cutfree") {
    need(a.calculus, "--calculus");
    emit(to_json(eliminate_cut(calculus_arg(a.calculus), proof_from_json(read_json(a.input)), cfg)));
    return kOk;
  }
  throw InputError("unknown transform \"" + a.verb + "\"");
}

int cmd_matrix(const std::string& file, std::optional<std::uint64_t> budget) {
  SearchConfig cfg;
  cfg.node_budget = budget ? *budget : default_budget();
  std::istringstream in(read_input(file));
  std::cout << "formula,sC,sC3,sMC,sCN\n";
  bool error = false, timeout = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Formula f = Formula::var("p");
    try {
      f = parse_formula(line);
    } catch (const ParseError& e) {
      std::cerr << "line \"" << line << "\": " << e.what() << "\n";
      std::cout << csv_field(line) << ",ERR,ERR,ERR,ERR\n";
      error = true;
      continue;
    }
    auto rows = separation_matrix({f}, cfg);
    std::cout << csv_field(print(f));
    for (Verdict v : rows.front().verdicts) {
      std::cout << "," << (v == Verdict::Provable ? "Y" : v == Verdict::Unprovable ? "N" : "T");
      timeout |= v == Verdict::ResourceExceeded;
    }
    std::cout << "\n";
  }
  return error ? kInputError : timeout ? kResource : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof kernel and toolkit for the connexive logics C, C3, MC and CN"};
  app.require_subcommand(1);

  std::string calc, text, kind, system, file;
  std::optional<std::uint64_t> budget;
  TransformArgs targs;

  auto* prove = app.add_subcommand("prove", "Decide a sequent; prints the proof JSON if provable");
  prove->add_option("calculus", calc, "ljp, ljp-peirce, sc, sc3, smc, scn, smc-star, scn-star")
      ->required();
  prove->add_option("sequent", text, "\"a, b => c\" or a formula")->required();
  prove->add_option("--budget", budget, "node budget (default: $CXK_BUDGET or 5000000)");

  auto* check = app.add_subcommand("check", "Check a proof (sc) or derivation (nd) JSON file");
  check->add_option("kind", kind, "sc or nd")->required();
  check->add_option("system", system, "calculus or natural deduction system")->required();
  check->add_option("file", file, "JSON file, or - for stdin")->required();

  auto* transform = app.add_subcommand("transform", "Proof transformations");
  transform->add_option("verb", targs.verb,
                        "nd2sc, sc2nd, normalize, reduce, weaken, translate, cutfree")
      ->required();
  transform->add_option("input", targs.input, "JSON file, - for stdin, or formula for translate")
      ->required();
  transform->add_option("--system", targs.system, "nc, nc3, nmc, ncn");
  transform->add_option("--calculus", targs.calculus, "sequent calculus name");
  transform->add_option("--extra", targs.extra, "formulas to weaken by, comma separated");
  transform->add_option("--at", targs.at, "reduce: path of the maximum formula, e.g. 0.1");
  transform->add_option("--steps", targs.steps, "reduce: step limit (default 10000)");
  transform->add_option("--budget", targs.budget, "node budget for cut elimination");

  auto* matrix = app.add_subcommand("matrix", "Decide each formula of a file in sC, sC3, sMC, sCN");
  matrix->add_option("file", file, "one formula per line, or - for stdin")->required();
  matrix->add_option("--budget", budget, "node budget per cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*prove) return cmd_prove(calc, text, budget);
    if (*check) return cmd_check(kind, system, file);
    if (*transform) return cmd_transform(targs);
    if (*matrix) return cmd_matrix(file, budget);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceExceeded& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return kResource;
  } catch (const ContractError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kNegative;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
