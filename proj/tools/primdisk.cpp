// Command-line front end for primitivity tests and disk surgery reports.
//
// Exit codes: 0 success, 1 input/IO error or failed reference check,
// 2 usage error, 3 word is not primitive (`primitive` only),
// 4 scenario validation failure, 5 oracle node cap exceeded.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "primdisk/primitivity.hpp"
#include "primdisk/report.hpp"
#include "primdisk/scenario.hpp"

namespace {

using namespace primdisk;

enum Exit : int {
  kOk = 0,
  kError = 1,
  kUsage = 2,
  kNotPrimitive = 3,
  kInvalid = 4,
  kCapExceeded = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_violations(const ValidationResult& r) {
  for (const auto& v : r.violations) {
    std::cerr << "violation [" << violation_name(v.kind) << "]: " << v.message << "\n";
  }
}

std::string scenario_label(const std::string& arg, const Scenario& s) {
  return arg + " (rank " + std::to_string(s.system.rank.value()) + ")";
}

// A path on disk wins over a built-in name.
Scenario resolve_scenario(const std::string& arg, std::optional<int> genus, bool validate) {
  if (std::filesystem::exists(arg)) {
    Scenario s = load_scenario(arg, false);
    if (genus) s.system.rank = Rank(*genus);
    if (validate) {
      auto r = validate_system(s.system);
      if (!r.ok()) throw InvalidSystem(std::move(r));
    }
    return s;
  }
  if (is_builtin_name(arg)) {
    try {
      return builtin_scenario(arg, genus.value_or(3));
    } catch (const InvalidSystem&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw ScenarioError(arg + ": no such file and not a built-in scenario name");
}

std::size_t oracle_cap() {
  if (const char* env = std::getenv("PRIMDISK_ORACLE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("PRIMDISK_ORACLE_CAP is not a number: ") + env);
    }
  }
  return kDefaultOracleCap;
}

int cmd_reduce(const std::string& text, std::optional<int> rank) {
  Word w;
  try {
    w = rank ? parse_word(text, Rank(*rank)) : parse_word(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << format_word(reduce(w)) << "\n";
  return kOk;
}

int cmd_primitive(const std::string& text, int rank_value, bool no_oz) {
  Word w;
  std::optional<Rank> rank;
  try {
    rank.emplace(rank_value);
    w = parse_word(text, *rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto v = is_primitive(w, *rank, {.use_oz = !no_oz});
  std::cout << "word: " << format_word(w) << "\n"
            << "cyclic reduction: " << format_word(v.start) << " (length " << v.start.size()
            << ")\n"
            << "verdict: " << (v.primitive ? "primitive" : "not primitive") << " in F_"
            << rank->value() << "\n"
            << "oz fast path: " << (v.oz_fired ? "fired" : "not fired") << "\n"
            << "certificate: " << v.certificate.size() << " step(s)\n";
  const auto trail = replay_certificate(v.start, v.certificate);
  for (std::size_t i = 0; i < v.certificate.size(); ++i) {
    std::cout << "  " << i + 1 << ". " << v.certificate[i].describe() << " -> "
              << format_word(trail[i + 1]) << " (length " << trail[i + 1].size() << ")\n";
  }
  std::cout << "reached: " << format_word(v.reached) << " (length " << v.reached.size() << ")\n";
  return v.primitive ? kOk : kNotPrimitive;
}

int cmd_oracle(int rank_value, int max_len) {
  if (max_len < 1) throw UsageError("--max-len must be at least 1");
  std::optional<Rank> rank;
  try {
    rank.emplace(rank_value);
  } catch (const RankError& e) {
    throw UsageError(e.what());
  }
  for (const auto& w : oracle_primitives(*rank, static_cast<std::size_t>(max_len), oracle_cap())) {
    std::cout << format_word(w) << "\n";
  }
  return kOk;
}

int cmd_validate(const std::string& arg, std::optional<int> genus) {
  Scenario s = resolve_scenario(arg, genus, false);
  const auto r = validate_system(s.system);
  if (!r.ok()) {
    print_violations(r);
    std::cout << scenario_label(arg, s) << ": invalid, " << r.violations.size()
              << " violation(s)\n";
    return kInvalid;
  }
  std::cout << scenario_label(arg, s) << ": valid, " << s.system.chord_count()
            << " intersection arc(s)\n";
  return kOk;
}

int cmd_surgeries(const std::string& arg, std::optional<int> genus, bool machine) {
  Scenario s = resolve_scenario(arg, genus, true);
  const Report r = run_report(s, scenario_label(arg, s));
  if (machine) {
    std::cout << render_machine(r)["outcomes"].dump(2) << "\n";
  } else {
    std::cout << render_surgeries(r);
  }
  return kOk;
}

int cmd_closure(const std::string& arg, std::optional<int> genus, bool machine, bool no_oz) {
  Scenario s = resolve_scenario(arg, genus, true);
  const Report r = run_report(s, scenario_label(arg, s), {.use_oz = !no_oz});
  if (machine) {
    std::cout << render_machine(r).dump(2) << "\n";
  } else {
    std::cout << render_text(r);
  }
  if (r.reference.performed && !r.reference.passed) {
    std::cerr << "error: scenario does not reproduce the reference outcome words\n";
    return kError;
  }
  return kOk;
}

int cmd_scenario(const std::string& name, int genus, const std::string& out) {
  Scenario s;
  try {
    s = builtin_scenario(name, genus);
  } catch (const InvalidSystem&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (out.empty() || out == "-") {
    std::cout << dump_scenario(s);
  } else {
    save_scenario(s, out);
    std::cout << "wrote " << out << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"primdisk: primitivity of free-group words and disk surgery on Heegaard disks"};
  app.require_subcommand(1);

  std::string word_text;
  std::string scenario_arg;
  std::optional<int> rank_opt;
  std::optional<int> genus_opt;
  int rank = 0;
  int max_len = 0;
  bool no_oz = false;
  bool machine = false;
  std::string builtin_name;
  int builtin_genus = 3;
  std::string out_path;

  auto* reduce_cmd = app.add_subcommand("reduce", "Freely reduce a word");
  reduce_cmd->add_option("word", word_text, "Word, e.g. \"x1 x2^-1\"")->required();
  reduce_cmd->add_option("--rank", rank_opt, "Bound generator indices by this rank");

  auto* prim_cmd = app.add_subcommand("primitive", "Decide whether a word is primitive");
  prim_cmd->add_option("--rank", rank, "Rank of the free group")->required();
  prim_cmd->add_option("word", word_text, "Word, e.g. \"x1 x2^-1\"")->required();
  prim_cmd->add_flag("--no-oz", no_oz, "Disable the rank-2 Osborne-Zieschang fast path");

  auto* oracle_cmd = app.add_subcommand("oracle", "List primitive cyclic words by orbit search");
  oracle_cmd->add_option("--rank", rank, "Rank of the free group")->required();
  oracle_cmd->add_option("--max-len", max_len, "Maximum cyclic length")->required();

  auto add_scenario_args = [&](CLI::App* cmd) {
    cmd->add_option("scenario", scenario_arg, "Scenario file or built-in name (fig1)")->required();
    cmd->add_option("--genus", genus_opt, "Genus (rank) to use; built-ins default to 3");
  };
  auto* validate_cmd = app.add_subcommand("validate", "Check a scenario's invariants");
  add_scenario_args(validate_cmd);
  auto* surg_cmd = app.add_subcommand("surgeries", "List every surgery outcome");
  add_scenario_args(surg_cmd);
  surg_cmd->add_flag("--machine", machine, "Emit JSON");
  auto* closure_cmd = app.add_subcommand("closure", "Full report with closure verdicts");
  add_scenario_args(closure_cmd);
  closure_cmd->add_flag("--machine", machine, "Emit JSON");
  closure_cmd->add_flag("--no-oz", no_oz, "Disable the rank-2 Osborne-Zieschang fast path");

  auto* scen_cmd = app.add_subcommand("scenario", "Write a built-in scenario as JSON");
  scen_cmd->add_option("--builtin", builtin_name, "Built-in name (fig1)")->required();
  scen_cmd->add_option("--genus", builtin_genus, "Genus, at least 3");
  scen_cmd->add_option("--out", out_path, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(word_text, rank_opt);
    if (*prim_cmd) return cmd_primitive(word_text, rank, no_oz);
    if (*oracle_cmd) return cmd_oracle(rank, max_len);
    if (*validate_cmd) return cmd_validate(scenario_arg, genus_opt);
    if (*surg_cmd) return cmd_surgeries(scenario_arg, genus_opt, machine);
    if (*closure_cmd) return cmd_closure(scenario_arg, genus_opt, machine, no_oz);
    if (*scen_cmd) return cmd_scenario(builtin_name, builtin_genus, out_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const RankError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidSystem& e) {
    print_violations(e.result());
    std::cerr << "error: scenario failed validation\n";
    return kInvalid;
  } catch (const OracleCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kUsage;
}
