#pragma once

// Verification reports over a scenario: boundary words, every surgery
// outcome with its primitivity verdict, and the closure verdicts.

#include <optional>
#include <string>
#include <vector>

#include "primdisk/scenario.hpp"

namespace primdisk {

/// The two outcome words the fig1 pair is known to produce.
Word reference_w1();
Word reference_w2();
/// The 21-letter read-off of dE for fig1, which reduces to x2.
Word reference_fig1_boundary_e();

/// "w1", "w2" or "" for a word's class up to conjugation and inversion.
std::string reference_tag(const Word& w);

struct BoundarySummary {
  Word raw;
  Word reduced;
  bool primitive = false;
};

struct OutcomeRow {
  SurgeryOutcome outcome;
  CyclicWord unoriented;
  std::string reference;  // see reference_tag
  bool primitive = false;
  bool oz_fired = false;
  /// OZ test in F_2 = <x1, x2> when the word avoids x3 and beyond.
  std::optional<bool> oz_rank2;
};

struct DirectionSummary {
  Disk target = Disk::D;
  std::size_t outcomes = 0;
  bool any_primitive = false;
  bool all_primitive = false;
};

/// Populated when meta.figure == "fig1": the scenario must reproduce the
/// reference words exactly.
struct ReferenceCheck {
  bool performed = false;
  bool passed = true;
  std::vector<std::string> deviations;
};

struct Report {
  std::string name;
  Scenario scenario;
  BoundarySummary boundary_d;
  BoundarySummary boundary_e;
  std::vector<OutcomeRow> rows;
  DirectionSummary d_along_e;
  DirectionSummary e_along_d;
  ReferenceCheck reference;
};

Report run_report(const Scenario& s, std::string name, PrimitivityOptions opts = {});

std::string render_text(const Report& r);
std::string render_surgeries(const Report& r);
Json render_machine(const Report& r);

std::string describe_choice(const DiskPairSystem& s, const SurgeryChoice& c);

}  // namespace primdisk
