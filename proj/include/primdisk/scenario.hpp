#pragma once

// Scenario files: a DiskPairSystem plus free-form metadata, stored as JSON.
//
//   {
//     "rank": 3,
//     "points":   ["p1", "p2", ...],
//     "order_d":  [...], "order_e": [...],
//     "chords":   [["p1", "p2"], ...],
//     "labels_d": ["x2^-1 x1", ...],   // one word per segment of order_d
//     "labels_e": [...],
//     "meta":     { ... }
//   }
//
// With no points, both orders are empty and each label list holds the single
// unbroken boundary word.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "primdisk/disk_system.hpp"

namespace primdisk {

using Json = nlohmann::ordered_json;

struct Scenario {
  DiskPairSystem system;
  Json meta = Json::object();

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Malformed JSON or a schema violation. The message starts with the field
/// path, e.g. `labels_e[2]: ...`.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& s);

Scenario parse_scenario(std::string_view text);
std::string dump_scenario(const Scenario& s);

/// When `validate` is set, runs validate_system and throws InvalidSystem.
Scenario load_scenario(const std::filesystem::path& path, bool validate = true);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

/// `fig1` at any genus >= 3. The labels never use x3 or beyond, so the
/// genus only sets the rank.
Scenario builtin_scenario(std::string_view name, int genus);

bool is_builtin_name(std::string_view name);

}  // namespace primdisk
