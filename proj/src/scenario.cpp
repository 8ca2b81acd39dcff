#include "primdisk/scenario.hpp"

#include <fstream>
#include <sstream>

#include "builtin_scenarios.hpp"

namespace primdisk {

namespace {

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ScenarioError(std::string(name) + ": missing field");
  return *it;
}

std::vector<PointId> string_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ScenarioError(path + ": expected a list of strings");
  std::vector<PointId> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      throw ScenarioError(path + "[" + std::to_string(i) + "]: expected a string");
    }
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<Word> label_list(const Json& j, const std::string& path) {
  const auto texts = string_list(j, path);
  std::vector<Word> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(parse_word(texts[i]));
    } catch (const WordSyntaxError& e) {
      throw ScenarioError(path + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return out;
}

Json label_json(const std::vector<Word>& labels) {
  Json out = Json::array();
  for (const auto& w : labels) out.push_back(format_word(w));
  return out;
}

}  // namespace

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw ScenarioError("<root>: expected a JSON object");
  Scenario s;
  const Json& rank = field(j, "rank");
  if (!rank.is_number_integer()) throw ScenarioError("rank: expected an integer");
  try {
    s.system.rank = Rank(rank.get<int>());
  } catch (const RankError& e) {
    throw ScenarioError(std::string("rank: ") + e.what());
  }
  s.system.points = string_list(field(j, "points"), "points");
  s.system.order_d = string_list(field(j, "order_d"), "order_d");
  s.system.order_e = string_list(field(j, "order_e"), "order_e");

  const Json& chords = field(j, "chords");
  if (!chords.is_array()) throw ScenarioError("chords: expected a list of point pairs");
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const std::string path = "chords[" + std::to_string(i) + "]";
    auto pair = string_list(chords[i], path);
    if (pair.size() != 2) throw ScenarioError(path + ": expected exactly 2 points");
    s.system.chords.emplace_back(pair[0], pair[1]);
  }
  s.system.labels_d = label_list(field(j, "labels_d"), "labels_d");
  s.system.labels_e = label_list(field(j, "labels_e"), "labels_e");
  if (auto it = j.find("meta"); it != j.end()) {
    if (!it->is_object()) throw ScenarioError("meta: expected an object");
    s.meta = *it;
  }
  return s;
}

Json scenario_to_json(const Scenario& s) {
  Json j = Json::object();
  j["rank"] = s.system.rank.value();
  j["points"] = s.system.points;
  j["order_d"] = s.system.order_d;
  j["order_e"] = s.system.order_e;
  Json chords = Json::array();
  for (const auto& [p, q] : s.system.chords) chords.push_back(Json::array({p, q}));
  j["chords"] = std::move(chords);
  j["labels_d"] = label_json(s.system.labels_d);
  j["labels_e"] = label_json(s.system.labels_e);
  j["meta"] = s.meta;
  return j;
}

Scenario parse_scenario(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ScenarioError(std::string("<root>: ") + e.what());
  }
  return scenario_from_json(j);
}

std::string dump_scenario(const Scenario& s) { return scenario_to_json(s).dump(2) + "\n"; }

Scenario load_scenario(const std::filesystem::path& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  Scenario s = parse_scenario(buf.str());
  if (validate) {
    auto r = validate_system(s.system);
    if (!r.ok()) throw InvalidSystem(std::move(r));
  }
  return s;
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ScenarioError(path.string() + ": cannot open file for writing");
  out << dump_scenario(s);
  if (!out) throw ScenarioError(path.string() + ": write failed");
}

bool is_builtin_name(std::string_view name) { return name == "fig1"; }

Scenario builtin_scenario(std::string_view name, int genus) {
  if (!is_builtin_name(name)) {
    throw std::invalid_argument("unknown built-in scenario '" + std::string(name) + "'");
  }
  if (genus < 3) {
    throw std::invalid_argument("built-in scenario fig1 needs genus >= 3, got " +
                                std::to_string(genus));
  }
  Scenario s = parse_scenario(builtin::kFig1Json);
  s.system.rank = Rank(genus);
  s.meta["genus"] = genus;
  auto r = validate_system(s.system);
  if (!r.ok()) throw InvalidSystem(std::move(r));
  return s;
}

}  // namespace primdisk
