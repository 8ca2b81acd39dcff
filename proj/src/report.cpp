#include "primdisk/report.hpp"

#include <iomanip>
#include <set>
#include <sstream>

namespace primdisk {

Word reference_w1() { return parse_word("x1 x2^-1 x1 x2 x1^-1 x2"); }

Word reference_w2() { return parse_word("x1 x2^-1 x1 x2^-1 x1 x2 x1^-1 x2 x2 x1^-1 x2"); }

Word reference_fig1_boundary_e() {
  const Word first = parse_word("x1 x2^-1 x1 x2^-1 x1 x2 x1^-1 x2 x2 x1^-1");
  const Word second = parse_word("x1 x2^-1 x2^-1 x1 x2^-1 x1^-1 x2 x1^-1 x2 x1^-1");
  return concat(concat(first, second), parse_word("x2"));
}

std::string reference_tag(const Word& w) {
  const CyclicWord c = unoriented_class(w);
  if (c == unoriented_class(reference_w1())) return "w1";
  if (c == unoriented_class(reference_w2())) return "w2";
  return "";
}

std::string describe_choice(const DiskPairSystem& s, const SurgeryChoice& c) {
  const auto& [p, q] = s.chords.at(c.chord);
  std::ostringstream os;
  os << disk_name(c.target) << " along " << disk_name(other(c.target)) << ", arc (" << p << " "
     << q << "), subdisk at " << disk_name(other(c.target)) << "-segment " << c.segment;
  return os.str();
}

namespace {

BoundarySummary summarize(const DiskPairSystem& s, Disk d, const PrimitivityOptions& opts) {
  BoundarySummary b;
  b.raw = boundary_word(s, d);
  b.reduced = reduce(b.raw);
  b.primitive = is_primitive(b.raw, s.rank, opts).primitive;
  return b;
}

bool is_rotation_of(const Word& w, const Word& target) {
  if (w.size() != target.size()) return false;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (rotate(w, k) == target) return true;
  }
  return w.empty();
}

ReferenceCheck check_fig1(const Report& r) {
  ReferenceCheck c;
  c.performed = true;
  auto fail = [&](std::string why) {
    c.passed = false;
    c.deviations.push_back(std::move(why));
  };
  if (!is_rotation_of(r.boundary_e.raw, reference_fig1_boundary_e())) {
    fail("boundary of E is not a rotation of the reference 21-letter word");
  }
  if (r.boundary_e.reduced != parse_word("x2")) {
    fail("boundary of E reduces to " + format_word(r.boundary_e.reduced) + ", expected x2");
  }
  if (r.rows.size() != 8) fail(std::to_string(r.rows.size()) + " surgery outcomes, expected 8");
  std::set<std::string> tags;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    if (row.reference.empty()) {
      fail("outcome " + std::to_string(i + 1) + " has class " + format_word(row.unoriented) +
           ", which is neither w1 nor w2");
    } else {
      tags.insert(row.reference);
    }
  }
  if (!r.rows.empty() && tags.size() != 2) fail("outcomes do not realise both w1 and w2");
  for (const auto* side : {&r.scenario.system.labels_d, &r.scenario.system.labels_e}) {
    for (const auto& w : *side) {
      if (w.max_index() >= 3) fail("a segment label uses x3 or beyond");
    }
  }
  return c;
}

DirectionSummary summarize_direction(const DirectionReport& d) {
  return {d.target, d.outcomes.size(), d.any_primitive, d.all_primitive};
}

}  // namespace

Report run_report(const Scenario& s, std::string name, PrimitivityOptions opts) {
  Report r;
  r.name = std::move(name);
  r.scenario = s;
  r.boundary_d = summarize(s.system, Disk::D, opts);
  r.boundary_e = summarize(s.system, Disk::E, opts);

  const ClosureReport closure = closure_report(s.system, opts);
  for (const auto* dir : {&closure.d_along_e, &closure.e_along_d}) {
    for (const auto& j : dir->outcomes) {
      OutcomeRow row;
      row.outcome = j.outcome;
      row.unoriented = unoriented_class(j.outcome.boundary_word);
      row.reference = reference_tag(j.outcome.boundary_word);
      row.primitive = j.verdict.primitive;
      row.oz_fired = j.verdict.oz_fired;
      if (j.outcome.boundary_word.max_index() <= 2) {
        row.oz_rank2 = oz_rank2_nonprimitive(cyclic_reduce(j.outcome.boundary_word), Rank(2));
      }
      r.rows.push_back(std::move(row));
    }
  }
  r.d_along_e = summarize_direction(closure.d_along_e);
  r.e_along_d = summarize_direction(closure.e_along_d);

  auto fig = s.meta.find("figure");
  if (fig != s.meta.end() && fig->is_string() && fig->get<std::string>() == "fig1") {
    r.reference = check_fig1(r);
  }
  return r;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string oz_text(const std::optional<bool>& oz) {
  if (!oz) return "n/a";
  return *oz ? "fired" : "silent";
}

void direction_line(std::ostream& os, const DirectionSummary& d) {
  os << "  " << disk_name(d.target) << " along " << disk_name(other(d.target)) << ": "
     << d.outcomes << " outcomes, any primitive: " << yes_no(d.any_primitive)
     << ", all primitive: " << yes_no(d.all_primitive) << "\n"
     << "    closed for this pair: " << (d.all_primitive ? "holds" : "FAILS")
     << "; weakly closed for this pair: " << (d.any_primitive ? "holds" : "FAILS") << "\n";
}

void outcome_table(std::ostream& os, const Report& r) {
  const auto& s = r.scenario.system;
  os << "surgery outcomes:\n";
  std::size_t i = 0;
  for (const auto& row : r.rows) {
    const auto& o = row.outcome;
    os << "  [" << ++i << "] " << describe_choice(s, o.choice) << ", piece " << o.piece << "\n"
       << "      word:      " << format_word(o.boundary_word) << "\n"
       << "      class:     " << format_word(row.unoriented);
    if (!row.reference.empty()) os << "  (" << row.reference << ")";
    os << "\n"
       << "      inherited arcs: " << o.inherited_chords << " of " << s.chord_count()
       << ", primitive in F_" << s.rank.value() << ": " << yes_no(row.primitive)
       << ", OZ in F_2: " << oz_text(row.oz_rank2) << "\n";
  }
}

}  // namespace

std::string render_surgeries(const Report& r) {
  std::ostringstream os;
  os << "scenario: " << r.name << "\n";
  outcome_table(os, r);
  return os.str();
}

std::string render_text(const Report& r) {
  const auto& s = r.scenario.system;
  std::ostringstream os;
  os << "scenario: " << r.name << "\n"
     << "rank: " << s.rank.value() << ", intersection arcs: " << s.chord_count() << "\n";
  for (auto [d, b] : {std::pair{Disk::D, &r.boundary_d}, std::pair{Disk::E, &r.boundary_e}}) {
    os << "boundary " << disk_name(d) << ": " << format_word(b->raw) << "\n"
       << "  reduced: " << format_word(b->reduced) << ", primitive: " << yes_no(b->primitive)
       << "\n";
  }
  outcome_table(os, r);
  os << "closure:\n";
  direction_line(os, r.d_along_e);
  direction_line(os, r.e_along_d);
  if (r.reference.performed) {
    os << "reference check (fig1): " << (r.reference.passed ? "PASS" : "FAIL") << "\n";
    for (const auto& d : r.reference.deviations) os << "  DEVIATION: " << d << "\n";
  }
  return os.str();
}

Json render_machine(const Report& r) {
  const auto& s = r.scenario.system;
  Json j = Json::object();
  j["name"] = r.name;
  j["scenario"] = scenario_to_json(r.scenario);
  Json bd = Json::object();
  for (auto [d, b] : {std::pair{Disk::D, &r.boundary_d}, std::pair{Disk::E, &r.boundary_e}}) {
    bd[disk_name(d)] = {{"raw", format_word(b->raw)},
                        {"reduced", format_word(b->reduced)},
                        {"primitive", b->primitive}};
  }
  j["boundary"] = std::move(bd);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    const auto& o = row.outcome;
    Json jr = Json::object();
    jr["target"] = disk_name(o.choice.target);
    jr["chord"] = Json::array({s.chords[o.choice.chord].first, s.chords[o.choice.chord].second});
    jr["segment"] = o.choice.segment;
    jr["piece"] = o.piece;
    jr["word"] = format_word(o.boundary_word);
    jr["class"] = format_word(row.unoriented);
    jr["reference"] = row.reference.empty() ? Json(nullptr) : Json(row.reference);
    jr["inherited_chords"] = o.inherited_chords;
    jr["primitive"] = row.primitive;
    jr["oz_fired"] = row.oz_fired;
    jr["oz_rank2"] = row.oz_rank2 ? Json(*row.oz_rank2) : Json(nullptr);
    rows.push_back(std::move(jr));
  }
  j["outcomes"] = std::move(rows);
  Json closure = Json::object();
  for (const auto* d : {&r.d_along_e, &r.e_along_d}) {
    const std::string key = std::string(disk_name(d->target)) + "_along_" + disk_name(other(d->target));
    closure[key] = {{"outcomes", d->outcomes},
                    {"any_primitive", d->any_primitive},
                    {"all_primitive", d->all_primitive},
                    {"closed", d->all_primitive},
                    {"weakly_closed", d->any_primitive}};
  }
  j["closure"] = std::move(closure);
  if (r.reference.performed) {
    j["reference_check"] = {{"passed", r.reference.passed}, {"deviations", r.reference.deviations}};
  }
  return j;
}

}  // namespace primdisk
