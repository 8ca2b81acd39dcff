#include "primdisk/disk_system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace primdisk {

const char* violation_name(ViolationKind k) noexcept {
  switch (k) {
    case ViolationKind::DuplicatePoint: return "duplicate-point";
    case ViolationKind::OddPointCount: return "odd-point-count";
    case ViolationKind::OrderMismatch: return "order-mismatch";
    case ViolationKind::UnknownPoint: return "unknown-point";
    case ViolationKind::NotPerfectMatching: return "not-perfect-matching";
    case ViolationKind::CrossingChords: return "crossing-chords";
    case ViolationKind::LabelCountMismatch: return "label-count-mismatch";
    case ViolationKind::LabelOutOfRank: return "label-out-of-rank";
  }
  return "unknown";
}

bool ValidationResult::has(ViolationKind k) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [k](const Violation& v) { return v.kind == k; });
}

namespace {

std::string chord_text(const Chord& c) { return "(" + c.first + " " + c.second + ")"; }

// True iff `order` lists every point exactly once; records problems.
bool check_order(const std::vector<PointId>& order, const std::set<PointId>& known,
                 const char* name, std::vector<Violation>& out) {
  bool ok = true;
  std::map<PointId, int> seen;
  for (const auto& p : order) {
    if (!known.count(p)) {
      out.push_back({ViolationKind::UnknownPoint,
                     std::string(name) + " names unknown point '" + p + "'"});
      ok = false;
      continue;
    }
    if (++seen[p] == 2) {
      out.push_back({ViolationKind::OrderMismatch,
                     std::string(name) + " visits point '" + p + "' more than once"});
      ok = false;
    }
  }
  for (const auto& p : known) {
    if (!seen.count(p)) {
      out.push_back({ViolationKind::OrderMismatch,
                     std::string(name) + " never visits point '" + p + "'"});
      ok = false;
    }
  }
  return ok;
}

std::map<PointId, std::size_t> positions(const std::vector<PointId>& order) {
  std::map<PointId, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

// Strictly between lo and hi going forward from lo.
bool between(std::size_t lo, std::size_t hi, std::size_t x, std::size_t n) {
  const std::size_t span = (hi + n - lo) % n;
  const std::size_t off = (x + n - lo) % n;
  return off > 0 && off < span;
}

void check_crossings(const DiskPairSystem& s, Disk d, std::vector<Violation>& out) {
  const auto& order = s.order(d);
  const auto pos = positions(order);
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < s.chords.size(); ++i) {
    for (std::size_t j = i + 1; j < s.chords.size(); ++j) {
      const auto a = pos.at(s.chords[i].first), b = pos.at(s.chords[i].second);
      const auto c = pos.at(s.chords[j].first), e = pos.at(s.chords[j].second);
      if (between(a, b, c, n) != between(a, b, e, n)) {
        out.push_back({ViolationKind::CrossingChords,
                       std::string("chords ") + chord_text(s.chords[i]) + " and " +
                           chord_text(s.chords[j]) + " cross in order_" +
                           (d == Disk::D ? "d" : "e")});
      }
    }
  }
}

void check_labels(const DiskPairSystem& s, Disk d, std::vector<Violation>& out) {
  const auto& labels = s.labels(d);
  const std::string name = d == Disk::D ? "labels_d" : "labels_e";
  const std::size_t expected = s.points.empty() ? 1 : s.order(d).size();
  if (labels.size() != expected) {
    out.push_back({ViolationKind::LabelCountMismatch,
                   name + " has " + std::to_string(labels.size()) + " entries, expected " +
                       std::to_string(expected)});
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].fits(s.rank)) {
      out.push_back({ViolationKind::LabelOutOfRank,
                     name + "[" + std::to_string(i) + "] uses x" +
                         std::to_string(labels[i].max_index()) + " beyond rank " +
                         std::to_string(s.rank.value())});
    }
  }
}

void require_valid(const DiskPairSystem& s) {
  auto r = validate_system(s);
  if (!r.ok()) throw InvalidSystem(std::move(r));
}

}  // namespace

InvalidSystem::InvalidSystem(ValidationResult result)
    : std::invalid_argument("invalid disk pair system: " +
                            (result.violations.empty() ? std::string("?")
                                                       : result.violations.front().message)),
      result_(std::move(result)) {}

ValidationResult validate_system(const DiskPairSystem& s) {
  ValidationResult r;
  auto& out = r.violations;

  std::set<PointId> known;
  for (const auto& p : s.points) {
    if (!known.insert(p).second) {
      out.push_back({ViolationKind::DuplicatePoint, "point '" + p + "' listed twice"});
    }
  }
  if (known.size() % 2 != 0) {
    out.push_back({ViolationKind::OddPointCount,
                   std::to_string(known.size()) + " intersection points; need an even count"});
  }
  const bool orders_ok = check_order(s.order_d, known, "order_d", out) &
                         check_order(s.order_e, known, "order_e", out);

  bool matching_ok = true;
  std::map<PointId, int> used;
  for (const auto& c : s.chords) {
    for (const auto* p : {&c.first, &c.second}) {
      if (!known.count(*p)) {
        out.push_back({ViolationKind::UnknownPoint,
                       "chord " + chord_text(c) + " names unknown point '" + *p + "'"});
        matching_ok = false;
      } else {
        ++used[*p];
      }
    }
    if (c.first == c.second) {
      out.push_back({ViolationKind::NotPerfectMatching,
                     "chord " + chord_text(c) + " joins a point to itself"});
      matching_ok = false;
    }
  }
  for (const auto& p : known) {
    const int n = used.count(p) ? used[p] : 0;
    if (n != 1) {
      out.push_back({ViolationKind::NotPerfectMatching,
                     "point '" + p + "' is an endpoint of " + std::to_string(n) +
                         " chords, expected 1"});
      matching_ok = false;
    }
  }

  if (orders_ok && matching_ok) {
    check_crossings(s, Disk::D, out);
    check_crossings(s, Disk::E, out);
  }
  check_labels(s, Disk::D, out);
  check_labels(s, Disk::E, out);
  return r;
}

Word boundary_word(const DiskPairSystem& s, Disk disk) {
  require_valid(s);
  std::vector<Letter> out;
  for (const auto& seg : s.labels(disk)) out.insert(out.end(), seg.begin(), seg.end());
  return Word(std::move(out));
}

std::vector<SurgeryChoice> outermost_choices(const DiskPairSystem& s, Disk along) {
  require_valid(s);
  if (s.chords.empty()) throw SurgeryError("surgery undefined for disjoint disks (no chords)");
  const auto& order = s.order(along);
  const std::size_t n = order.size();
  std::vector<SurgeryChoice> out;
  for (std::size_t c = 0; c < s.chords.size(); ++c) {
    const auto& [p, q] = s.chords[c];
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = order[i];
      const auto& b = order[(i + 1) % n];
      if ((a == p && b == q) || (a == q && b == p)) out.push_back({other(along), c, i});
    }
  }
  return out;
}

std::pair<SurgeryOutcome, SurgeryOutcome> surger(const DiskPairSystem& s, const SurgeryChoice& c) {
  require_valid(s);
  if (s.chords.empty()) throw SurgeryError("surgery undefined for disjoint disks (no chords)");
  if (c.chord >= s.chords.size()) throw SurgeryError("surgery chord index out of range");
  const Disk along = other(c.target);
  const auto& along_order = s.order(along);
  if (c.segment >= along_order.size()) throw SurgeryError("surgery segment index out of range");

  const auto& [p, q] = s.chords[c.chord];
  const auto& a = along_order[c.segment];
  const auto& b = along_order[(c.segment + 1) % along_order.size()];
  if (!((a == p && b == q) || (a == q && b == p))) {
    throw SurgeryError("segment " + std::to_string(c.segment) + " of " + disk_name(along) +
                       " does not cut off an outermost subdisk at chord " + chord_text(s.chords[c.chord]));
  }
  const Word& delta = s.labels(along)[c.segment];

  const auto& order = s.order(c.target);
  const auto& labels = s.labels(c.target);
  const std::size_t n = order.size();
  const auto pos = positions(order);
  const std::size_t ip = pos.at(p);
  const std::size_t iq = pos.at(q);

  auto piece = [&](std::size_t from, std::size_t to, const PointId& end_point, int index) {
    std::vector<Letter> letters;
    for (std::size_t i = from; i != to; i = (i + 1) % n) {
      letters.insert(letters.end(), labels[i].begin(), labels[i].end());
    }
    Word path(std::move(letters));
    // Return to the path's start across the outermost subdisk.
    Word cap = end_point == b ? invert(delta) : delta;

    std::size_t inherited = 0;
    for (std::size_t k = 0; k < s.chords.size(); ++k) {
      if (k == c.chord) continue;
      if (between(from, to, pos.at(s.chords[k].first), n) &&
          between(from, to, pos.at(s.chords[k].second), n)) {
        ++inherited;
      }
    }
    Word whole = concat(path, cap);
    return SurgeryOutcome{c, index, std::move(path), std::move(cap), std::move(whole), inherited};
  };

  return {piece(ip, iq, q, 1), piece(iq, ip, p, 2)};
}

std::vector<SurgeryOutcome> all_surgeries(const DiskPairSystem& s) {
  std::vector<SurgeryOutcome> out;
  for (Disk along : {Disk::E, Disk::D}) {
    for (const auto& c : outermost_choices(s, along)) {
      auto [first, second] = surger(s, c);
      out.push_back(std::move(first));
      out.push_back(std::move(second));
    }
  }
  return out;
}

ClosureReport closure_report(const DiskPairSystem& s, PrimitivityOptions opts) {
  ClosureReport r;
  r.d_along_e.target = Disk::D;
  r.e_along_d.target = Disk::E;
  for (auto& o : all_surgeries(s)) {
    auto& dir = o.choice.target == Disk::D ? r.d_along_e : r.e_along_d;
    auto verdict = is_primitive(o.boundary_word, s.rank, opts);
    dir.outcomes.push_back({std::move(o), std::move(verdict)});
  }
  for (auto* dir : {&r.d_along_e, &r.e_along_d}) {
    const auto& v = dir->outcomes;
    dir->any_primitive = std::any_of(v.begin(), v.end(), [](const auto& j) { return j.verdict.primitive; });
    dir->all_primitive = !v.empty() &&
                         std::all_of(v.begin(), v.end(), [](const auto& j) { return j.verdict.primitive; });
  }
  return r;
}

}  // namespace primdisk
