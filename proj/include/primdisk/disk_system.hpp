#pragma once

// Two disks D, E in a handlebody, described only through their boundary
// combinatorics: the points of dD n dE, the cyclic order in which each
// boundary meets them, the arcs of D n E as a chord matching, and the
// meridian word read along each boundary segment.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "primdisk/primitivity.hpp"
#include "primdisk/word.hpp"

namespace primdisk {

enum class Disk { D, E };

inline Disk other(Disk d) noexcept { return d == Disk::D ? Disk::E : Disk::D; }
inline const char* disk_name(Disk d) noexcept { return d == Disk::D ? "D" : "E"; }

using PointId = std::string;
using Chord = std::pair<PointId, PointId>;

/// Segment i of a boundary runs from order[i] to order[(i+1) % n] and carries
/// labels[i], read in that direction. With no intersection points each
/// boundary has one unbroken label.
struct DiskPairSystem {
  Rank rank{2};
  std::vector<PointId> points;
  std::vector<PointId> order_d;
  std::vector<PointId> order_e;
  std::vector<Chord> chords;
  std::vector<Word> labels_d;
  std::vector<Word> labels_e;

  const std::vector<PointId>& order(Disk d) const { return d == Disk::D ? order_d : order_e; }
  const std::vector<Word>& labels(Disk d) const { return d == Disk::D ? labels_d : labels_e; }
  std::size_t chord_count() const noexcept { return chords.size(); }

  friend bool operator==(const DiskPairSystem&, const DiskPairSystem&) = default;
};

enum class ViolationKind {
  DuplicatePoint,
  OddPointCount,
  OrderMismatch,
  UnknownPoint,
  NotPerfectMatching,
  CrossingChords,
  LabelCountMismatch,
  LabelOutOfRank,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

const char* violation_name(ViolationKind k) noexcept;

struct ValidationResult {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind k) const noexcept;
};

ValidationResult validate_system(const DiskPairSystem& s);

class InvalidSystem : public std::invalid_argument {
 public:
  explicit InvalidSystem(ValidationResult result);
  const ValidationResult& result() const noexcept { return result_; }

 private:
  ValidationResult result_;
};

class SurgeryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Concatenated segment labels from the basepoint, unreduced.
Word boundary_word(const DiskPairSystem& s, Disk disk);

/// Surgery on `target` along the other disk, using the outermost subdisk
/// cut off by chords[chord] and bounded by segment `segment` of the other
/// disk's boundary.
struct SurgeryChoice {
  Disk target = Disk::D;
  std::size_t chord = 0;
  std::size_t segment = 0;
  friend bool operator==(const SurgeryChoice&, const SurgeryChoice&) = default;
};

struct SurgeryOutcome {
  SurgeryChoice choice;
  /// 1: the piece following the target boundary from the chord's first
  /// endpoint to its second; 2: the complementary piece.
  int piece = 1;
  /// Labels along the target boundary between the chord's endpoints.
  Word path;
  /// The arc of the other boundary closing the path, oriented to follow it.
  Word cap;
  /// path followed by cap, unreduced.
  Word boundary_word;
  std::size_t inherited_chords = 0;
};

/// Every outermost (chord, segment) of `along`'s boundary, sorted by chord
/// then segment.
std::vector<SurgeryChoice> outermost_choices(const DiskPairSystem& s, Disk along);

std::pair<SurgeryOutcome, SurgeryOutcome> surger(const DiskPairSystem& s, const SurgeryChoice& c);

/// D along E first, then E along D; for each choice piece 1 then piece 2.
std::vector<SurgeryOutcome> all_surgeries(const DiskPairSystem& s);

struct JudgedOutcome {
  SurgeryOutcome outcome;
  PrimitivityVerdict verdict;
};

struct DirectionReport {
  Disk target = Disk::D;
  std::vector<JudgedOutcome> outcomes;
  bool any_primitive = false;
  bool all_primitive = false;
};

/// Per-direction verdicts: closed for the pair holds iff all_primitive,
/// weakly closed iff any_primitive.
struct ClosureReport {
  DirectionReport d_along_e;
  DirectionReport e_along_d;
};

ClosureReport closure_report(const DiskPairSystem& s, PrimitivityOptions opts = {});

}  // namespace primdisk
