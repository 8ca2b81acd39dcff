#pragma once

// Whitehead automorphisms of F_g.

#include <string>
#include <variant>
#include <vector>

#include "primdisk/word.hpp"

namespace primdisk {

/// x_i -> x_{target[i]}^{flip[i] ? -1 : 1}. Length preserving.
struct FirstKind {
  std::vector<int> target;  // 1-based images, a bijection of 1..rank
  std::vector<bool> flip;
  friend bool operator==(const FirstKind&, const FirstKind&) = default;
};

/// The pair (A, a): a in A, a^-1 not in A. `members` is indexed by
/// Letter::order_key over all 2*rank letters.
struct SecondKind {
  Letter pivot;
  std::vector<bool> members;
  friend bool operator==(const SecondKind&, const SecondKind&) = default;
};

class WhiteheadAuto {
 public:
  /// Validates the invariant of the chosen kind; throws std::invalid_argument.
  WhiteheadAuto(Rank rank, FirstKind first);
  WhiteheadAuto(Rank rank, SecondKind second);

  Rank rank() const noexcept { return rank_; }
  bool is_first_kind() const noexcept { return std::holds_alternative<FirstKind>(kind_); }
  const FirstKind& first() const { return std::get<FirstKind>(kind_); }
  const SecondKind& second() const { return std::get<SecondKind>(kind_); }

  /// Image of a single letter, unreduced.
  Word image(Letter l) const;

  /// For second kind: (A - a + a^-1, a^-1). For first kind: the inverse
  /// permutation with matching flips.
  WhiteheadAuto inverse() const;

  std::string describe() const;

  friend bool operator==(const WhiteheadAuto&, const WhiteheadAuto&) = default;

 private:
  Rank rank_;
  std::variant<FirstKind, SecondKind> kind_;
};

/// Generating first-kind autos (adjacent transpositions then single sign
/// flips) followed by every second-kind pair (a, A). Deterministic order.
std::vector<WhiteheadAuto> enumerate_whitehead_autos(Rank rank);

/// Only the second-kind part of the enumeration, in the same order.
std::vector<WhiteheadAuto> enumerate_second_kind(Rank rank);

/// Letterwise substitution followed by free reduction.
Word apply_auto(const WhiteheadAuto& a, const Word& w);

}  // namespace primdisk
