#pragma once

// Words over the free group F_g = <x1, ..., xg>.
//
// A Word is a plain letter sequence and may contain cancelling pairs; the
// boundary of a disk is read off verbatim and is usually not reduced.
// Reduction is always an explicit call.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace primdisk {

/// Rank of the ambient free group (the genus of the splitting).
class Rank {
 public:
  explicit Rank(int value);
  int value() const noexcept { return value_; }
  friend bool operator==(Rank, Rank) = default;
  friend auto operator<=>(Rank, Rank) = default;

 private:
  int value_;
};

/// x_index when !inverse, x_index^-1 otherwise. Generator indices are 1-based.
struct Letter {
  int index = 1;
  bool inverse = false;

  Letter inverted() const noexcept { return {index, !inverse}; }
  bool cancels(Letter other) const noexcept {
    return index == other.index && inverse != other.inverse;
  }
  int sign() const noexcept { return inverse ? -1 : 1; }

  /// Position in the total order x1 < x1^-1 < x2 < x2^-1 < ...
  int order_key() const noexcept { return 2 * (index - 1) + (inverse ? 1 : 0); }
  static Letter from_order_key(int key) noexcept {
    return {key / 2 + 1, (key % 2) == 1};
  }

  friend bool operator==(Letter, Letter) = default;
  friend std::strong_ordering operator<=>(Letter a, Letter b) noexcept {
    return a.order_key() <=> b.order_key();
  }
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Largest generator index used, 0 for the empty word.
  int max_index() const noexcept;
  bool fits(Rank rank) const noexcept { return max_index() <= rank.value(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) = default;

 private:
  std::vector<Letter> letters_;
};

/// A conjugacy class representative: cyclically reduced and stored in its
/// lexicographically least rotation. Only cyclic_reduce constructs these.
class CyclicWord {
 public:
  CyclicWord() = default;

  std::span<const Letter> letters() const noexcept { return letters_.letters(); }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Word& word() const noexcept { return letters_; }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  friend CyclicWord cyclic_reduce(const Word&);
  explicit CyclicWord(Word w) : letters_(std::move(w)) {}
  Word letters_;
};

/// Exponent sum of each generator; entry i-1 belongs to x_i.
using AbelianVector = std::vector<long>;

class WordSyntaxError : public std::invalid_argument {
 public:
  WordSyntaxError(std::size_t token_position, const std::string& what)
      : std::invalid_argument(what), position_(token_position) {}
  /// Zero-based index of the offending token.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses `x1 x2^-1 ...`; the lone token `1` is the empty word.
Word parse_word(std::string_view text, Rank rank);
/// Same syntax without an upper bound on generator indices.
Word parse_word(std::string_view text);

std::string format_letter(Letter l);
std::string format_word(const Word& w);
std::string format_word(const CyclicWord& w);

Word reduce(const Word& w);
CyclicWord cyclic_reduce(const Word& w);
Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
/// Juxtaposition after checking both factors live in F_rank.
Word concat(const Word& u, const Word& v, Rank rank);
Word rotate(const Word& w, std::size_t shift);
AbelianVector abelianize(const Word& w, Rank rank);

/// Class of w up to conjugation and inversion: the smaller of the canonical
/// cyclic forms of w and w^-1.
CyclicWord unoriented_class(const Word& w);

bool is_freely_reduced(const Word& w) noexcept;
bool is_cyclically_reduced(const Word& w) noexcept;

std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const CyclicWord& w);

}  // namespace primdisk
