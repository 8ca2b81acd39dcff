#include "primdisk/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

namespace primdisk {

Rank::Rank(int value) : value_(value) {
  if (value < 2) {
    throw RankError("rank must be at least 2, got " + std::to_string(value));
  }
}

int Word::max_index() const noexcept {
  int m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.index);
  return m;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

Letter parse_token(std::string_view tok, std::size_t pos, int max_index) {
  auto fail = [&](const std::string& why) -> WordSyntaxError {
    return WordSyntaxError(pos, "token " + std::to_string(pos + 1) + " '" + std::string(tok) +
                                    "': " + why);
  };
  if (tok.size() < 2 || tok.front() != 'x') throw fail("expected x<k> or x<k>^-1");
  bool inverse = false;
  std::string_view digits = tok.substr(1);
  if (digits.size() >= 3 && digits.substr(digits.size() - 3) == "^-1") {
    inverse = true;
    digits.remove_suffix(3);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
    throw fail("expected x<k> or x<k>^-1");
  }
  int index = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) throw fail("index overflow");
  if (index == 0) throw fail("generator index must be at least 1");
  if (max_index > 0 && index > max_index) {
    throw fail("generator index " + std::to_string(index) + " out of range for rank " +
               std::to_string(max_index));
  }
  return {index, inverse};
}

Word parse_impl(std::string_view text, int max_index) {
  auto tokens = split_tokens(text);
  if (tokens.empty()) throw WordSyntaxError(0, "empty input (write 1 for the empty word)");
  if (tokens.size() == 1 && tokens[0] == "1") return {};
  std::vector<Letter> letters;
  letters.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == "1") {
      throw WordSyntaxError(i, "token " + std::to_string(i + 1) +
                                   " '1': the identity token must stand alone");
    }
    letters.push_back(parse_token(tokens[i], i, max_index));
  }
  return Word(std::move(letters));
}

// Least rotation by direct comparison; words here are short.
std::vector<Letter> least_rotation(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Letter a = w[(r + i) % n];
      const Letter b = w[(best + i) % n];
      if (a == b) continue;
      if (a < b) best = r;
      break;
    }
  }
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(w[(best + i) % n]);
  return out;
}

}  // namespace

Word parse_word(std::string_view text, Rank rank) { return parse_impl(text, rank.value()); }
Word parse_word(std::string_view text) { return parse_impl(text, 0); }

std::string format_letter(Letter l) {
  std::string s = "x" + std::to_string(l.index);
  if (l.inverse) s += "^-1";
  return s;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

std::string format_word(const CyclicWord& w) { return format_word(w.word()); }

Word reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

CyclicWord cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  auto letters = r.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                           letters.begin() + static_cast<std::ptrdiff_t>(hi));
  return CyclicWord(Word(least_rotation(core)));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverted());
  }
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v, Rank rank) {
  if (!u.fits(rank) || !v.fits(rank)) {
    throw RankError("concat: factor uses a generator beyond rank " +
                    std::to_string(rank.value()));
  }
  return concat(u, v);
}

Word rotate(const Word& w, std::size_t shift) {
  if (w.empty()) return w;
  std::vector<Letter> out(w.begin(), w.end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
              out.end());
  return Word(std::move(out));
}

AbelianVector abelianize(const Word& w, Rank rank) {
  if (!w.fits(rank)) {
    throw RankError("abelianize: word uses a generator beyond rank " +
                    std::to_string(rank.value()));
  }
  AbelianVector v(static_cast<std::size_t>(rank.value()), 0);
  for (const Letter& l : w) v[static_cast<std::size_t>(l.index - 1)] += l.sign();
  return v;
}

CyclicWord unoriented_class(const Word& w) {
  CyclicWord a = cyclic_reduce(w);
  CyclicWord b = cyclic_reduce(invert(w));
  return b < a ? b : a;
}

bool is_freely_reduced(const Word& w) noexcept {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1].cancels(w[i])) return false;
  }
  return true;
}

bool is_cyclically_reduced(const Word& w) noexcept {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || !w[0].cancels(w[w.size() - 1]);
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << format_word(w); }
std::ostream& operator<<(std::ostream& os, const CyclicWord& w) { return os << format_word(w); }

}  // namespace primdisk
