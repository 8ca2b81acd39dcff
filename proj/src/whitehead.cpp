#include "primdisk/whitehead.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace primdisk {

namespace {

std::size_t letter_count(Rank rank) { return 2 * static_cast<std::size_t>(rank.value()); }

void check_first(Rank rank, const FirstKind& f) {
  const auto n = static_cast<std::size_t>(rank.value());
  if (f.target.size() != n || f.flip.size() != n) {
    throw std::invalid_argument("first-kind automorphism has wrong arity");
  }
  std::vector<bool> seen(n, false);
  for (int t : f.target) {
    if (t < 1 || t > rank.value() || seen[static_cast<std::size_t>(t - 1)]) {
      throw std::invalid_argument("first-kind automorphism index map is not a bijection");
    }
    seen[static_cast<std::size_t>(t - 1)] = true;
  }
}

void check_second(Rank rank, const SecondKind& s) {
  if (s.members.size() != letter_count(rank)) {
    throw std::invalid_argument("second-kind automorphism has wrong letter-set size");
  }
  if (s.pivot.index < 1 || s.pivot.index > rank.value()) {
    throw std::invalid_argument("second-kind pivot out of range");
  }
  const auto key = static_cast<std::size_t>(s.pivot.order_key());
  const auto inv_key = static_cast<std::size_t>(s.pivot.inverted().order_key());
  if (!s.members[key] || s.members[inv_key]) {
    throw std::invalid_argument("second-kind automorphism needs a in A and a^-1 not in A");
  }
}

}  // namespace

WhiteheadAuto::WhiteheadAuto(Rank rank, FirstKind first) : rank_(rank), kind_(std::move(first)) {
  check_first(rank_, std::get<FirstKind>(kind_));
}

WhiteheadAuto::WhiteheadAuto(Rank rank, SecondKind second)
    : rank_(rank), kind_(std::move(second)) {
  check_second(rank_, std::get<SecondKind>(kind_));
}

Word WhiteheadAuto::image(Letter l) const {
  if (l.index < 1 || l.index > rank_.value()) {
    throw RankError("letter " + format_letter(l) + " outside rank " +
                    std::to_string(rank_.value()));
  }
  if (const auto* f = std::get_if<FirstKind>(&kind_)) {
    const auto i = static_cast<std::size_t>(l.index - 1);
    return Word{Letter{f->target[i], f->flip[i] != l.inverse}};
  }
  const auto& s = std::get<SecondKind>(kind_);
  if (l.index == s.pivot.index) return Word{l};
  const Letter x{l.index, false};
  const bool has_x = s.members[static_cast<std::size_t>(x.order_key())];
  const bool has_inv = s.members[static_cast<std::size_t>(x.inverted().order_key())];
  std::vector<Letter> img;
  if (has_inv) img.push_back(s.pivot.inverted());
  img.push_back(x);
  if (has_x) img.push_back(s.pivot);
  Word wx(std::move(img));
  return l.inverse ? invert(wx) : wx;
}

WhiteheadAuto WhiteheadAuto::inverse() const {
  if (const auto* f = std::get_if<FirstKind>(&kind_)) {
    const auto n = f->target.size();
    FirstKind inv{std::vector<int>(n), std::vector<bool>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(f->target[i] - 1);
      inv.target[j] = static_cast<int>(i) + 1;
      inv.flip[j] = f->flip[i];
    }
    return WhiteheadAuto(rank_, std::move(inv));
  }
  SecondKind s = std::get<SecondKind>(kind_);
  s.members[static_cast<std::size_t>(s.pivot.order_key())] = false;
  s.pivot = s.pivot.inverted();
  s.members[static_cast<std::size_t>(s.pivot.order_key())] = true;
  return WhiteheadAuto(rank_, std::move(s));
}

std::string WhiteheadAuto::describe() const {
  std::string out;
  if (const auto* f = std::get_if<FirstKind>(&kind_)) {
    out = "perm(";
    for (std::size_t i = 0; i < f->target.size(); ++i) {
      if (i) out += ' ';
      out += format_letter(Letter{static_cast<int>(i) + 1, false}) + "->" +
             format_letter(Letter{f->target[i], f->flip[i]});
    }
    return out + ")";
  }
  const auto& s = std::get<SecondKind>(kind_);
  out = "(" + format_letter(s.pivot) + "; {";
  bool first = true;
  for (std::size_t k = 0; k < s.members.size(); ++k) {
    if (!s.members[k]) continue;
    if (!first) out += ", ";
    first = false;
    out += format_letter(Letter::from_order_key(static_cast<int>(k)));
  }
  return out + "})";
}

std::vector<WhiteheadAuto> enumerate_second_kind(Rank rank) {
  const std::size_t letters = letter_count(rank);
  std::vector<WhiteheadAuto> out;
  out.reserve(letters << (letters - 2));
  for (std::size_t pivot_key = 0; pivot_key < letters; ++pivot_key) {
    const Letter pivot = Letter::from_order_key(static_cast<int>(pivot_key));
    std::vector<std::size_t> free_keys;
    for (std::size_t k = 0; k < letters; ++k) {
      if (Letter::from_order_key(static_cast<int>(k)).index != pivot.index) free_keys.push_back(k);
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << free_keys.size()); ++mask) {
      std::vector<bool> members(letters, false);
      members[pivot_key] = true;
      for (std::size_t b = 0; b < free_keys.size(); ++b) {
        if (mask & (std::size_t{1} << b)) members[free_keys[b]] = true;
      }
      out.emplace_back(rank, SecondKind{pivot, std::move(members)});
    }
  }
  return out;
}

std::vector<WhiteheadAuto> enumerate_whitehead_autos(Rank rank) {
  const auto n = static_cast<std::size_t>(rank.value());
  std::vector<WhiteheadAuto> out;
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto t = identity;
    std::swap(t[i], t[i + 1]);
    out.emplace_back(rank, FirstKind{std::move(t), std::vector<bool>(n, false)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> flip(n, false);
    flip[i] = true;
    out.emplace_back(rank, FirstKind{identity, std::move(flip)});
  }
  auto second = enumerate_second_kind(rank);
  out.insert(out.end(), std::make_move_iterator(second.begin()),
             std::make_move_iterator(second.end()));
  return out;
}

Word apply_auto(const WhiteheadAuto& a, const Word& w) {
  if (!w.fits(a.rank())) {
    throw RankError("apply_auto: word uses a generator beyond rank " +
                    std::to_string(a.rank().value()));
  }
  std::vector<Letter> out;
  out.reserve(w.size() * 3);
  for (const Letter& l : w) {
    const Word img = a.image(l);
    out.insert(out.end(), img.begin(), img.end());
  }
  return reduce(Word(std::move(out)));
}

}  // namespace primdisk
