#pragma once

// Primitivity of elements of F_g: Whitehead length descent, the rank-2
// Osborne-Zieschang sign test, and a breadth-first orbit oracle.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "primdisk/whitehead.hpp"
#include "primdisk/word.hpp"

namespace primdisk {

struct PrimitivityVerdict {
  bool primitive = false;
  /// Cyclic reduction of the input.
  CyclicWord start;
  /// Autos applied in order; each strictly shortens the cyclic word.
  std::vector<WhiteheadAuto> certificate;
  /// Cyclic lengths along the descent, starting with start.size().
  std::vector<std::size_t> lengths;
  /// Where the descent stopped. When oz_fired the descent is skipped and
  /// this equals start.
  CyclicWord reached;
  bool oz_fired = false;
};

struct PrimitivityOptions {
  bool use_oz = true;
};

/// Greedy first-improvement descent over the second-kind enumeration.
PrimitivityVerdict whitehead_minimize(const CyclicWord& w, Rank rank);

/// True certifies non-primitivity in F_2 (some generator occurs with both
/// signs); false is no verdict. Throws RankError for rank != 2 or a word
/// using x3 or beyond.
bool oz_rank2_nonprimitive(const CyclicWord& w, Rank rank);

PrimitivityVerdict is_primitive(const Word& w, Rank rank, PrimitivityOptions opts = {});

/// Replays a certificate from its start and returns every intermediate
/// cyclic word (start first).
std::vector<CyclicWord> replay_certificate(const CyclicWord& start,
                                           const std::vector<WhiteheadAuto>& certificate);

class OracleCapExceeded : public std::runtime_error {
 public:
  explicit OracleCapExceeded(std::size_t cap);
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

/// Closure of the class of x1 under every enumerated automorphism, keeping
/// only cyclic words of length <= max_len. Throws OracleCapExceeded once
/// more than `cap` classes have been discovered.
std::set<CyclicWord> oracle_primitives(Rank rank, std::size_t max_len,
                                       std::size_t cap = kDefaultOracleCap);

}  // namespace primdisk
