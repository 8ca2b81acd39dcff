#include "primdisk/primitivity.hpp"

#include <deque>
#include <string>

namespace primdisk {

namespace {

void check_fits(const Word& w, Rank rank, const char* who) {
  if (!w.fits(rank)) {
    throw RankError(std::string(who) + ": word uses generator x" + std::to_string(w.max_index()) +
                    " beyond rank " + std::to_string(rank.value()));
  }
}

}  // namespace

PrimitivityVerdict whitehead_minimize(const CyclicWord& w, Rank rank) {
  check_fits(w.word(), rank, "whitehead_minimize");
  const auto autos = enumerate_second_kind(rank);
  PrimitivityVerdict v;
  v.start = w;
  v.reached = w;
  v.lengths.push_back(w.size());
  bool improved = true;
  while (improved && v.reached.size() > 1) {
    improved = false;
    for (const auto& a : autos) {
      CyclicWord next = cyclic_reduce(apply_auto(a, v.reached.word()));
      if (next.size() < v.reached.size()) {
        v.certificate.push_back(a);
        v.lengths.push_back(next.size());
        v.reached = std::move(next);
        improved = true;
        break;
      }
    }
  }
  v.primitive = v.reached.size() == 1;
  return v;
}

bool oz_rank2_nonprimitive(const CyclicWord& w, Rank rank) {
  if (rank.value() != 2) {
    throw RankError("Osborne-Zieschang test needs rank 2, got " + std::to_string(rank.value()));
  }
  check_fits(w.word(), rank, "oz_rank2_nonprimitive");
  bool seen[2][2] = {{false, false}, {false, false}};
  for (const Letter& l : w.letters()) seen[l.index - 1][l.inverse ? 1 : 0] = true;
  return (seen[0][0] && seen[0][1]) || (seen[1][0] && seen[1][1]);
}

PrimitivityVerdict is_primitive(const Word& w, Rank rank, PrimitivityOptions opts) {
  check_fits(w, rank, "is_primitive");
  CyclicWord c = cyclic_reduce(w);
  if (opts.use_oz && rank.value() == 2 && oz_rank2_nonprimitive(c, rank)) {
    PrimitivityVerdict v;
    v.primitive = false;
    v.start = c;
    v.reached = c;
    v.lengths.push_back(c.size());
    v.oz_fired = true;
    return v;
  }
  return whitehead_minimize(c, rank);
}

std::vector<CyclicWord> replay_certificate(const CyclicWord& start,
                                           const std::vector<WhiteheadAuto>& certificate) {
  std::vector<CyclicWord> trail{start};
  for (const auto& a : certificate) {
    trail.push_back(cyclic_reduce(apply_auto(a, trail.back().word())));
  }
  return trail;
}

OracleCapExceeded::OracleCapExceeded(std::size_t cap)
    : std::runtime_error("oracle search exceeded the node cap of " + std::to_string(cap) +
                         " cyclic words"),
      cap_(cap) {}

std::set<CyclicWord> oracle_primitives(Rank rank, std::size_t max_len, std::size_t cap) {
  std::set<CyclicWord> found;
  if (max_len == 0) return found;
  const auto autos = enumerate_whitehead_autos(rank);
  std::deque<CyclicWord> frontier;
  CyclicWord seed = cyclic_reduce(Word{Letter{1, false}});
  found.insert(seed);
  frontier.push_back(seed);
  while (!frontier.empty()) {
    CyclicWord cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& a : autos) {
      CyclicWord next = cyclic_reduce(apply_auto(a, cur.word()));
      if (next.size() > max_len) continue;
      if (found.insert(next).second) {
        if (found.size() > cap) throw OracleCapExceeded(cap);
        frontier.push_back(std::move(next));
      }
    }
  }
  return found;
}

}  // namespace primdisk
