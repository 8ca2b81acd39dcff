#include "doctest.h"
#include "primdisk/primitivity.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace primdisk;
using primdisk::testing::Rng;

namespace {

const char* kBoundaryE =
    "x1 x2^-1 x1 x2^-1 x1 x2 x1^-1 x2 x2 x1^-1 "
    "x1 x2^-1 x2^-1 x1 x2^-1 x1^-1 x2 x1^-1 x2 x1^-1 x2";
const char* kW1 = "x1 x2^-1 x1 x2 x1^-1 x2";
const char* kW2 = "x1 x2^-1 x1 x2^-1 x1 x2 x1^-1 x2 x2 x1^-1 x2";

Word W(const char* t) { return parse_word(t); }
CyclicWord C(const char* t) { return cyclic_reduce(parse_word(t)); }

void check_certificate(const PrimitivityVerdict& v) {
  const auto trail = replay_certificate(v.start, v.certificate);
  REQUIRE(trail.size() == v.lengths.size());
  CHECK(trail.back() == v.reached);
  for (std::size_t i = 0; i < trail.size(); ++i) CHECK(trail[i].size() == v.lengths[i]);
  for (std::size_t i = 1; i < trail.size(); ++i) CHECK(trail[i].size() < trail[i - 1].size());
  CHECK(v.certificate.size() <= v.start.size());
}

}  // namespace

TEST_CASE("whitehead_minimize") {
  auto v = whitehead_minimize(C("x2"), Rank(3));
  CHECK(v.primitive);
  CHECK(v.certificate.empty());
  CHECK(v.reached.size() == 1);

  v = whitehead_minimize(C(kW1), Rank(2));
  CHECK_FALSE(v.primitive);
  CHECK(v.reached.size() >= 2);
  check_certificate(v);

  v = whitehead_minimize(CyclicWord{}, Rank(2));
  CHECK_FALSE(v.primitive);
  CHECK(v.reached.empty());
}

TEST_CASE("is_primitive on the reference words") {
  auto e = is_primitive(W(kBoundaryE), Rank(3));
  CHECK(e.primitive);
  CHECK_FALSE(e.oz_fired);
  CHECK(e.reached.size() == 1);

  for (const char* w : {kW1, kW2}) {
    CAPTURE(w);
    auto v = is_primitive(W(w), Rank(2));
    CHECK_FALSE(v.primitive);
    CHECK(v.oz_fired);
    auto slow = is_primitive(W(w), Rank(2), {.use_oz = false});
    CHECK_FALSE(slow.primitive);
    CHECK_FALSE(slow.oz_fired);
    check_certificate(slow);
    CHECK_FALSE(is_primitive(W(w), Rank(3)).primitive);
  }

  CHECK_FALSE(is_primitive(W("x1 x1"), Rank(2)).primitive);
  CHECK(oracle_primitives(Rank(2), 2).count(C("x1 x1")) == 0);
  CHECK_THROWS_AS(is_primitive(W("x3"), Rank(2)), RankError);
}

TEST_CASE("a descent certificate reaches a single letter") {
  auto v = is_primitive(W("x1 x2 x1 x2 x2 x3^-1 x1"), Rank(3));
  CHECK(v.primitive == (v.reached.size() == 1));
  check_certificate(v);
  v = is_primitive(W("x1 x1 x2 x1 x2"), Rank(2), {.use_oz = false});
  CHECK(v.primitive);
  CHECK_FALSE(v.certificate.empty());
  check_certificate(v);
}

TEST_CASE("oz_rank2_nonprimitive") {
  CHECK(oz_rank2_nonprimitive(C(kW1), Rank(2)));
  CHECK(oz_rank2_nonprimitive(C(kW2), Rank(2)));
  CHECK_FALSE(oz_rank2_nonprimitive(C("x1 x2 x2"), Rank(2)));
  CHECK(oracle_primitives(Rank(2), 3).count(C("x1 x2 x2")) == 1);
  CHECK_THROWS_AS(oz_rank2_nonprimitive(C("x1"), Rank(3)), RankError);
}

TEST_CASE("oracle_primitives") {
  const auto one = oracle_primitives(Rank(2), 1);
  CHECK(one == std::set<CyclicWord>{C("x1"), C("x1^-1"), C("x2"), C("x2^-1")});

  const auto six = oracle_primitives(Rank(2), 6);
  CHECK(six.count(C("x1 x2 x2")) == 1);
  CHECK(six.count(C(kW1)) == 0);
  CHECK(six.count(CyclicWord{}) == 0);
  CHECK(six.count(C("x1 x1")) == 0);

  CHECK_THROWS_AS(oracle_primitives(Rank(3), 5, 50), OracleCapExceeded);
  CHECK(oracle_primitives(Rank(2), 0).empty());
}

TEST_CASE("independent rank-2 oracle matches orbit search") {
  // 4 + 4 * sum_{n=2..8} phi(n) = 4 + 4 * 21.
  const auto mech = testing::christoffel_primitives(8);
  CHECK(mech.size() == 88);
  CHECK(oracle_primitives(Rank(2), 8) == mech);
}

TEST_CASE("Nielsen basis search matches the rank-3 oracle") {
  const auto oracle = oracle_primitives(Rank(3), 3);
  const auto nielsen = testing::nielsen_primitives(3, 3, 3);
  CHECK_FALSE(nielsen.empty());
  for (const auto& w : nielsen) {
    CAPTURE(format_word(w));
    CHECK(oracle.count(w) == 1);
  }
  // At this bound the Nielsen search happens to be complete.
  CHECK(nielsen.size() == oracle.size());
}

TEST_CASE("agreement with the oracle, rank 2 up to length 6") {
  const auto oracle = oracle_primitives(Rank(2), 6);
  for (const auto& w : testing::all_cyclic_words(2, 6)) {
    CAPTURE(format_word(w));
    const bool expected = oracle.count(w) == 1;
    CHECK(is_primitive(w.word(), Rank(2)).primitive == expected);
    CHECK(is_primitive(w.word(), Rank(2), {.use_oz = false}).primitive == expected);
  }
}

TEST_CASE("properties on random words") {
  Rng rng(77);
  for (int i = 0; i < 600; ++i) {
    const Word w = testing::random_word(rng, 3, 12);
    const auto v = is_primitive(w, Rank(3));
    check_certificate(v);
    CHECK(is_primitive(invert(w), Rank(3)).primitive == v.primitive);
    const Word u = testing::random_word(rng, 3, 6);
    CHECK(is_primitive(concat(concat(u, w), invert(u)), Rank(3)).primitive == v.primitive);
    if (v.primitive) {
      CHECK(testing::gcd_of_entries(abelianize(w, Rank(3))) == 1);
    }

    const Word w2 = testing::random_word(rng, 2, 12);
    const CyclicWord c2 = cyclic_reduce(w2);
    const bool p2 = is_primitive(w2, Rank(2)).primitive;
    if (oz_rank2_nonprimitive(c2, Rank(2))) {
      CHECK(whitehead_minimize(c2, Rank(2)).reached.size() >= 2);
    }
    CHECK(is_primitive(w2, Rank(2), {.use_oz = false}).primitive == p2);
    CHECK(is_primitive(w2, Rank(3)).primitive == p2);
    CHECK(is_primitive(w2, Rank(4)).primitive == p2);
  }
}
