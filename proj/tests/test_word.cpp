#include "doctest.h"
#include "primdisk/word.hpp"
#include "support/generators.hpp"

using namespace primdisk;
using primdisk::testing::Rng;
using primdisk::testing::random_word;

namespace {

const char* kBoundaryE =
    "x1 x2^-1 x1 x2^-1 x1 x2 x1^-1 x2 x2 x1^-1 "
    "x1 x2^-1 x2^-1 x1 x2^-1 x1^-1 x2 x1^-1 x2 x1^-1 x2";
const char* kW1 = "x1 x2^-1 x1 x2 x1^-1 x2";
const char* kW2 = "x1 x2^-1 x1 x2^-1 x1 x2 x1^-1 x2 x2 x1^-1 x2";

Word W(const char* text) { return parse_word(text); }

}  // namespace

TEST_CASE("rank must be at least 2") {
  CHECK_THROWS_AS(Rank(1), RankError);
  CHECK_THROWS_AS(Rank(0), RankError);
  CHECK(Rank(2).value() == 2);
}

TEST_CASE("parse_word") {
  SUBCASE("letters in order") {
    Word w = parse_word("x1 x2^-1", Rank(2));
    REQUIRE(w.size() == 2);
    CHECK(w[0] == Letter{1, false});
    CHECK(w[1] == Letter{2, true});
  }
  SUBCASE("identity token") {
    CHECK(parse_word("1", Rank(3)).empty());
    CHECK(parse_word("  1 ").empty());
  }
  SUBCASE("index beyond rank reports the token position") {
    try {
      parse_word("x3 x1", Rank(2));
      FAIL("expected an error");
    } catch (const WordSyntaxError& e) {
      CHECK(e.position() == 0);
      CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
  }
  SUBCASE("malformed tokens") {
    for (const char* bad : {"x0", "y1", "x", "x1^2", "x1^-", "x-1", "x1 1", "", "x1x2"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_word(bad, Rank(4)), WordSyntaxError);
    }
    try {
      parse_word("x1 x2 x0");
    } catch (const WordSyntaxError& e) {
      CHECK(e.position() == 2);
    }
  }
  SUBCASE("format round trip") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      Word w = random_word(rng, 5, 12);
      CHECK(parse_word(format_word(w), Rank(5)) == w);
    }
    CHECK(format_word(Word{}) == "1");
  }
}

TEST_CASE("reduce") {
  CHECK(reduce(W(kBoundaryE)) == W("x2"));
  CHECK(reduce(W("x1 x1^-1")).empty());
  CHECK(reduce(W(kW1)) == W(kW1));
  CHECK(reduce(W("x1 x2 x2^-1 x1^-1 x3")) == W("x3"));
  CHECK(W(kBoundaryE).size() == 21);
}

TEST_CASE("cyclic_reduce") {
  CHECK(cyclic_reduce(W("x1 x2 x1^-1")) == cyclic_reduce(W("x2")));
  CHECK(cyclic_reduce(W("x1 x2 x1^-1")).word() == W("x2"));
  CHECK(cyclic_reduce(W(kW1)).size() == 6);
  CHECK(cyclic_reduce(W("x1 x1^-1")).empty());
  CHECK(cyclic_reduce(Word{}).empty());
  // Least rotation under x1 < x1^-1 < x2 < x2^-1.
  CHECK(cyclic_reduce(W("x2 x1^-1 x1^-1")).word() == W("x1^-1 x1^-1 x2"));
  CHECK(cyclic_reduce(W("x2^-1 x1^-1 x2 x1")).word() == W("x1 x2^-1 x1^-1 x2"));
}

TEST_CASE("invert and concat") {
  CHECK(invert(W("x1 x2^-1")) == W("x2 x1^-1"));
  CHECK(invert(Word{}).empty());
  CHECK(invert(invert(W(kW2))) == W(kW2));

  Word u = concat(W("x1"), W("x1^-1"));
  CHECK(u.size() == 2);
  CHECK(u == W("x1 x1^-1"));
  CHECK(concat(Word{}, W(kW1)) == W(kW1));
  CHECK_THROWS_AS(concat(W("x3"), W("x1"), Rank(2)), RankError);

  Word a = W("x1 x2^-1 x1 x2^-1 x1 x2 x1^-1 x2 x2 x1^-1");
  Word b = W("x1 x2^-1 x2^-1 x1 x2^-1 x1^-1 x2 x1^-1 x2 x1^-1");
  CHECK(concat(concat(a, b, Rank(3)), W("x2"), Rank(3)) == W(kBoundaryE));
  CHECK(b == invert(a));
}

TEST_CASE("abelianize") {
  CHECK(abelianize(W("x1 x2^-1"), Rank(2)) == AbelianVector{1, -1});
  // x1: five +, five - ; x2: six +, five - ; x3 absent.
  CHECK(abelianize(W(kBoundaryE), Rank(3)) == AbelianVector{0, 1, 0});
  CHECK(abelianize(W(kBoundaryE), Rank(3)) == abelianize(W("x2"), Rank(3)));
  CHECK(abelianize(W(kW1), Rank(2)) == AbelianVector{1, 1});
  CHECK_THROWS_AS(abelianize(W("x3"), Rank(2)), RankError);
}

TEST_CASE("algebraic properties on random words") {
  Rng rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const Word w = random_word(rng, 3, 64);
    const Word r = reduce(w);
    CHECK(reduce(r) == r);
    CHECK(is_freely_reduced(r));
    CHECK(r.size() <= w.size());
    CHECK((r.size() == w.size()) == is_freely_reduced(w));
    CHECK(reduce(concat(w, invert(w))).empty());
    CHECK(abelianize(w, Rank(3)) == abelianize(r, Rank(3)));

    const Word u = random_word(rng, 3, 32);
    const Word small = random_word(rng, 3, 32);
    CHECK(cyclic_reduce(small) == cyclic_reduce(concat(concat(u, small), invert(u))));

    const CyclicWord c = cyclic_reduce(small);
    CHECK(is_cyclically_reduced(c.word()));
    for (std::size_t k = 0; k < c.size(); ++k) {
      CHECK(cyclic_reduce(rotate(c.word(), k)) == c);
    }
  }
}
