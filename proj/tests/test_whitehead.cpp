#include <set>

#include "doctest.h"
#include "primdisk/whitehead.hpp"
#include "support/generators.hpp"

using namespace primdisk;
using primdisk::testing::Rng;

namespace {

// Count (a, A) with a in A, a^-1 not in A by scanning every subset of the
// 2r letters.
std::size_t brute_second_kind_count(int rank) {
  const int letters = 2 * rank;
  std::size_t count = 0;
  for (int a = 0; a < letters; ++a) {
    const int inv = a ^ 1;
    for (unsigned mask = 0; mask < (1u << letters); ++mask) {
      if ((mask >> a & 1u) && !(mask >> inv & 1u)) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("enumeration sizes") {
  CHECK(brute_second_kind_count(2) == 16);
  CHECK(brute_second_kind_count(3) == 96);
  for (int r : {2, 3, 4}) {
    CAPTURE(r);
    const auto second = enumerate_second_kind(Rank(r));
    CHECK(second.size() == brute_second_kind_count(r));
    std::size_t first = 0;
    for (const auto& a : enumerate_whitehead_autos(Rank(r))) first += a.is_first_kind();
    CHECK(first == static_cast<std::size_t>((r - 1) + r));
  }
}

TEST_CASE("enumeration is duplicate free and deterministic") {
  const auto a = enumerate_whitehead_autos(Rank(3));
  const auto b = enumerate_whitehead_autos(Rank(3));
  CHECK(a == b);
  std::set<std::string> names;
  for (const auto& x : a) names.insert(x.describe());
  CHECK(names.size() == a.size());
}

TEST_CASE("rank 2 first-kind generators") {
  std::vector<std::string> got;
  for (const auto& a : enumerate_whitehead_autos(Rank(2))) {
    if (a.is_first_kind()) got.push_back(a.describe());
  }
  CHECK(got == std::vector<std::string>{"perm(x1->x2 x2->x1)", "perm(x1->x1^-1 x2->x2)",
                                        "perm(x1->x1 x2->x2^-1)"});
}

TEST_CASE("invalid automorphisms are rejected") {
  CHECK_THROWS(WhiteheadAuto(Rank(2), FirstKind{{1, 1}, {false, false}}));
  CHECK_THROWS(WhiteheadAuto(Rank(2), FirstKind{{1}, {false}}));
  // a^-1 in A.
  CHECK_THROWS(WhiteheadAuto(Rank(2), SecondKind{Letter{1, false}, {true, true, false, false}}));
  // a not in A.
  CHECK_THROWS(WhiteheadAuto(Rank(2), SecondKind{Letter{1, false}, {false, false, true, false}}));
}

TEST_CASE("apply_auto") {
  Rng rng(5);
  SUBCASE("A = {a} fixes everything") {
    WhiteheadAuto a(Rank(3), SecondKind{Letter{2, true}, {false, false, false, true, false, false}});
    for (int i = 0; i < 100; ++i) {
      Word w = testing::random_word(rng, 3, 20);
      CHECK(apply_auto(a, w) == reduce(w));
    }
  }
  SUBCASE("sign flip") {
    WhiteheadAuto flip(Rank(2), FirstKind{{1, 2}, {true, false}});
    CHECK(apply_auto(flip, parse_word("x1 x2")) == parse_word("x1^-1 x2"));
  }
  SUBCASE("substitution rule") {
    // a = x2, A = {x2, x1}: x1 -> x1 x2.
    WhiteheadAuto right(Rank(2), SecondKind{Letter{2, false}, {true, false, true, false}});
    CHECK(apply_auto(right, parse_word("x1")) == parse_word("x1 x2"));
    // A = {x2, x1^-1}: x1 -> x2^-1 x1.
    WhiteheadAuto left(Rank(2), SecondKind{Letter{2, false}, {false, true, true, false}});
    CHECK(apply_auto(left, parse_word("x1")) == parse_word("x2^-1 x1"));
    // A = {x2, x1, x1^-1}: x1 -> x2^-1 x1 x2.
    WhiteheadAuto both(Rank(2), SecondKind{Letter{2, false}, {true, true, true, false}});
    CHECK(apply_auto(both, parse_word("x1 x2")) == parse_word("x2^-1 x1 x2 x2"));
  }
  SUBCASE("some auto sends x1 x2 to a single generator") {
    bool found = false;
    for (const auto& a : enumerate_whitehead_autos(Rank(2))) {
      if (cyclic_reduce(apply_auto(a, parse_word("x1 x2"))).size() == 1) found = true;
    }
    CHECK(found);
  }
  SUBCASE("rank mismatch") {
    WhiteheadAuto flip(Rank(2), FirstKind{{1, 2}, {true, false}});
    CHECK_THROWS_AS(apply_auto(flip, parse_word("x3")), RankError);
  }
}

TEST_CASE("every enumerated automorphism is invertible") {
  for (int r : {2, 3, 4}) {
    for (const auto& phi : enumerate_whitehead_autos(Rank(r))) {
      const auto psi = phi.inverse();
      for (int i = 1; i <= r; ++i) {
        const Word x{Letter{i, false}};
        CHECK(apply_auto(psi, apply_auto(phi, x)) == x);
        CHECK(apply_auto(phi, apply_auto(psi, x)) == x);
      }
    }
  }
}
