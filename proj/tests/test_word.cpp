#include <random>

#include "doctest.h"
#include "higgins/error.hpp"
#include "higgins/word.hpp"

using namespace higgins;

namespace {
  Alphabet xy() {
    return Alphabet::from_names({"x", "y"});
  }
}  // namespace

TEST_CASE("word: alphabet layout and parsing") {
  Alphabet A = xy();
  CHECK(A.size() == 4);
  CHECK(A.name(1) == "x^-1");
  CHECK(A.inverse(2) == 3);
  CHECK(A.parse("x y^-1") == Word{0, 3});
  CHECK(A.parse("x^3") == Word{0, 0, 0});
  CHECK(A.parse("y^-2") == Word{3, 3});
  CHECK(A.parse("ε").empty());
  CHECK(A.parse("").empty());
  CHECK(A.format(Word{}) == "ε");
  CHECK(A.format(A.parse("x y^-1")) == "x y^-1");
  CHECK_THROWS_AS(A.parse("z"), ParseError);
  CHECK_THROWS_AS(A.parse("x^q"), ParseError);
  CHECK_THROWS_AS(Alphabet::from_names({"x", "x"}), Error);
  CHECK_THROWS_AS(Alphabet::from_names({"a b"}), Error);

  Alphabet T({{"t", true}, {"u", false}});
  CHECK(T.size() == 3);
  CHECK(T.is_self_inverse(0));
  CHECK(T.parse("t^3") == Word{0});
  CHECK(T.parse("t^-2").empty());
}

TEST_CASE("word: invert") {
  Alphabet A = xy();
  CHECK(A.format(invert(A, A.parse("x y"))) == "y^-1 x^-1");
  CHECK(invert(A, Word{}).empty());
  CHECK(A.format(invert(A, A.parse("x x"))) == "x^-1 x^-1");
}

TEST_CASE("word: free_reduce") {
  Alphabet A = xy();
  CHECK(A.format(free_reduce(A, A.parse("x x^-1 y"))) == "y");
  CHECK(free_reduce(A, Word{}).empty());
  CHECK(free_reduce(A, A.parse("x y y^-1 x^-1")).empty());
  CHECK(is_freely_reduced(A, A.parse("x y x")));
  CHECK(!is_freely_reduced(A, A.parse("x y y^-1")));
}

TEST_CASE("word: shortlex_cmp") {
  Alphabet A = xy();
  CHECK(shortlex_cmp(A, A.parse("x"), A.parse("y")) < 0);
  CHECK(shortlex_cmp(A, A.parse("x y"), A.parse("x")) > 0);
  CHECK(shortlex_cmp(A, A.parse("x y"), A.parse("x x")) > 0);
  CHECK(shortlex_cmp(A, A.parse("x^-1"), A.parse("y")) < 0);
  CHECK(shortlex_cmp(A, Word{}, Word{}) == 0);
  CHECK_THROWS_AS(shortlex_cmp(A, Word{7}, Word{}), Error);
}

TEST_CASE("word: prefix") {
  Alphabet A = Alphabet::from_names({"x", "y", "z"});
  CHECK(A.format(prefix(A.parse("x y z"), 2)) == "x y");
  CHECK(A.format(prefix(A.parse("x y"), 5)) == "x y");
  CHECK(prefix(Word{}, 0).empty());
}

TEST_CASE("word: enumeration order") {
  Alphabet          A = xy();
  std::vector<Word> seen;
  for_each_word(A, 3, [&](Word const& w) { seen.push_back(w); });
  CHECK(seen.size() == 1 + 4 + 16 + 64);
  for (std::size_t i = 1; i < seen.size(); ++i) {
    CHECK(shortlex_cmp(seen[i - 1], seen[i]) < 0);
  }
  CHECK(all_words(A, 2).size() == 16);
}

TEST_CASE("word: reduction and order laws on random words") {
  Alphabet                        A = xy();
  std::mt19937                    rng(17);
  std::uniform_int_distribution<> len(0, 12), let(0, 3);
  auto                            random_word = [&]() {
    Word w(len(rng));
    for (auto& x : w) {
      x = let(rng);
    }
    return w;
  };
  for (int trial = 0; trial < 500; ++trial) {
    Word u = random_word(), v = random_word(), w = random_word();
    Word r = free_reduce(A, u);
    CHECK(free_reduce(A, r) == r);
    CHECK(r.size() <= u.size());
    CHECK(free_reduce(A, concat(u, invert(A, u))).empty());
    CHECK(invert(A, invert(A, u)) == u);
    // antisymmetry and transitivity
    CHECK((shortlex_cmp(u, v) < 0) == (shortlex_cmp(v, u) > 0));
    if (shortlex_cmp(u, v) < 0 && shortlex_cmp(v, w) < 0) {
      CHECK(shortlex_cmp(u, w) < 0);
    }
    CHECK(shortlex_cmp(Word{}, u) <= 0);
    CHECK(prefix(u, u.size()) == u);
    std::size_t s = len(rng), t = len(rng);
    CHECK(prefix(prefix(u, s), t) == prefix(u, std::min(s, t)));
  }
}
