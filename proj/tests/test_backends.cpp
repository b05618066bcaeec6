#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>

#include "doctest.h"
#include "higgins/abelian.hpp"
#include "higgins/error.hpp"
#include "higgins/finite_group.hpp"
#include "higgins/free_group.hpp"

using namespace higgins;

namespace {
  // Independent exponent count for one generator per factor.
  std::vector<long> count_exponents(Alphabet const& A, Word const& w) {
    std::vector<long> v(A.num_generators(), 0);
    for (Letter x : w) {
      v[A.generator_of(x)] += A.is_positive(x) ? 1 : -1;
    }
    return v;
  }

  // Shortlex least word over the letters of A in each class of `key`,
  // found by scanning all words up to length n in shortlex order.
  template <typename Key>
  std::map<Key, Word> brute_reps(Alphabet const&                       A,
                                 std::size_t                           n,
                                 std::function<Key(Word const&)> const& key) {
    std::map<Key, Word> reps;
    for_each_word(A, n, [&](Word const& w) { reps.emplace(key(w), w); });
    return reps;
  }

  // S3 as permutations of {0,1,2}; element i is perms[i].
  std::vector<std::array<int, 3>> const s3 = {{0, 1, 2},
                                              {1, 2, 0},
                                              {2, 0, 1},
                                              {1, 0, 2},
                                              {0, 2, 1},
                                              {2, 1, 0}};

  FiniteGroup::Table s3_table() {
    FiniteGroup::Table t(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        std::array<int, 3> p;
        for (int k = 0; k < 3; ++k) {
          p[k] = s3[j][s3[i][k]];  // apply i then j
        }
        t[i][j] = std::find(s3.begin(), s3.end(), p) - s3.begin();
      }
    }
    return t;
  }
}  // namespace

TEST_CASE("abelian: canonical forms") {
  auto G = std::make_shared<AbelianGroup>(2, std::vector<std::int64_t>{});
  Alphabet const& X = G->alphabet();
  CHECK(X.format(G->canonical(X.parse("x1 x2 x1"))) == "x1 x1 x2");
  AbelianGroup T(0, {4}, {"t"});
  CHECK(T.alphabet().format(T.canonical(T.alphabet().parse("t^3 t^2"))) == "t");
  CHECK(T.alphabet().format(T.canonical(T.alphabet().parse("t^3"))) == "t^-1");
  CHECK(T.alphabet().format(T.canonical(T.alphabet().parse("t^2"))) == "t t");
  CHECK(T.alphabet().format(T.canonical(T.alphabet().parse("t^-2"))) == "t t");
  AbelianGroup Z(1, {});
  CHECK(Z.geodesic_length(Z.alphabet().parse("x1 x1^-1")) == 0);
  CHECK_THROWS_AS(AbelianGroup(1, {1}), Error);
}

TEST_CASE("abelian: canonical forms agree with brute force to length 6") {
  AbelianGroup    G(1, {2, 3}, {"x", "s", "t"});
  Alphabet const& X = G.alphabet();
  auto            key = [&](Word const& w) {
    auto v = count_exponents(X, w);
    return std::vector<long>{v[0], ((v[1] % 2) + 2) % 2, ((v[2] % 3) + 3) % 3};
  };
  auto reps = brute_reps<std::vector<long>>(X, 6, key);
  Language L = G.canonical_language();
  std::size_t count = 0;
  for_each_word(X, 5, [&](Word const& w) {
    Word c = G.canonical(w);
    CHECK(c == reps.at(key(w)));
    CHECK(G.geodesic_length(w) == c.size());
    CHECK(L.contains(w) == (c == w));
    ++count;
  });
  CHECK(count > 0);
}

TEST_CASE("abelian subgroup: Z^2, H = <x1 x2>") {
  auto G = std::make_shared<AbelianGroup>(2, std::vector<std::int64_t>{});
  Alphabet const& X = G->alphabet();
  AbelianSubgroup H(G, {X.parse("x1 x2")});
  Word            g = X.parse("x1^2 x2^3");
  CHECK(X.format(H.coset_rep(g)) == "x1^-1");
  Word h = H.h_express(concat(g, invert(X, H.coset_rep(g))));
  CHECK(H.subgroup_alphabet().format(h) == "y1 y1 y1");
  CHECK(H.coset_rep(Word{}).empty());
  CHECK(X.format(H.coset_rep(X.parse("x2"))) == "x1^-1");

  auto words = H.coset_language().enumerate(2);
  std::vector<std::string> shown;
  for (auto const& w : words) {
    shown.push_back(X.format(w));
  }
  CHECK(shown
        == std::vector<std::string>{"ε", "x1", "x1^-1", "x1 x1", "x1^-1 x1^-1"});
  CHECK_THROWS_AS(H.h_express(X.parse("x1")), Error);
}

TEST_CASE("abelian subgroup: Z^2, H = <x1>") {
  auto G = std::make_shared<AbelianGroup>(2, std::vector<std::int64_t>{});
  Alphabet const& X = G->alphabet();
  AbelianSubgroup H(G, {X.parse("x1")});
  auto            words = H.coset_language().enumerate(3);
  std::vector<std::string> shown;
  for (auto const& w : words) {
    shown.push_back(X.format(w));
  }
  CHECK(shown
        == std::vector<std::string>{"ε",
                                    "x2",
                                    "x2^-1",
                                    "x2 x2",
                                    "x2^-1 x2^-1",
                                    "x2 x2 x2",
                                    "x2^-1 x2^-1 x2^-1"});
}

TEST_CASE("abelian subgroup: coset reps match a brute-force coset table") {
  // Z^2 x Z/4 with H = <x1 t, x2^2>
  auto G = std::make_shared<AbelianGroup>(2, std::vector<std::int64_t>{4},
                                          std::vector<std::string>{"x1", "x2", "t"});
  Alphabet const& X = G->alphabet();
  AbelianSubgroup H(G, {X.parse("x1 t"), X.parse("x2 x2")});
  // (a, b, c) in H iff a = c mod 4 ... more precisely
  // (a, b, c) = m (1, 0, 1) + n (0, 2, 0) + k (0, 0, 4): b even, c = a mod 4
  auto in_h = [](std::vector<long> const& v) {
    return v[1] % 2 == 0 && ((v[2] - v[0]) % 4 + 4) % 4 == 0;
  };
  // coset key: (b mod 2, (c - a) mod 4)
  auto key = [&](Word const& w) {
    auto v = count_exponents(X, w);
    return std::pair<long, long>{((v[1] % 2) + 2) % 2,
                                 (((v[2] - v[0]) % 4) + 4) % 4};
  };
  auto reps = brute_reps<std::pair<long, long>>(X, 4, key);
  CHECK(reps.size() == 8);
  Language L = H.coset_language();
  for_each_word(X, 5, [&](Word const& w) {
    Word r = H.coset_rep(w);
    CHECK(r == reps.at(key(w)));
    CHECK(H.member(w) == in_h(count_exponents(X, w)));
    // decomposition g = h * rep
    Word h = H.h_express(concat(w, invert(X, r)));
    CHECK(G->equal(concat(H.evaluate(h), r), w));
    CHECK(L.contains(w) == (r == w));
  });
  // constant on right cosets
  for_each_word(X, 3, [&](Word const& w) {
    for (auto const& y : H.generators()) {
      CHECK(H.coset_rep(concat(y, w)) == H.coset_rep(w));
    }
  });
}

TEST_CASE("free group: canonical and cyclic subgroups") {
  auto            F = std::make_shared<FreeGroup>(2);
  Alphabet const& X = F->alphabet();
  FreeCyclicSubgroup Ha(F, X.parse("a"));
  CHECK(X.format(Ha.coset_rep(X.parse("a^2 b a"))) == "b a");
  CHECK(Ha.member(X.parse("a^-3")));
  CHECK(!Ha.member(X.parse("b")));
  FreeCyclicSubgroup Hab(F, X.parse("a b"));
  CHECK(X.format(Hab.coset_rep(X.parse("a b a b b"))) == "b");
  CHECK_THROWS_AS(FreeCyclicSubgroup(F, X.parse("a b a^-1")), Error);
  CHECK_THROWS_AS(FreeCyclicSubgroup(F, Word{}), Error);
  // a proper power: a is not in <a^2>
  FreeCyclicSubgroup Ha2(F, X.parse("a a"));
  CHECK(!Ha2.member(X.parse("a")));
  CHECK(Ha2.member(X.parse("a^-4")));
}

TEST_CASE("free group: coset reps are shortlex least in their coset") {
  auto            F = std::make_shared<FreeGroup>(2);
  Alphabet const& X = F->alphabet();
  for (char const* gen : {"a", "a b", "a a", "a b^-1 a b", "b a a"}) {
    FreeCyclicSubgroup H(F, X.parse(gen));
    Word const         c = X.parse(gen);
    Language           L = H.coset_language();
    for_each_word(X, 6, [&](Word const& w) {
      Word r = H.coset_rep(w);
      // brute force: least reduced c^m w over |m| <= |w| + 2
      Word best = free_reduce(X, w);
      for (long m = -static_cast<long>(w.size()) - 2;
           m <= static_cast<long>(w.size()) + 2;
           ++m) {
        Word v = free_reduce(X, concat(power(X, c, m), w));
        if (shortlex_cmp(v, best) < 0) {
          best = v;
        }
      }
      CHECK(r == best);
      CHECK(H.same_coset(r, w));
      CHECK(L.contains(w) == (w == r));
      Word h = H.h_express(concat(w, invert(X, r)));
      CHECK(F->equal(concat(H.evaluate(h), r), w));
    });
  }
}

TEST_CASE("finite group: S3") {
  auto G = std::make_shared<FiniteGroup>(
      s3_table(), std::vector<std::pair<std::string, std::size_t>>{{"r", 1}, {"s", 3}});
  Alphabet const& X = G->alphabet();
  CHECK(X.size() == 3);  // r, r^-1, s
  CHECK(X.is_self_inverse(X.letter("s")));
  FiniteSubgroup H(G, {X.parse("s")});
  CHECK(H.num_cosets() == 3);
  CHECK(H.order() == 2);
  Language L = H.coset_language();
  CHECK(L.enumerate(5).size() == 3);
  for_each_word(X, 6, [&](Word const& w) {
    // brute force equality through the permutation product
    std::size_t e = 0;
    for (Letter x : w) {
      e = s3_table()[e][G->letter_element(x)];
    }
    CHECK(G->element(w) == e);
    CHECK(G->canonical(G->canonical(w)) == G->canonical(w));
    Word r = H.coset_rep(w);
    CHECK(H.same_coset(r, w));
    Word h = H.h_express(concat(w, invert(X, r)));
    CHECK(G->equal(concat(H.evaluate(h), r), w));
  });
  FiniteGroup Z2({{0, 1}, {1, 0}}, {{"t", 1}});
  CHECK(Z2.alphabet().format(Z2.canonical(Z2.alphabet().parse("t t t"))) == "t");
  TrivialSubgroup triv(G);
  for_each_word(X, 4, [&](Word const& w) {
    CHECK(triv.coset_rep(w) == G->canonical(w));
  });
}

TEST_CASE("finite group: table validation") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}, {{"t", 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}, {{"t", 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2}, {1, 2}}, {{"t", 1}}), Error);
  CHECK(FiniteGroup::parse_csv("0,1\n1,0\n").size() == 2);
  CHECK_THROWS_AS(FiniteGroup::parse_csv("0,x\n"), ParseError);
}

TEST_CASE("backend invariants on balls") {
  auto Z2 = std::make_shared<AbelianGroup>(2, std::vector<std::int64_t>{});
  CHECK(Z2->ball(2).size() == 13);
  auto F2 = std::make_shared<FreeGroup>(2);
  CHECK(F2->ball(2).size() == 17);
  CHECK(F2->ball(0).size() == 1);
  for (GroupBackend const* G : {static_cast<GroupBackend const*>(Z2.get()),
                                static_cast<GroupBackend const*>(F2.get())}) {
    Alphabet const& X = G->alphabet();
    for (auto const& u : G->ball(3)) {
      CHECK(G->canonical(u) == u);
      for (Letter x = 0; x < X.size(); ++x) {
        CHECK(G->canonical(concat(u, Word{x}, Word{X.inverse(x)})) == u);
      }
    }
  }
}
