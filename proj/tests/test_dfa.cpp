#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "higgins/dfa.hpp"
#include "higgins/error.hpp"
#include "support/random_dfa.hpp"

using namespace higgins;
using higgins::testing::brute_language;
using higgins::testing::random_dfa;

namespace {
  std::vector<std::string> const ab = {"a", "b"};

  std::set<Word> as_set(std::vector<Word> const& v) {
    return {v.begin(), v.end()};
  }
}  // namespace

TEST_CASE("dfa: concat of finite languages") {
  Dfa A = finite_dfa(ab, {Word{0}});
  Dfa B = finite_dfa(ab, {Word{1}, Word{1, 1}});
  Dfa C = concat(A, B);
  CHECK(enumerate(C, 5) == std::vector<Word>{{0, 1}, {0, 1, 1}});
}

TEST_CASE("dfa: complement and universal identities") {
  Dfa A = finite_dfa(ab, {Word{0}, Word{0, 1, 1}, Word{}});
  CHECK(enumerate(complement(complement(A)), 8) == enumerate(A, 8));
  CHECK(enumerate(intersect(A, universal_dfa(ab)), 8) == enumerate(A, 8));
  CHECK(enumerate(unite(A, empty_dfa(ab)), 8) == enumerate(A, 8));
  CHECK(is_empty(intersect(A, complement(A))));
}

TEST_CASE("dfa: enumerate") {
  std::vector<std::string> x = {"x"};
  Dfa                      star = universal_dfa(x);
  CHECK(enumerate(star, 2) == std::vector<Word>{{}, {0}, {0, 0}});
  CHECK(enumerate(empty_dfa(ab), 5).empty());
  Dfa all = universal_dfa(ab);
  auto words = enumerate(all, 3);
  CHECK(words.size() == 15);
  CHECK(std::is_sorted(words.begin(), words.end(), ShortlexLess{}));
}

TEST_CASE("dfa: alphabet mismatch") {
  Dfa A = universal_dfa(ab);
  Dfa B = universal_dfa({"a"});
  CHECK_THROWS_AS(intersect(A, B), Error);
  CHECK_THROWS_AS(concat(A, B), Error);
}

TEST_CASE("dfa: determinize with epsilon moves") {
  Nfa N(ab);
  State s0 = N.add_state(), s1 = N.add_state(), s2 = N.add_state(true);
  N.starts.push_back(s0);
  N.add_transition(s0, 0, s0);
  N.add_epsilon(s0, s1);
  N.add_transition(s1, 1, s2);
  Dfa D = determinize(N);
  CHECK(D.accepts(Word{1}));
  CHECK(D.accepts(Word{0, 0, 1}));
  CHECK(!D.accepts(Word{1, 0}));
  CHECK(!D.accepts(Word{}));
}

TEST_CASE("dfa: minimize merges equivalent states") {
  // (a|b)* a with a redundant copy of the accepting state
  Dfa A(ab, 4);
  A.set_start(0);
  A.set_transition(0, 0, 1);
  A.set_transition(0, 1, 0);
  A.set_transition(1, 0, 3);
  A.set_transition(1, 1, 2);
  A.set_transition(2, 0, 3);
  A.set_transition(2, 1, 0);
  A.set_transition(3, 0, 1);
  A.set_transition(3, 1, 2);
  A.set_accepting(1);
  A.set_accepting(3);
  Dfa M = minimize(A);
  CHECK(M.num_states() == 2);
  CHECK(minimize(M) == M);
  CHECK(equivalent(A, M));
}

TEST_CASE("dfa: randomized property suite") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    Dfa A = random_dfa(rng, 6, ab);
    Dfa B = random_dfa(rng, 6, ab);
    auto LA = brute_language(A, 8), LB = brute_language(B, 8);

    Dfa M = minimize(A);
    CHECK(minimize(M) == M);
    CHECK(as_set(enumerate(M, 8)) == LA);
    CHECK(as_set(enumerate(A, 8)) == LA);

    std::set<Word> inter, uni;
    std::set_intersection(LA.begin(), LA.end(), LB.begin(), LB.end(),
                          std::inserter(inter, inter.end()));
    std::set_union(LA.begin(), LA.end(), LB.begin(), LB.end(),
                   std::inserter(uni, uni.end()));
    CHECK(as_set(enumerate(intersect(A, B), 8)) == inter);
    CHECK(as_set(enumerate(unite(A, B), 8)) == uni);
    CHECK(as_set(enumerate(complement(complement(A)), 8)) == LA);
    auto comp = as_set(enumerate(complement(A), 8));
    CHECK(comp.size() + LA.size() == (1u << 9) - 1);
    for (auto const& w : comp) {
      CHECK(LA.count(w) == 0);
    }
    // concatenation checked against pairwise products up to length 6
    std::set<Word> cat;
    auto           LA6 = brute_language(A, 6), LB6 = brute_language(B, 6);
    for (auto const& u : LA6) {
      for (auto const& v : LB6) {
        if (u.size() + v.size() <= 6) {
          cat.insert(concat(u, v));
        }
      }
    }
    CHECK(as_set(enumerate(concat(A, B), 6)) == cat);
  }
}
