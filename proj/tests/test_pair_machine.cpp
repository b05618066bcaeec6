#include <memory>
#include <sstream>

#include "doctest.h"
#include "higgins/abelian.hpp"
#include "higgins/dfa_io.hpp"
#include "higgins/error.hpp"
#include "higgins/free_group.hpp"
#include "higgins/pair_machine.hpp"

using namespace higgins;

namespace {
  std::size_t index_of(WordDifferenceTable const& T, Word const& d) {
    for (std::size_t i = 0; i < T.differences.size(); ++i) {
      if (T.differences[i] == d) {
        return i;
      }
    }
    FAIL("difference not in table");
    return 0;
  }
}  // namespace

TEST_CASE("pair machine: identity-only table gives the diagonal") {
  Alphabet            X = Alphabet::from_names({"x"});
  PairAlphabet        P(X);
  WordDifferenceTable T;
  T.differences = {Word{}};
  T.transitions = {std::vector<std::int64_t>(P.size(), -1)};
  T.transitions[0][P.symbol(0, 0)] = 0;
  T.transitions[0][P.symbol(1, 1)] = 0;
  Dfa D = build_pair_machine(P, T, 0, 0);
  for_each_word(X, 4, [&](Word const& w) {
    for_each_word(X, 4, [&](Word const& v) {
      CHECK(D.accepts(P.pack(w, v)) == (w == v));
    });
  });
  Dfa proj = project_first(D, P);
  CHECK(equivalent(proj, universal_dfa(symbol_names(X))));
  T.transitions[0][0] = 5;
  CHECK_THROWS_AS(build_pair_machine(P, T, 0, 0), Error);
}

TEST_CASE("pair machine: Z^2 word differences") {
  AbelianGroup        G(2, {});
  Alphabet const&     X = G.alphabet();
  PairAlphabet        P(X);
  WordDifferenceTable T   = difference_table(G, P, 2);
  std::size_t         one = T.identity;
  Dfa D = build_pair_machine(P, T, one, one);
  CHECK(D.accepts(P.pack(X.parse("x1 x2"), X.parse("x2 x1"))));
  CHECK(!D.accepts(P.pack(X.parse("x1 x2"), X.parse("x2"))));
  Dfa Dx1 = build_pair_machine(P, T, one, index_of(T, X.parse("x1")));
  CHECK(Dx1.accepts(P.pack(X.parse("x1 x2"), X.parse("x2"))));

  // accepted iff v^-1 w = target and every intermediate difference is in
  // the ball of radius 2
  for_each_word(X, 3, [&](Word const& w) {
    for_each_word(X, 3, [&](Word const& v) {
      bool inside = true;
      for (std::size_t t = 0; t <= std::max(w.size(), v.size()); ++t) {
        Word d = concat(invert(X, prefix(v, t)), prefix(w, t));
        inside = inside && G.geodesic_length(d) <= 2;
      }
      bool expect = inside && G.equal(w, v);
      CHECK(D.accepts(P.pack(w, v)) == expect);
    });
  });
}

TEST_CASE("pair machine: projections") {
  AbelianGroup        G(2, {});
  Alphabet const&     X = G.alphabet();
  PairAlphabet        P(X);
  Dfa single = finite_dfa(P.symbol_names(),
                          {P.pack(X.parse("x1 x2"), X.parse("x2 x1"))});
  Dfa proj   = project_first(single, P);
  CHECK(enumerate(proj, 4) == std::vector<Word>{X.parse("x1 x2")});
  CHECK(is_empty(project_first(empty_dfa(P.symbol_names()), P)));

  // the projection of the difference machine matches a search over second
  // tracks of length <= |w| + table radius
  WordDifferenceTable T = difference_table(G, P, 1);
  Dfa D = build_pair_machine(P, T, T.identity, index_of(T, X.parse("x1")));
  Dfa proj2 = project_first(D, P);
  for_each_word(X, 3, [&](Word const& w) {
    bool found = false;
    for_each_word(X, w.size() + 1, [&](Word const& v) {
      found = found || D.accepts(P.pack(w, v));
    });
    CHECK(proj2.accepts(w) == found);
  });
}

TEST_CASE("dfa io: round trip and errors") {
  auto F = std::make_shared<FreeGroup>(2);
  Dfa  A = F->canonical_language().dfa();
  std::string text = to_string(A);
  std::istringstream in(text);
  Dfa B = read_dfa(in);
  CHECK(B == A);
  CHECK(to_string(minimize(B)) == to_string(minimize(minimize(B))));
  std::istringstream bad("dfa x\nalphabet a\nstates 1 start 0\naccept 0\n"
                         "trans 0 b 0\n");
  try {
    read_dfa(bad);
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 5);
  }
  std::istringstream comments("# c\ndfa y # name\nalphabet a\nstates 1 start 0"
                              "\naccept 0\ntrans 0 a 0\n");
  CHECK(read_dfa(comments).accepts(Word{0, 0}));
}
