#include <memory>

#include "doctest.h"
#include "higgins/abelian.hpp"
#include "higgins/coset_system.hpp"
#include "higgins/error.hpp"
#include "higgins/free_group.hpp"

using namespace higgins;

namespace {
  std::shared_ptr<AbelianGroup const> z2() {
    return std::make_shared<AbelianGroup>(2, std::vector<std::int64_t>{});
  }
}  // namespace

TEST_CASE("crossover: Z^2 with H = <x1>") {
  auto            G = z2();
  Alphabet const& X = G->alphabet();
  auto            H = std::make_shared<AbelianSubgroup>(G, std::vector<Word>{X.parse("x1")});
  auto            sys = make_coset_system(H);
  std::vector<Word> Y = {X.parse("x1")};

  Report r = check_limited_crossover(sys, Y, Y, 1, 6);
  CHECK(r.pass());
  CHECK(check_limited_crossover(sys, Y, {Word{}}, 1, 6).pass());

  Report m = check_maximal_crossover(sys, Y, Y, 1, 6);
  CHECK(!m.pass());
  bool seen = false;
  for (auto const& w : m.witnesses) {
    seen = seen || w == "u=x2 g=x1 x1 x1 v=x2 excess=2";
  }
  CHECK(seen);

  // scaling: k * lambda also passes
  for (std::size_t k : {2, 3}) {
    CHECK(check_limited_crossover(sys, Y, Y, k, 6).pass());
  }
  CHECK_THROWS_AS(check_limited_crossover(sys, {X.parse("x2")}, Y, 1, 3), Error);
}

TEST_CASE("crossover: serial and parallel sweeps agree") {
  auto            G = z2();
  Alphabet const& X = G->alphabet();
  auto H = std::make_shared<AbelianSubgroup>(G, std::vector<Word>{X.parse("x1 x2")});
  auto sys = make_coset_system(H);
  std::vector<Word> Y = {X.parse("x1 x2")};
  std::vector<Word> Z = {X.parse("x1"), X.parse("x2")};
  auto a = check_maximal_crossover(sys, Y, Z, 1, 5, Execution::serial());
  auto b = check_maximal_crossover(sys, Y, Z, 1, 5, Execution::threads(3));
  CHECK(a.str() == b.str());
  CHECK(!a.pass());
}

TEST_CASE("crossover: free group with H = <a>") {
  auto            F = std::make_shared<FreeGroup>(2);
  Alphabet const& X = F->alphabet();
  auto H   = std::make_shared<FreeCyclicSubgroup>(F, X.parse("a"));
  auto sys = make_coset_system(H);
  std::vector<Word> Y = {X.parse("a")};
  CHECK(check_maximal_crossover(sys, Y, Y, 1, 5).pass());
  // the pruned language has no u outside H of length 0
  CHECK(check_maximal_crossover(sys, Y, Y, 1, 0).pass());
}

TEST_CASE("stability") {
  auto         A = std::make_shared<AbelianGroup>(1, std::vector<std::int64_t>{},
                                          std::vector<std::string>{"a"});
  auto         B = std::make_shared<AbelianGroup>(1, std::vector<std::int64_t>{},
                                          std::vector<std::string>{"b"});
  Alphabet const& XA = A->alphabet();
  Alphabet const& XB = B->alphabet();

  AbelianSubgroup a2(A, {XA.parse("a^2")});
  AbelianSubgroup b3(B, {XB.parse("b^3")});
  CHECK(check_stability(a2, b3, {XB.parse("b^3")}, 1, 4).pass());

  AbelianSubgroup a1(A, {XA.parse("a")});
  AbelianSubgroup b23(B, {XB.parse("b^2"), XB.parse("b^3")});
  Report          r = check_stability(a1, b23, {XB.parse("b")}, 1, 2);
  CHECK(!r.pass());
  CHECK(r.witnesses.front() == "h=y1 phi=b excess=1");
  CHECK(check_stability(a1, b23, {XB.parse("b")}, 2, 2).pass());

  // not a homomorphism on the relation y1 y2^-1 = 1 (both generate <a>)
  AbelianSubgroup aa(A, {XA.parse("a"), XA.parse("a")});
  AbelianSubgroup bb(B, {XB.parse("b")});
  CHECK_THROWS_AS(
      check_stability(aa, bb, {XB.parse("b"), XB.parse("b^2")}, 1, 2), Error);
  CHECK_THROWS_AS(check_stability(a2, b3, {XB.parse("b")}, 1, 2), Error);
}

TEST_CASE("concatenates up") {
  auto            G = z2();
  Alphabet const& X = G->alphabet();
  AbelianSubgroup H(G, {X.parse("x1")});
  CHECK(check_concatenates_up(H, 8).pass());
  auto            F = std::make_shared<FreeGroup>(2);
  FreeCyclicSubgroup Ha(F, F->alphabet().parse("a"));
  CHECK(check_concatenates_up(Ha, 8).pass());
  AbelianSubgroup Hd(G, {X.parse("x1 x2")});
  CHECK_THROWS_AS(check_concatenates_up(Hd, 4), Error);
  // serial and parallel agree
  CHECK(check_concatenates_up(Ha, 6, Execution::threads(2)).str()
        == check_concatenates_up(Ha, 6).str());
}

TEST_CASE("prune identity coset") {
  auto            G = z2();
  Alphabet const& X = G->alphabet();
  auto H = std::make_shared<AbelianSubgroup>(G, std::vector<Word>{X.parse("x1")});
  auto sys = make_coset_system(H);
  auto same = prune_identity_coset(sys);
  CHECK(same.language.enumerate(8) == sys.language.enumerate(8));

  CosetSystem extra = sys;
  extra.language = Language(
      X, unite(sys.language.dfa(), finite_dfa(symbol_names(X), {X.parse("x1")})));
  CHECK(extra.language.contains(X.parse("x1")));
  auto pruned = prune_identity_coset(extra);
  CHECK(pruned.language.enumerate(8) == sys.language.enumerate(8));
  CHECK(check_coset_coverage(pruned, 6, 6).pass());

  auto whole = std::make_shared<AbelianSubgroup>(
      G, std::vector<Word>{X.parse("x1"), X.parse("x2")});
  auto all = prune_identity_coset(make_coset_system(whole));
  CHECK(all.language.enumerate(5) == std::vector<Word>{Word{}});

  CosetSystem no_eps = sys;
  no_eps.language = Language(X, finite_dfa(symbol_names(X), {X.parse("x2")}));
  CHECK_THROWS_AS(prune_identity_coset(no_eps), Error);
}
