#include <map>
#include <memory>

#include "doctest.h"
#include "higgins/error.hpp"
#include "higgins/trefoil.hpp"
#include "oracles/artin.hpp"

using namespace higgins;

namespace {
  // x = b^-1 a, y = a^-1 b^2 in <a, b | a^2 = b^3>
  std::vector<std::string> to_ab(Word const& w) {
    static std::vector<std::string> const img[4] = {
        {"b^-1", "a"}, {"a^-1", "b"}, {"a^-1", "b", "b"}, {"b^-1", "b^-1", "a"}};
    std::vector<std::string> out;
    for (Letter x : w) {
      out.insert(out.end(), img[x].begin(), img[x].end());
    }
    return out;
  }
}  // namespace

TEST_CASE("trefoil: key is faithful against the braid action") {
  TrefoilGroup            G;
  oracles::TrefoilOracle  O;
  std::map<TrefoilGroup::Key, oracles::Action> by_key;
  std::map<oracles::Action, TrefoilGroup::Key> by_action;
  for_each_word(G.alphabet(), 6, [&](Word const& w) {
    auto k = G.key(w);
    auto a = O.action(to_ab(w));
    auto [i, fresh] = by_key.emplace(k, a);
    CHECK(i->second == a);
    auto [j, fresh2] = by_action.emplace(a, k);
    CHECK(j->second == k);
  });
  CHECK(by_key.size() == by_action.size());
}

TEST_CASE("trefoil: normal form") {
  TrefoilGroup    G;
  Alphabet const& X = G.alphabet();
  CHECK(G.equal(X.parse("x y x"), X.parse("y x y")));
  CHECK(!G.equal(X.parse("x y"), X.parse("y x")));
  CHECK(G.key(G.central()).m == std::array<std::int64_t, 4>{-1, 0, 0, -1});
  for_each_word(X, 6, [&](Word const& w) {
    Word n = G.canonical(w);
    CHECK(G.key(n) == G.key(w));
    CHECK(G.canonical(n) == n);
  });
  // d is central
  for (auto s : {"x", "y", "x^-1 y y"}) {
    Word g = X.parse(s);
    CHECK(G.equal(concat(g, G.central()), concat(G.central(), g)));
  }
}

TEST_CASE("trefoil: H = <x, d> cosets") {
  auto            G = std::make_shared<TrefoilGroup>();
  Alphabet const& X = G->alphabet();
  TrefoilSubgroup H(G);
  CHECK(H.member(X.parse("x x x")));
  CHECK(H.member(X.parse("y x y y x y")));
  CHECK(!H.member(X.parse("y")));
  CHECK(H.subgroup_alphabet().format(H.h_express(X.parse("x^-1 y x y y x y")))
        == "x^-1 d");
  for_each_word(X, 5, [&](Word const& g) {
    Word r = H.coset_rep(g);
    CHECK(r.size() <= g.size());
    Word h = concat(g, invert(X, r));
    REQUIRE(H.member(h));
    // g = phi(h_express) * rep
    Word back = concat(H.evaluate(H.h_express(h)), r);
    CHECK(G->equal(back, g));
    CHECK(H.coset_rep(r) == r);
  });
  auto L = H.coset_language();
  CHECK(L.contains(Word{}));
  CHECK(!L.contains(X.parse("x")));
  auto words = L.enumerate(4);
  for (auto const& w : words) {
    CHECK(H.coset_rep(w) == w);
  }
}

TEST_CASE("trefoil: crossover experiment") {
  Report r = trefoil_crossover_experiment(4, 2);
  CHECK(!r.pass());
  CHECK(r.rows.size() == 2);
  CHECK(r.rows[0].rfind("lambda=1 witnesses=", 0) == 0);
  CHECK(r.str().find("min_lambda=none") != std::string::npos);
  CHECK(r.str().find("no lambda <= 2 certified at radius 4") != std::string::npos);
  CHECK(trefoil_crossover_experiment(3, 1, Execution::threads(2)).str()
        == trefoil_crossover_experiment(3, 1).str());
}
