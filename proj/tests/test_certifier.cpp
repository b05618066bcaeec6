#include <functional>
#include <memory>
#include <random>

#include "doctest.h"
#include "higgins/abelian.hpp"
#include "higgins/certifier.hpp"
#include "higgins/error.hpp"
#include "higgins/free_group.hpp"
#include "support/fixtures.hpp"

using namespace higgins;
using namespace higgins::testing;

namespace {
  using Grid = std::vector<std::vector<std::optional<std::size_t>>>;

  std::optional<std::size_t> brute_bottleneck(Grid const& g, std::size_t i, std::size_t j) {
    if (!g[i][j]) {
      return std::nullopt;
    }
    if (i + 1 == g.size() && j + 1 == g[0].size()) {
      return g[i][j];
    }
    std::optional<std::size_t> best;
    auto                       step = [&](std::size_t a, std::size_t b) {
      if (a < g.size() && b < g[0].size()) {
        auto r = brute_bottleneck(g, a, b);
        if (r && (!best || *r < *best)) {
          best = r;
        }
      }
    };
    step(i + 1, j);
    step(i, j + 1);
    step(i + 1, j + 1);
    if (!best) {
      return std::nullopt;
    }
    return std::max(*best, *g[i][j]);
  }

  std::shared_ptr<AbelianGroup const> z2() {
    return std::make_shared<AbelianGroup>(2, std::vector<std::int64_t>{});
  }
}  // namespace

TEST_CASE("cayley ball") {
  auto       G = z2();
  CayleyBall b(*G, 2);
  CHECK(b.size() == 13);
  CHECK(CayleyBall(FreeGroup(2), 2).size() == 17);
  CHECK(CayleyBall(*G, 0).size() == 1);
  Alphabet const& X = G->alphabet();
  CayleyBall      big(*G, 6);
  for (std::size_t i = 0; i < b.size(); ++i) {
    Word const& g = b.element(i);
    CHECK(b.depth(i) == G->geodesic_length(g));
    for (Letter x = 0; x < X.size(); ++x) {
      CHECK(*big.distance(g, concat(g, Word{x})) <= 1);
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      Word const& h = b.element(j);
      CHECK(big.distance(g, h) == big.distance(h, g));
      CHECK((*big.distance(g, h) == 0) == (i == j));
      for (std::size_t k = 0; k < b.size(); k += 3) {
        CHECK(*big.distance(g, b.element(k)) <= *big.distance(g, h) + *big.distance(h, b.element(k)));
      }
    }
  }
}

TEST_CASE("fellow distances") {
  auto            G = z2();
  Alphabet const& X = G->alphabet();
  CayleyBall      ball(*G, 8);
  Word            w = X.parse("x1 x2 x1^-1");
  CHECK(sync_fellow_distance(ball, w, {}, w) == 0);
  CHECK(async_fellow_distance(ball, w, {}, w) == 0);
  CHECK(sync_fellow_distance(ball, X.parse("x1 x2"), {}, X.parse("x2 x1")) == 2);
  CHECK(async_fellow_distance(ball, X.parse("x1 x2"), {}, X.parse("x2 x1")) == 1);
  CHECK(sync_fellow_distance(ball, X.parse("x1^4"), {}, {}) == 4);
  CHECK(!sync_fellow_distance(CayleyBall(*G, 2), X.parse("x1^4"), {}, {}));

  std::mt19937 rng(7);
  for_each_word(X, 3, [&](Word const& u) {
    for (int k = 0; k < 4; ++k) {
      Word v;
      for (int i = 0; i < 3; ++i) {
        v.push_back(rng() % X.size());
      }
      Word h = {static_cast<Letter>(rng() % X.size())};
      CHECK(*async_fellow_distance(ball, u, h, v) <= *sync_fellow_distance(ball, u, h, v));
    }
  });
}

TEST_CASE("bottleneck dynamic programme matches brute force") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 6, m = 1 + rng() % 6;
    Grid        g(n, std::vector<std::optional<std::size_t>>(m));
    for (auto& row : g) {
      for (auto& c : row) {
        if (rng() % 8 != 0) {
          c = rng() % 10;
        }
      }
    }
    CHECK(min_bottleneck(g) == brute_bottleneck(g, 0, 0));
  }
}

TEST_CASE("certify coset systems") {
  auto            G = z2();
  Alphabet const& X = G->alphabet();
  auto H = std::make_shared<AbelianSubgroup>(G, std::vector<Word>{X.parse("x1")});
  auto sys = make_coset_system(H, Mode::synchronous);
  auto c   = certify_coset_system(sys, 8);
  CHECK(c.bounded());
  CHECK(c.K <= 2);
  CHECK(c.pairs > 0);
  CHECK(c.str().rfind("certificate mode=sync radius=8", 0) == 0);
  CHECK(certify_coset_system(sys, 6, Execution::threads(3)).str()
        == certify_coset_system(sys, 6).str());

  // x2^a padded with x1^k x1^-k: the padding drifts further as k grows
  CosetSystem bad = sys;
  bad.language    = Language(X, [&](Word const& w) {
    std::size_t i = 0;
    while (i < w.size() && w[i] == w[0] && X.generator_of(w[0]) == 1) {
      ++i;
    }
    std::size_t k = (w.size() - i) / 2;
    if ((w.size() - i) % 2 != 0) {
      return false;
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (w[i + j] != X.letter("x1") || w[i + k + j] != X.letter("x1^-1")) {
        return false;
      }
    }
    return true;
  });
  CHECK(bad.language.contains(X.parse("x2 x2 x1 x1 x1^-1 x1^-1")));
  auto k4 = certify_coset_system(bad, 4).K;
  auto k8 = certify_coset_system(bad, 8, Execution::serial(), 12).K;
  CHECK(k8 > k4);

  auto whole = std::make_shared<AbelianSubgroup>(
      G, std::vector<Word>{X.parse("x1"), X.parse("x2")});
  // only v = w = ε, with h ranging over the generators: |h| bounds K
  auto trivial = certify_coset_system(make_coset_system(whole), 5);
  CHECK(trivial.K == 1);
  CHECK(trivial.pairs == X.size() + 1);
  CHECK(trivial.bounded());
}

TEST_CASE("certify automatic structures") {
  auto F = std::make_shared<FreeGroup>(2);
  auto c = certify_automatic(F->canonical_language(), F, 6);
  CHECK(c.bounded());
  CHECK(c.K <= 2);
  Language eps(F->alphabet(), finite_dfa(symbol_names(F->alphabet()), {Word{}}));
  CHECK(certify_automatic(eps, F, 4).K == 0);
}

TEST_CASE("concatenated structures") {
  auto            G = z2();
  Alphabet const& X = G->alphabet();
  auto H  = std::make_shared<AbelianSubgroup>(G, std::vector<Word>{X.parse("x1")});
  auto LH = std::make_shared<AbelianGroup>(1, std::vector<std::int64_t>{},
                                           std::vector<std::string>{"y1"});
  ConcatStructure S = concat_structure(LH->canonical_language(), make_coset_system(H));
  Alphabet const& A = S.group->alphabet();
  CHECK(A.format(A.parse("y1 x2")) == "y1 x2");
  std::vector<Word> expect;
  for (auto const& w : S.language.enumerate(4)) {
    // words are y1^a x2^b
    std::size_t i = 0;
    while (i < w.size() && A.generator_of(w[i]) == 2) {
      ++i;
    }
    for (std::size_t j = i; j < w.size(); ++j) {
      CHECK(A.generator_of(w[j]) == 1);
    }
  }
  CHECK(S.language.enumerate(4).size() == 41);  // |a| + |b| <= 4
  CHECK(S.group->equal(A.parse("y1"), A.parse("x1")));
  CHECK(certify_automatic(S.language, S.group, 5).bounded());

  // H trivial: L = L^H; H = G: L = L_H
  auto              T  = std::make_shared<AbelianSubgroup>(G, std::vector<Word>{});
  Alphabet          Y0 = T->subgroup_alphabet();
  Language          eps(Y0, finite_dfa(symbol_names(Y0), {Word{}}));
  ConcatStructure   S0 = concat_structure(eps, make_coset_system(T));
  CHECK(S0.language.enumerate(4) == G->canonical_language().enumerate(4));
  auto whole = std::make_shared<AbelianSubgroup>(
      G, std::vector<Word>{X.parse("x1"), X.parse("x2")});
  auto LG = std::make_shared<AbelianGroup>(2, std::vector<std::int64_t>{},
                                           std::vector<std::string>{"y1", "y2"});
  ConcatStructure S1 = concat_structure(LG->canonical_language(), make_coset_system(whole));
  CHECK(S1.language.enumerate(3).size() == LG->canonical_language().enumerate(3).size());
  CHECK_THROWS_AS(concat_structure(G->canonical_language(), make_coset_system(H)), Error);
}

TEST_CASE("geodesic coset filter") {
  auto            G = z2();
  Alphabet const& X = G->alphabet();
  auto H   = std::make_shared<AbelianSubgroup>(G, std::vector<Word>{X.parse("x1")});
  auto sys = make_coset_system(H, Mode::synchronous);
  Dfa  detour = concat(sys.language.dfa(),
                       finite_dfa(symbol_names(X), {Word{}, X.parse("x1 x1^-1")}));
  CosetSystem padded = sys;
  padded.language    = Language(X, detour);
  CHECK(padded.language.contains(X.parse("x2 x2 x1 x1^-1")));
  auto f = geodesic_coset_filter(padded, 6);
  CHECK(f.coverage.pass());
  CHECK(f.system.language.enumerate(7) == sys.language.enumerate(7));
  auto same = geodesic_coset_filter(sys, 6);
  CHECK(same.system.language.enumerate(7) == sys.language.enumerate(7));
  CHECK(certify_coset_system(f.system, 6).bounded());
}

TEST_CASE("combination hypotheses") {
  HypothesisOptions opts;
  opts.radius = 4;
  Report tref = combination_hypotheses_report(*trefoil_gog(), opts);
  CHECK(tref.pass());
  CHECK(tref.str().find("theorem=sync check=letters edge=e status=fail") != std::string::npos);
  opts.theorem = Mode::synchronous;
  CHECK(!combination_hypotheses_report(*trefoil_gog(), opts).pass());
  CHECK(combination_hypotheses_report(*hnn_gog(), opts).pass());
  CHECK(combination_hypotheses_report(*free_product_gog(), opts).pass());

  // a -> b with Y = {b^2, b^3} on the far side is not stable
  DirectedGraph g;
  g.add_vertex("u");
  g.add_vertex("v");
  EdgeId e  = g.add_edge("e", 0, 1);
  auto   A  = cyclic("a"), B = cyclic("b");
  auto   gog = std::make_shared<GraphOfGroups>(g);
  gog->set_vertex_group(0, A);
  gog->set_vertex_group(1, B);
  gog->set_edge(e, std::make_shared<AbelianSubgroup>(
                       B, std::vector<Word>{B->alphabet().parse("b")}),
                {A->alphabet().parse("a^2"), });
  gog->set_edge(DirectedGraph::reverse(e),
                std::make_shared<AbelianSubgroup>(
                    A, std::vector<Word>{A->alphabet().parse("a^2"),
                                         A->alphabet().parse("a^3")}),
                {});
  CHECK_THROWS_AS(gog->derive_reverse_iso(e), Error);
}
