#include "higgins/certifier.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>

#include "higgins/error.hpp"

namespace higgins {

  ////////////////////////////////////////////////////////////////////////
  // CayleyBall
  ////////////////////////////////////////////////////////////////////////

  CayleyBall::CayleyBall(GroupBackend const& G, std::size_t radius)
      : _group(&G), _radius(radius) {
    Alphabet const& X = G.alphabet();
    _elements         = G.ball(radius);
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      _index.emplace(_elements[i], i);
    }
    // the ball is ordered by distance, so depths follow from the layers
    _depth.assign(_elements.size(), 0);
    _adjacent.assign(_elements.size() * X.size(), -1);
    std::vector<bool> placed(_elements.size(), false);
    placed[0] = true;
    std::deque<std::size_t> queue = {0};
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (Letter x = 0; x < X.size(); ++x) {
        Word g  = G.canonical(concat(_elements[i], Word{x}));
        auto it = _index.find(g);
        if (it == _index.end()) {
          continue;
        }
        _adjacent[i * X.size() + x] = static_cast<std::int64_t>(it->second);
        if (!placed[it->second]) {
          placed[it->second]    = true;
          _depth[it->second]    = _depth[i] + 1;
          queue.push_back(it->second);
        }
      }
    }
  }

  std::optional<std::size_t> CayleyBall::index(Word const& w) const {
    auto it = _index.find(_group->canonical(w));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<std::size_t> CayleyBall::length(Word const& w) const {
    auto i = index(w);
    if (!i) {
      return std::nullopt;
    }
    return _depth[*i];
  }

  std::optional<std::size_t> CayleyBall::distance(Word const& g, Word const& h) const {
    return length(concat(invert(_group->alphabet(), g), h));
  }

  ////////////////////////////////////////////////////////////////////////
  // Fellow distances
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Canonical forms of the prefixes of h w, t = 0 .. |w|.
    std::vector<Word> prefix_elements(GroupBackend const& G, Word const& h, Word const& w) {
      std::vector<Word> out;
      Word              cur = G.canonical(h);
      out.push_back(cur);
      for (Letter x : w) {
        cur = G.canonical(concat(cur, Word{x}));
        out.push_back(cur);
      }
      return out;
    }
  }  // namespace

  std::optional<std::size_t> sync_fellow_distance(CayleyBall const& ball,
                                                  Word const&       w1,
                                                  Word const&       h,
                                                  Word const&       w2) {
    GroupBackend const& G = ball.group();
    Alphabet const&     X = G.alphabet();
    auto                P = prefix_elements(G, Word{}, w1);
    auto                Q = prefix_elements(G, h, w2);
    std::size_t         K = 0;
    for (std::size_t t = 0; t < std::max(P.size(), Q.size()); ++t) {
      Word const& p = P[std::min(t, P.size() - 1)];
      Word const& q = Q[std::min(t, Q.size() - 1)];
      auto        d = ball.length(concat(invert(X, p), q));
      if (!d) {
        return std::nullopt;
      }
      K = std::max(K, *d);
    }
    return K;
  }

  std::optional<std::size_t> min_bottleneck(
      std::vector<std::vector<std::optional<std::size_t>>> const& grid) {
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::size_t           n   = grid.size();
    if (n == 0 || grid[0].empty()) {
      return std::nullopt;
    }
    std::size_t                           m = grid[0].size();
    std::vector<std::vector<std::size_t>> best(n, std::vector<std::size_t>(m, inf));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!grid[i][j]) {
          continue;
        }
        std::size_t from = inf;
        if (i == 0 && j == 0) {
          from = 0;
        }
        if (i > 0) {
          from = std::min(from, best[i - 1][j]);
        }
        if (j > 0) {
          from = std::min(from, best[i][j - 1]);
        }
        if (i > 0 && j > 0) {
          from = std::min(from, best[i - 1][j - 1]);
        }
        if (from != inf) {
          best[i][j] = std::max(from, *grid[i][j]);
        }
      }
    }
    if (best[n - 1][m - 1] == inf) {
      return std::nullopt;
    }
    return best[n - 1][m - 1];
  }

  std::optional<std::size_t> async_fellow_distance(CayleyBall const& ball,
                                                   Word const&       w1,
                                                   Word const&       h,
                                                   Word const&       w2) {
    GroupBackend const& G = ball.group();
    Alphabet const&     X = G.alphabet();
    auto                P = prefix_elements(G, Word{}, w1);
    auto                Q = prefix_elements(G, h, w2);
    std::vector<std::vector<std::optional<std::size_t>>> grid(
        P.size(), std::vector<std::optional<std::size_t>>(Q.size()));
    for (std::size_t i = 0; i < P.size(); ++i) {
      Word pinv = invert(X, P[i]);
      for (std::size_t j = 0; j < Q.size(); ++j) {
        grid[i][j] = ball.length(concat(pinv, Q[j]));
      }
    }
    return min_bottleneck(grid);
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  std::string FellowCertificate::str() const {
    std::ostringstream out;
    out << "certificate mode=" << to_string(mode) << " radius=" << radius
        << " pairs=" << pairs << " K=" << K
        << " status=" << (bounded() ? "bounded" : "exceeds-ball") << '\n';
    for (auto const& w : witnesses) {
      out << "witness " << w << '\n';
    }
    if (violations > witnesses.size()) {
      out << "# " << witnesses.size() << " of " << violations << " witnesses shown\n";
    }
    for (auto const& c : comments) {
      out << "# " << c << '\n';
    }
    return out.str();
  }

  namespace {
    struct PairOutcome {
      std::size_t                v, w;
      std::int64_t               x;  // -1 for the empty word
      std::optional<std::size_t> distance;
    };
  }  // namespace

  FellowCertificate certify_coset_system(CosetSystem const& sys,
                                         std::size_t        radius,
                                         Execution          exec,
                                         std::size_t        ball_radius) {
    SubgroupContext const& ctx = *sys.context;
    GroupBackend const&    G   = ctx.parent();
    Alphabet const&        X   = G.alphabet();
    FellowCertificate      cert;
    cert.mode        = sys.mode;
    cert.radius      = radius;
    cert.ball_radius = ball_radius == 0 ? radius + 2 : ball_radius;
    CayleyBall ball(G, cert.ball_radius);

    std::vector<Word> words = sys.language.enumerate(radius);
    std::vector<Word> keys  = sweep<Word>(words.size(), exec,
                                         [&](std::size_t i, std::vector<Word>& out) {
                                           out.push_back(ctx.coset_rep(words[i]));
                                         });
    std::unordered_map<Word, std::vector<std::size_t>, WordHash> buckets;
    for (std::size_t i = 0; i < words.size(); ++i) {
      buckets[keys[i]].push_back(i);
    }

    auto outcomes = sweep<PairOutcome>(
        words.size(), exec, [&](std::size_t i, std::vector<PairOutcome>& out) {
          Word const& v = words[i];
          for (std::int64_t x = -1; x < static_cast<std::int64_t>(X.size()); ++x) {
            Word vx = x < 0 ? v : concat(v, Word{static_cast<Letter>(x)});
            auto it = buckets.find(ctx.coset_rep(vx));
            if (it == buckets.end()) {
              continue;
            }
            for (std::size_t j : it->second) {
              Word const& w = words[j];
              Word        h = G.canonical(concat(vx, invert(X, w)));
              auto        d = sys.mode == Mode::synchronous
                                  ? sync_fellow_distance(ball, v, h, w)
                                  : async_fellow_distance(ball, v, h, w);
              out.push_back({i, j, x, d});
            }
          }
        });

    cert.pairs = outcomes.size();
    std::optional<PairOutcome> worst;
    auto show = [&](Word const& w) {
      return w.empty() ? std::string(empty_word_symbol) : X.format(w);
    };
    auto describe = [&](PairOutcome const& p) {
      std::string x = p.x < 0 ? std::string(empty_word_symbol)
                              : X.name(static_cast<Letter>(p.x));
      return "v=" + show(words[p.v]) + " x=" + x + " w=" + show(words[p.w]);
    };
    for (auto const& p : outcomes) {
      if (!p.distance) {
        ++cert.violations;
        if (cert.witnesses.size() < max_witnesses) {
          cert.witnesses.push_back(describe(p));
        }
      } else if (!worst || *p.distance > *worst->distance) {
        worst = p;
      }
    }
    if (worst) {
      cert.K = *worst->distance;
      cert.comments.push_back("worst pair " + describe(*worst) + " K="
                              + std::to_string(cert.K));
    }
    cert.comments.push_back("ball radius " + std::to_string(cert.ball_radius) + ", "
                            + std::to_string(ball.size()) + " elements, "
                            + std::to_string(words.size()) + " language words");
    return cert;
  }

  FellowCertificate certify_automatic(Language const&                     L,
                                      std::shared_ptr<GroupBackend const> G,
                                      std::size_t                         radius,
                                      Mode                                mode,
                                      Execution                           exec,
                                      std::size_t                         ball_radius) {
    CosetSystem sys{std::make_shared<TrivialSubgroup>(G), L, std::nullopt, mode};
    return certify_coset_system(sys, radius, exec, ball_radius);
  }

  ////////////////////////////////////////////////////////////////////////
  // Concatenated structures
  ////////////////////////////////////////////////////////////////////////

  SubstitutionBackend::SubstitutionBackend(std::shared_ptr<GroupBackend const> G,
                                           std::vector<std::string>            names,
                                           std::vector<Word>                   words)
      : _group(std::move(G)), _words(std::move(words)) {
    if (names.size() != _words.size()) {
      throw Error("one word is needed per extra generator");
    }
    Alphabet const&                  X    = _group->alphabet();
    std::vector<Alphabet::Generator> gens = X.generators();
    for (auto const& n : names) {
      if (X.find(n)) {
        throw Error("extra generator " + n + " clashes with a generator name");
      }
      gens.push_back({n, false});
    }
    for (auto const& w : _words) {
      X.validate(w);
    }
    _alphabet = Alphabet(gens);
  }

  Letter SubstitutionBackend::extra_letter(std::size_t i, bool inverse) const {
    Letter x = _alphabet.generator_letter(_group->alphabet().num_generators() + i);
    return inverse ? _alphabet.inverse(x) : x;
  }

  Word SubstitutionBackend::expand(Word const& w) const {
    Alphabet const& X = _group->alphabet();
    std::size_t     n = X.num_generators();
    Word            out;
    for (Letter x : w) {
      std::size_t g = _alphabet.generator_of(x);
      if (g < n) {
        out.push_back(x);
      } else if (_alphabet.is_positive(x)) {
        out.insert(out.end(), _words[g - n].begin(), _words[g - n].end());
      } else {
        Word inv = invert(X, _words[g - n]);
        out.insert(out.end(), inv.begin(), inv.end());
      }
    }
    return out;
  }

  Word SubstitutionBackend::canonical(Word const& w) const {
    return _group->canonical(expand(w));
  }

  std::string SubstitutionBackend::description() const {
    return _group->description() + " with "
           + std::to_string(_words.size()) + " extra generators";
  }

  ConcatStructure concat_structure(Language const& L_H, CosetSystem const& sys) {
    SubgroupContext const& ctx = *sys.context;
    Alphabet const&        Y   = ctx.subgroup_alphabet();
    Alphabet const&        X   = ctx.parent().alphabet();
    if (!(L_H.alphabet() == Y)) {
      throw Error("L_H must be a language over the subgroup generators");
    }
    std::shared_ptr<GroupBackend const> parent(sys.context, &ctx.parent());
    std::vector<std::string>            names;
    for (std::size_t i = 0; i < Y.num_generators(); ++i) {
      names.push_back(Y.generator_name(i));
    }
    auto S = std::make_shared<SubstitutionBackend>(parent, names, ctx.generators());
    Alphabet const& A = S->alphabet();

    std::vector<Letter> ymap(Y.size());
    for (Letter y = 0; y < Y.size(); ++y) {
      ymap[y] = S->extra_letter(Y.generator_of(y), !Y.is_positive(y));
    }
    if (L_H.has_dfa() && sys.language.has_dfa()) {
      std::vector<Letter> xmap(X.size());
      for (Letter x = 0; x < X.size(); ++x) {
        xmap[x] = x;
      }
      Dfa left  = relabel(L_H.dfa(), ymap, symbol_names(A));
      Dfa right = relabel(sys.language.dfa(), xmap, symbol_names(A));
      return {S, Language(A, minimize(concat(left, right)))};
    }
    // without automata: split at the first letter of X
    std::vector<Letter> back(A.size(), 0);
    for (Letter y = 0; y < Y.size(); ++y) {
      back[ymap[y]] = y;
    }
    std::size_t nx = X.size();
    Language    LH = L_H, LG = sys.language;
    return {S, Language(A, [=](Word const& w) {
              std::size_t k = 0;
              Word        p, q;
              while (k < w.size() && w[k] >= nx) {
                p.push_back(back[w[k++]]);
              }
              for (; k < w.size(); ++k) {
                if (w[k] >= nx) {
                  return false;
                }
                q.push_back(w[k]);
              }
              return LH.contains(p) && LG.contains(q);
            })};
  }

  FilteredSystem geodesic_coset_filter(CosetSystem const& sys, std::size_t radius) {
    auto           ctx = sys.context;
    FilteredSystem out{sys, {}};
    out.system.language = sys.language.filter(
        [ctx](Word const& w) { return w.size() == ctx->min_coset_length(w); });
    out.coverage = check_coset_coverage(out.system, radius, radius);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Combination theorem hypotheses
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string status(bool ok) {
      return ok ? "pass" : "fail";
    }
  }  // namespace

  Report combination_hypotheses_report(GraphOfGroups const&     gog,
                                       HypothesisOptions const& opts,
                                       Execution                exec) {
    DirectedGraph const& graph = gog.graph();
    std::size_t const    r     = opts.radius;
    Report               rep;
    rep.property = "combination-hypotheses";
    rep.param("theorem", to_string(opts.theorem));
    rep.param("mu_max", std::to_string(opts.mu_max));
    rep.param("lambda_max", std::to_string(opts.lambda_max));
    rep.radius = r;

    std::size_t failed[2] = {0, 0};  // async, sync
    auto row = [&](char const* theorem, std::string check, EdgeId e, bool ok,
                   std::string detail) {
      std::string line = std::string("theorem=") + theorem + " check=" + check
                         + " edge=" + graph.edge_name(e) + " status=" + status(ok);
      if (!detail.empty()) {
        line += " " + detail;
      }
      rep.rows.push_back(line);
      if (!ok) {
        std::string t = theorem;
        if (t != "sync") {
          ++failed[0];
        }
        if (t != "async") {
          ++failed[1];
        }
      }
    };

    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
      auto                   ctx = gog.edge_group_ptr(e);
      SubgroupContext const& H   = *ctx;
      GroupBackend const&    G   = H.parent();
      Alphabet const&        X   = G.alphabet();
      CosetSystem            async_sys = make_coset_system(ctx, Mode::asynchronous);
      CosetSystem            sync_sys  = make_coset_system(ctx, Mode::synchronous);

      // coset automaticity
      bool has_eps = async_sys.language.contains(Word{});
      auto ac      = certify_coset_system(async_sys, r, exec);
      row("async", "saca", e, has_eps && ac.bounded(), "K=" + std::to_string(ac.K));
      auto sc = certify_coset_system(sync_sys, r, exec);
      row("sync", "ssca", e, sc.bounded(), "K=" + std::to_string(sc.K));

      // stability of phi_e, least mu found
      EdgeId                 rev = DirectedGraph::reverse(e);
      std::optional<std::size_t> mu;
      bool                   mu1 = false;
      std::string            why;
      try {
        for (std::size_t m = 1; m <= opts.mu_max && !mu; ++m) {
          if (check_stability(H, gog.edge_group(rev), gog.edge_iso(e), m, r).pass()) {
            mu = m;
          }
        }
        mu1 = check_stability(H, gog.edge_group(rev), gog.edge_iso(e), 1, r).pass();
      } catch (Error const& err) {
        why = "error";
      }
      row("async", "stability", e, mu.has_value(),
          mu ? "mu=" + std::to_string(*mu) : (why.empty() ? "mu>" + std::to_string(opts.mu_max) : why));
      row("sync", "stability-1", e, mu1, "");

      // limited crossover against every edge with the same terminal vertex
      for (EdgeId f = 0; f < graph.num_edges(); ++f) {
        if (graph.target(f) != graph.target(e)) {
          continue;
        }
        std::vector<Word>          Z = gog.edge_group(f).generators();
        std::optional<std::size_t> lambda;
        if (Z.empty()) {
          Z = {Word{}};
        }
        for (std::size_t l = 1; l <= opts.lambda_max && !lambda; ++l) {
          if (check_limited_crossover(async_sys, H.generators(), Z, l, r, exec).pass()) {
            lambda = l;
          }
        }
        row("both", "crossover", e, lambda.has_value(),
            "other=" + graph.edge_name(f) + " "
                + (lambda ? "lambda=" + std::to_string(*lambda)
                          : "lambda>" + std::to_string(opts.lambda_max)));
      }

      // synchronous extras: Y_e among the letters of X
      bool letters = true;
      for (auto const& y : H.generators()) {
        letters = letters && y.size() == 1;
      }
      row("sync", "letters", e, letters, "");

      // the language is geodesic, avoids Y_e^{\pm} as first letter and
      // meets H only in the empty word
      std::size_t bad = 0;
      for (auto const& w : async_sys.language.enumerate(r)) {
        bool starts_in_y = false;
        for (auto const& y : H.generators()) {
          if (!w.empty() && y.size() == 1
              && (w[0] == y[0] || w[0] == X.inverse(y[0]))) {
            starts_in_y = true;
          }
        }
        if (w.size() != H.min_coset_length(w) || starts_in_y
            || (!w.empty() && H.member(w))) {
          ++bad;
        }
      }
      row("sync", "geodesic-language", e, bad == 0, "violations=" + std::to_string(bad));

      // every g has a geodesic y_g z_g with z_g the coset representative
      std::size_t    unfactored = 0;
      SubgroupMetric metric(G, H.generators());
      for (auto const& g : G.ball(r)) {
        Word z = H.coset_rep(g);
        Word h = concat(g, invert(X, z));
        auto y = metric.length(h, 2 * r + 2);
        if (!y || *y + z.size() != G.geodesic_length(g)) {
          ++unfactored;
        }
      }
      row("sync", "factorization", e, letters && unfactored == 0,
          "violations=" + std::to_string(unfactored));
    }
    std::size_t selected = opts.theorem == Mode::asynchronous ? failed[0] : failed[1];
    rep.violations       = selected;
    rep.set("async", status(failed[0] == 0));
    rep.set("sync", status(failed[1] == 0));
    return rep;
  }

}  // namespace higgins
