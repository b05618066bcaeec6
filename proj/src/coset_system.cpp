#include "higgins/coset_system.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

#include "higgins/error.hpp"

namespace higgins {

  std::string to_string(Mode m) {
    return m == Mode::synchronous ? "sync" : "async";
  }

  CosetSystem make_coset_system(std::shared_ptr<SubgroupContext const> ctx,
                                Mode                                   mode) {
    CosetSystem sys;
    sys.language = ctx->coset_language();
    sys.context  = std::move(ctx);
    sys.mode     = mode;
    return sys;
  }

  std::string format_words(Alphabet const& A, std::vector<Word> const& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      out += (i ? ";" : "") + A.format(ws[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // SubgroupMetric
  ////////////////////////////////////////////////////////////////////////

  SubgroupMetric::SubgroupMetric(GroupBackend const& G, std::vector<Word> gens)
      : _group(&G) {
    for (auto const& g : gens) {
      G.alphabet().validate(g);
      _gens.push_back(g);
      _gens.push_back(invert(G.alphabet(), g));
    }
    _dist.emplace(Word{}, 0);
    _layers.push_back({Word{}});
  }

  void SubgroupMetric::extend() const {
    std::size_t const d = _layers.size();
    std::vector<Word> next;
    for (auto const& e : _layers.back()) {
      for (auto const& y : _gens) {
        Word f = _group->canonical(concat(e, y));
        if (_dist.emplace(f, d).second) {
          next.push_back(std::move(f));
        }
      }
    }
    std::sort(next.begin(), next.end(), ShortlexLess{});
    _layers.push_back(std::move(next));
  }

  std::optional<std::size_t> SubgroupMetric::length(Word const&  g,
                                                    std::size_t cap) const {
    Word key = _group->canonical(g);
    {
      std::shared_lock lock(_mtx);
      auto             it = _dist.find(key);
      if (it != _dist.end()) {
        return it->second <= cap ? std::optional(it->second) : std::nullopt;
      }
      if (_layers.size() > cap || _layers.back().empty()) {
        return std::nullopt;
      }
    }
    std::unique_lock lock(_mtx);
    while (true) {
      auto it = _dist.find(key);
      if (it != _dist.end()) {
        return it->second <= cap ? std::optional(it->second) : std::nullopt;
      }
      if (_layers.size() > cap || _layers.back().empty()) {
        return std::nullopt;
      }
      extend();
    }
  }

  std::vector<SubgroupMetric::Element> SubgroupMetric::ball(std::size_t r) const {
    std::unique_lock lock(_mtx);
    while (_layers.size() <= r && !_layers.back().empty()) {
      extend();
    }
    std::vector<Element> out;
    for (std::size_t d = 0; d <= r && d < _layers.size(); ++d) {
      for (auto const& e : _layers[d]) {
        out.push_back({e, d});
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Crossover
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct CrossoverWitness {
      Word        u, g, v;
      std::size_t length;
      bool        exact;

      bool operator<(CrossoverWitness const& that) const {
        auto cu = shortlex_cmp(u, that.u);
        if (cu != 0) {
          return cu < 0;
        }
        auto cg = shortlex_cmp(g, that.g);
        if (cg != 0) {
          return cg < 0;
        }
        return shortlex_cmp(v, that.v) < 0;
      }
    };

    std::size_t max_length(std::vector<Word> const& ws) {
      std::size_t m = 0;
      for (auto const& w : ws) {
        m = std::max(m, w.size());
      }
      return m;
    }

    void check_generates(SubgroupContext const&   ctx,
                         SubgroupMetric const&    metric,
                         std::vector<Word> const& Y,
                         std::size_t              cap) {
      Alphabet const& X = ctx.parent().alphabet();
      for (auto const& y : Y) {
        if (!ctx.member(y)) {
          throw Error("probe generator " + X.format(y)
                      + " is not in the subgroup");
        }
      }
      for (auto const& h : ctx.generators()) {
        if (!metric.length(h, cap)) {
          throw Error("Y does not generate the subgroup element "
                      + X.format(h) + " within length "
                      + std::to_string(cap));
        }
      }
    }

    Report crossover(std::string const&       property,
                     CosetSystem const&       sys,
                     std::vector<Word> const& Y,
                     std::vector<Word> const& Z,
                     std::size_t              lambda,
                     std::size_t              radius,
                     std::size_t              g_radius,
                     bool                     require_u_outside,
                     Execution                exec) {
      SubgroupContext const& ctx = *sys.context;
      GroupBackend const&    G   = ctx.parent();
      Alphabet const&        X   = G.alphabet();
      SubgroupMetric         metric_y(G, Y);
      SubgroupMetric         metric_z(G, Z);
      std::size_t const      cap
          = 4 * (2 * radius + g_radius * std::max<std::size_t>(1, max_length(Z)))
            + lambda + 1;
      check_generates(ctx, metric_y, Y, cap);

      std::vector<Word> us = sys.language.enumerate(radius);
      if (require_u_outside) {
        std::erase_if(us, [&](Word const& u) { return ctx.member(u); });
      }
      auto gs = metric_z.ball(g_radius);

      auto found = sweep<CrossoverWitness>(
          us.size(), exec, [&](std::size_t i, std::vector<CrossoverWitness>& out) {
            Word const& u = us[i];
            for (auto const& [g, glen] : gs) {
              Word ug = concat(u, g);
              Word v  = ctx.coset_rep(ug);
              Word h  = concat(ug, invert(X, v));
              auto len = metric_y.length(h, cap);
              if (!len || *len > lambda) {
                out.push_back({u, g, v, len ? *len : cap + 1, len.has_value()});
              }
            }
          });
      std::sort(found.begin(), found.end());

      Report rep;
      rep.property = property;
      rep.param("lambda", std::to_string(lambda))
          .param("Y", format_words(X, Y))
          .param("Z", format_words(X, Z));
      rep.radius = radius;
      for (auto const& w : found) {
        std::string line = "u=" + X.format(w.u) + " g=" + X.format(w.g)
                           + " v=" + X.format(w.v)
                           + " excess=" + std::to_string(w.length - lambda);
        if (!w.exact) {
          line += " bound=lower";
        }
        rep.add_witness(std::move(line));
      }
      rep.set("pairs", std::to_string(us.size() * gs.size()));
      return rep;
    }
  }  // namespace

  Report check_limited_crossover(CosetSystem const&       sys,
                                 std::vector<Word> const& Y,
                                 std::vector<Word> const& Z,
                                 std::size_t              lambda,
                                 std::size_t              radius,
                                 Execution                exec) {
    return crossover(
        "limited-crossover", sys, Y, Z, lambda, radius, lambda, false, exec);
  }

  Report check_maximal_crossover(CosetSystem const&       sys,
                                 std::vector<Word> const& Y,
                                 std::vector<Word> const& Z,
                                 std::size_t              lambda,
                                 std::size_t              radius,
                                 Execution                exec) {
    return crossover(
        "maximal-crossover", sys, Y, Z, lambda, radius, radius, true, exec);
  }

  ////////////////////////////////////////////////////////////////////////
  // Stability
  ////////////////////////////////////////////////////////////////////////

  Report check_stability(SubgroupContext const&   H1,
                         SubgroupContext const&   H2,
                         std::vector<Word> const& images,
                         std::size_t              mu,
                         std::size_t              radius) {
    GroupBackend const& G1 = H1.parent();
    GroupBackend const& G2 = H2.parent();
    Alphabet const&     Y1 = H1.subgroup_alphabet();
    Alphabet const&     X2 = G2.alphabet();
    if (images.size() != H1.generators().size()) {
      throw Error("expected one image per subgroup generator");
    }
    for (std::size_t j = 0; j < images.size(); ++j) {
      X2.validate(images[j]);
      if (!H2.member(images[j])) {
        throw Error("image of " + Y1.generator_name(j)
                    + " is not in the target subgroup");
      }
    }
    auto phi = [&](Word const& y_word) {
      return G2.canonical(substitute(Y1, X2, y_word, images));
    };
    // homomorphism check on Y1-words up to the validation radius
    std::unordered_map<Word, Word, WordHash> image_of;
    for_each_word(Y1, radius, [&](Word const& w) {
      Word key = G1.canonical(H1.evaluate(w));
      Word img = phi(w);
      auto [it, fresh] = image_of.emplace(key, img);
      if (!fresh && it->second != img) {
        throw Error("the map is not a homomorphism: " + Y1.format(w)
                    + " and an equal product have different images");
      }
    });

    SubgroupMetric    metric2(G2, H2.generators());
    std::size_t const cap = 4 * mu * std::max<std::size_t>(1, max_length(images)) + mu + 1;
    Report            rep;
    rep.property = "stability";
    rep.param("mu", std::to_string(mu))
        .param("Y1", format_words(G1.alphabet(), H1.generators()))
        .param("Y2", format_words(X2, H2.generators()))
        .param("images", format_words(X2, images));
    rep.radius = radius;
    // h with |h|_{Y1} <= mu, one shortest Y1-word each, in shortlex order
    std::unordered_map<Word, Word, WordHash> seen;
    std::vector<Word>                        hs;
    for_each_word(Y1, mu, [&](Word const& w) {
      if (seen.emplace(G1.canonical(H1.evaluate(w)), w).second) {
        hs.push_back(w);
      }
    });
    std::size_t tested = 0;
    for (auto const& h : hs) {
      Word img = phi(h);
      auto len = metric2.length(img, cap);
      ++tested;
      if (!len || *len > mu) {
        std::string line = "h=" + Y1.format(h) + " phi=" + X2.format(img)
                           + " excess="
                           + std::to_string((len ? *len : cap + 1) - mu);
        if (!len) {
          line += " bound=lower";
        }
        rep.add_witness(std::move(line));
      }
    }
    rep.set("elements", std::to_string(tested));
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Concatenation up
  ////////////////////////////////////////////////////////////////////////

  Report check_concatenates_up(SubgroupContext const& ctx,
                               std::size_t            radius,
                               Execution              exec) {
    GroupBackend const& G = ctx.parent();
    Alphabet const&     X = G.alphabet();
    std::vector<Letter> y_letters;
    for (auto const& y : ctx.generators()) {
      if (y.size() != 1) {
        throw Error("subgroup generator " + X.format(y)
                    + " is not a letter of the parent alphabet");
      }
      y_letters.push_back(y[0]);
      y_letters.push_back(X.inverse(y[0]));
    }
    std::sort(y_letters.begin(), y_letters.end());
    y_letters.erase(std::unique(y_letters.begin(), y_letters.end()),
                    y_letters.end());

    // geodesic words over Y, grouped by length
    SubgroupMetric                 metric(G, ctx.generators());
    std::vector<std::vector<Word>> geo(radius + 1);
    std::vector<Word>              layer = {Word{}};
    for (std::size_t len = 0; len <= radius; ++len) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        auto d = metric.length(w, len);
        if (d && *d == len) {
          geo[len].push_back(w);
          if (len < radius) {
            for (Letter y : y_letters) {
              Word v = w;
              v.push_back(y);
              next.push_back(std::move(v));
            }
          }
        }
      }
      layer = std::move(next);
    }
    // coset-minimal words
    std::vector<Word> minimal;
    for_each_word(X, radius, [&](Word const& v) {
      if (ctx.min_coset_length(v) == v.size()) {
        minimal.push_back(v);
      }
    });

    struct Bad {
      Word w, v;
    };
    auto bad = sweep<Bad>(minimal.size(), exec, [&](std::size_t i, std::vector<Bad>& out) {
      Word const& v = minimal[i];
      for (std::size_t len = 0; len + v.size() <= radius; ++len) {
        for (auto const& w : geo[len]) {
          if (G.geodesic_length(concat(w, v)) != w.size() + v.size()) {
            out.push_back({w, v});
          }
        }
      }
    });
    std::sort(bad.begin(), bad.end(), [](Bad const& a, Bad const& b) {
      auto c = shortlex_cmp(a.w, b.w);
      return c != 0 ? c < 0 : shortlex_cmp(a.v, b.v) < 0;
    });
    Report rep;
    rep.property = "concatenates-up";
    rep.param("Y", format_words(X, ctx.generators()));
    rep.radius = radius;
    for (auto const& b : bad) {
      rep.add_witness("w=" + X.format(b.w) + " v0=" + X.format(b.v)
                      + " length="
                      + std::to_string(G.geodesic_length(concat(b.w, b.v))));
    }
    std::size_t pairs = 0;
    for (auto const& v : minimal) {
      for (std::size_t len = 0; len + v.size() <= radius; ++len) {
        pairs += geo[len].size();
      }
    }
    rep.set("pairs", std::to_string(pairs));
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pruning and coverage
  ////////////////////////////////////////////////////////////////////////

  CosetSystem prune_identity_coset(CosetSystem const& sys) {
    if (!sys.language.contains(Word{})) {
      throw Error("the coset language does not contain the empty word");
    }
    CosetSystem out = sys;
    // The contexts build their coset languages pruned, so a language equal
    // to the context's is already a fixed point.
    if (sys.language.has_dfa()) {
      Language own = sys.context->coset_language();
      if (own.has_dfa() && equivalent(own.dfa(), sys.language.dfa())) {
        return out;
      }
    }
    auto ctx     = sys.context;
    out.language = sys.language.filter(
        [ctx](Word const& w) { return w.empty() || !ctx->member(w); });
    return out;
  }

  Report check_coset_coverage(CosetSystem const& sys,
                              std::size_t        radius,
                              std::size_t        depth) {
    SubgroupContext const& ctx = *sys.context;
    Alphabet const&        X   = ctx.parent().alphabet();
    std::set<Word, ShortlexLess> covered;
    for (auto const& w : sys.language.enumerate(depth)) {
      covered.insert(ctx.coset_rep(w));
    }
    std::set<Word, ShortlexLess> met;
    for (auto const& g : ctx.parent().ball(radius)) {
      met.insert(ctx.coset_rep(g));
    }
    Report rep;
    rep.property = "coset-coverage";
    rep.param("depth", std::to_string(depth));
    rep.radius = radius;
    for (auto const& c : met) {
      if (!covered.count(c)) {
        rep.add_witness("coset=" + X.format(c));
      }
    }
    rep.set("cosets", std::to_string(met.size()));
    return rep;
  }

}  // namespace higgins
