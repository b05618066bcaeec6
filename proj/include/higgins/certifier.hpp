// Bounded-radius fellow-traveller certificates.
//
// Distances are measured in a ball of the Cayley graph built from a word
// problem oracle. A distance that would leave the ball is reported as
// "exceeds-ball": a certificate never claims that a constant does not
// exist, only that none was found up to the tested radius.

#ifndef HIGGINS_CERTIFIER_HPP_
#define HIGGINS_CERTIFIER_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "higgins/backend.hpp"
#include "higgins/coset_system.hpp"
#include "higgins/graph_of_groups.hpp"
#include "higgins/parallel.hpp"
#include "higgins/report.hpp"

namespace higgins {

  class CayleyBall {
   public:
    CayleyBall(GroupBackend const& G, std::size_t radius);

    GroupBackend const& group() const noexcept {
      return *_group;
    }
    std::size_t radius() const noexcept {
      return _radius;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    // Canonical words, by distance and then shortlex.
    Word const& element(std::size_t i) const {
      return _elements[i];
    }
    std::size_t depth(std::size_t i) const {
      return _depth[i];
    }
    // Index of g * x, or -1 when it lies outside the ball.
    std::int64_t neighbor(std::size_t i, Letter x) const {
      return _adjacent[i * _group->alphabet().size() + x];
    }
    std::optional<std::size_t> index(Word const& w) const;
    // |w| over X when w lies in the ball.
    std::optional<std::size_t> length(Word const& w) const;
    // d(g, h) = |g^-1 h| when that element lies in the ball.
    std::optional<std::size_t> distance(Word const& g, Word const& h) const;

   private:
    GroupBackend const*                              _group;
    std::size_t                                      _radius;
    std::vector<Word>                                _elements;
    std::vector<std::size_t>                         _depth;
    std::vector<std::int64_t>                        _adjacent;
    std::unordered_map<Word, std::size_t, WordHash>  _index;
  };

  // max over t of d(w1(t), h w2(t)).
  std::optional<std::size_t> sync_fellow_distance(CayleyBall const& ball,
                                                  Word const&       w1,
                                                  Word const&       h,
                                                  Word const&       w2);
  // The least bound over monotone alignments of the prefixes of w1 and w2
  // (steps right, down or diagonal).
  std::optional<std::size_t> async_fellow_distance(CayleyBall const& ball,
                                                   Word const&       w1,
                                                   Word const&       h,
                                                   Word const&       w2);
  // Least over staircase paths from (0, 0) to the far corner of the
  // largest entry met; empty entries are impassable.
  std::optional<std::size_t> min_bottleneck(
      std::vector<std::vector<std::optional<std::size_t>>> const& grid);

  struct FellowCertificate {
    Mode                     mode = Mode::synchronous;
    std::size_t              radius = 0;
    std::size_t              ball_radius = 0;
    std::size_t              pairs = 0;
    std::size_t              K = 0;
    std::size_t              violations = 0;  // pairs leaving the ball
    std::vector<std::string> witnesses;
    std::vector<std::string> comments;

    bool bounded() const noexcept {
      return violations == 0;
    }
    // "certificate mode=<m> radius=<r> pairs=<n> K=<k> status=<s>" then
    // witness and comment lines.
    std::string str() const;
  };

  // Sweeps v, w in the language with |v|, |w| <= radius and h in H with
  // h w = v x for x in X^{\pm} or empty. ball_radius 0 means radius + 2.
  FellowCertificate certify_coset_system(CosetSystem const& sys,
                                         std::size_t        radius,
                                         Execution          exec = Execution::serial(),
                                         std::size_t        ball_radius = 0);
  // The same with H trivial.
  FellowCertificate certify_automatic(Language const&                     L,
                                      std::shared_ptr<GroupBackend const> G,
                                      std::size_t                         radius,
                                      Mode      mode = Mode::synchronous,
                                      Execution exec = Execution::serial(),
                                      std::size_t ball_radius = 0);

  // G over X together with extra generators standing for words over X.
  class SubstitutionBackend final : public GroupBackend {
   public:
    SubstitutionBackend(std::shared_ptr<GroupBackend const> G,
                        std::vector<std::string>            names,
                        std::vector<Word>                   words);

    Alphabet const& alphabet() const override {
      return _alphabet;
    }
    Word canonical(Word const& w) const override;
    bool canonical_is_shortlex() const override {
      return false;
    }
    std::string description() const override;

    // Rewrite the extra letters as words over X.
    Word expand(Word const& w) const;
    // Letters of X keep their indices in the extended alphabet.
    Letter extra_letter(std::size_t i, bool inverse = false) const;

   private:
    std::shared_ptr<GroupBackend const> _group;
    std::vector<Word>                   _words;
    Alphabet                            _alphabet;
  };

  struct ConcatStructure {
    std::shared_ptr<SubstitutionBackend const> group;
    Language                                   language;  // L_H L^H
  };

  // L_H is a language over the subgroup alphabet of sys.context.
  ConcatStructure concat_structure(Language const& L_H, CosetSystem const& sys);

  struct FilteredSystem {
    CosetSystem system;
    Report      coverage;
  };

  // Keeps the words w with |w| equal to the least length in Hw, and checks
  // that every coset met in the ball of the given radius keeps a
  // representative.
  FilteredSystem geodesic_coset_filter(CosetSystem const& sys, std::size_t radius);

  struct HypothesisOptions {
    std::size_t radius     = 4;
    std::size_t mu_max     = 3;
    std::size_t lambda_max = 3;
    Mode        theorem    = Mode::asynchronous;
  };

  // One row per hypothesis, edge and (for crossover) partner edge. The
  // status counts the rows of the selected theorem; rows of the other
  // theorem are informative.
  Report combination_hypotheses_report(GraphOfGroups const&     gog,
                                       HypothesisOptions const& opts,
                                       Execution exec = Execution::serial());

}  // namespace higgins

#endif  // HIGGINS_CERTIFIER_HPP_
