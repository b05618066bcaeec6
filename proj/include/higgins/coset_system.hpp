// Coset systems (a subgroup context with a chosen coset language) and the
// bounded-radius verifiers for limited and maximal crossover, stability,
// concatenation-up and identity-coset pruning.

#ifndef HIGGINS_COSET_SYSTEM_HPP_
#define HIGGINS_COSET_SYSTEM_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "higgins/backend.hpp"
#include "higgins/language.hpp"
#include "higgins/parallel.hpp"
#include "higgins/report.hpp"

namespace higgins {

  enum class Mode { synchronous, asynchronous };
  std::string to_string(Mode m);

  struct CosetSystem {
    std::shared_ptr<SubgroupContext const> context;
    Language                               language;
    std::optional<std::size_t>             claimed_K;
    Mode                                   mode = Mode::asynchronous;
  };

  // The system whose language is the context's own coset language.
  CosetSystem make_coset_system(std::shared_ptr<SubgroupContext const> ctx,
                                Mode mode = Mode::asynchronous);

  // Word lengths in the subgroup <gens> over gens^{\pm}, by breadth-first
  // search keyed on canonical forms of G. Memoized and safe to share
  // between threads.
  class SubgroupMetric {
   public:
    SubgroupMetric(GroupBackend const& G, std::vector<Word> gens);

    // |g| over the generators if it is at most cap.
    std::optional<std::size_t> length(Word const& g, std::size_t cap) const;

    struct Element {
      Word        element;  // canonical form in G
      std::size_t length;
    };
    // Elements of length <= r in breadth-first order (shortlex within a
    // layer).
    std::vector<Element> ball(std::size_t r) const;

   private:
    void extend() const;  // caller holds the unique lock

    GroupBackend const* _group;
    std::vector<Word>   _gens;  // gens and their inverses, as words over X

    mutable std::shared_mutex                                _mtx;
    mutable std::unordered_map<Word, std::size_t, WordHash>  _dist;
    mutable std::vector<std::vector<Word>>                   _layers;
  };

  // u in L^H with |u| <= radius, g with |g|_Z <= lambda, v = coset_rep(ug);
  // a witness is any triple with |u g v^-1|_Y > lambda. Throws Error if Y is
  // not contained in H or does not reach the context's generators.
  Report check_limited_crossover(CosetSystem const&       sys,
                                 std::vector<Word> const& Y,
                                 std::vector<Word> const& Z,
                                 std::size_t              lambda,
                                 std::size_t              radius,
                                 Execution exec = Execution::serial());

  // As above with u not in H and g ranging over |g|_Z <= radius.
  Report check_maximal_crossover(CosetSystem const&       sys,
                                 std::vector<Word> const& Y,
                                 std::vector<Word> const& Z,
                                 std::size_t              lambda,
                                 std::size_t              radius,
                                 Execution exec = Execution::serial());

  // phi maps the generators of H1 to images (words over the parent
  // alphabet of H2). Witnesses are h with |h|_{Y1} <= mu and
  // |phi(h)|_{Y2} > mu. The homomorphism property is validated on all
  // Y1-words of length <= radius; throws Error if it fails or an image is
  // not in H2.
  Report check_stability(SubgroupContext const&   H1,
                         SubgroupContext const&   H2,
                         std::vector<Word> const& images,
                         std::size_t              mu,
                         std::size_t              radius);

  // Requires every generator of the context to be a single letter. Checks
  // |w v0|_X = |w| + |v0| for geodesic w over Y and coset-minimal v0 with
  // |w| + |v0| <= radius.
  Report check_concatenates_up(SubgroupContext const& ctx,
                               std::size_t            radius,
                               Execution exec = Execution::serial());

  // Removes the nonempty words representing the identity coset. Throws if
  // the empty word is not in the language.
  CosetSystem prune_identity_coset(CosetSystem const& sys);

  // Every coset met in the ball of the given radius has a representative
  // among the language words of length <= depth.
  Report check_coset_coverage(CosetSystem const& sys,
                              std::size_t        radius,
                              std::size_t        depth);

  // Space-separated display of a list of words.
  std::string format_words(Alphabet const& A, std::vector<Word> const& ws);

}  // namespace higgins

#endif  // HIGGINS_COSET_SYSTEM_HPP_
