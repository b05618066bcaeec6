// Finitely generated abelian groups Z^rank x Z/d_1 x ... x Z/d_k with one
// generator per factor, and their subgroups.

#ifndef HIGGINS_ABELIAN_HPP_
#define HIGGINS_ABELIAN_HPP_

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "higgins/backend.hpp"
#include "higgins/lattice.hpp"

namespace higgins {

  class AbelianGroup final : public GroupBackend {
   public:
    // Generators are named x1, x2, ... unless names are given. Torsion
    // factors follow the free ones.
    AbelianGroup(std::size_t                     rank,
                 std::vector<std::int64_t> const& torsion,
                 std::vector<std::string>        names = {});

    std::size_t rank() const noexcept {
      return _rank;
    }
    std::vector<std::int64_t> const& torsion() const noexcept {
      return _torsion;
    }
    std::size_t num_factors() const noexcept {
      return _rank + _torsion.size();
    }

    Alphabet const& alphabet() const override {
      return _alphabet;
    }
    Word        canonical(Word const& w) const override;
    std::size_t geodesic_length(Word const& w) const override;
    Language    canonical_language() const override;
    std::string description() const override;

    // Exponent vector (torsion coordinates reduced to [0, d)).
    IntVector exponents(Word const& w) const;
    IntVector normalize(IntVector v) const;
    // x1^{r1} ... xn^{rn}, torsion exponents as the signed power of least
    // absolute value (ties toward the positive power).
    Word word(IntVector const& v) const;

   private:
    std::int64_t signed_exponent(std::size_t i, std::int64_t r) const;

    std::size_t               _rank;
    std::vector<std::int64_t> _torsion;
    Alphabet                  _alphabet;
    Dfa                       _language;
  };

  class AbelianSubgroup final : public SubgroupContext {
   public:
    // Subgroup generated by gens; the Y generators are named y1, y2, ...
    // unless names are given.
    AbelianSubgroup(std::shared_ptr<AbelianGroup const> parent,
                    std::vector<Word>                   gens,
                    std::vector<std::string>            names = {});

    GroupBackend const& parent() const override {
      return *_parent;
    }
    std::vector<Word> const& generators() const override {
      return _gens;
    }
    Alphabet const& subgroup_alphabet() const override {
      return _alphabet;
    }
    bool        member(Word const& g) const override;
    Word        h_express(Word const& g) const override;
    // The shortlex least word of the coset.
    Word        coset_rep(Word const& g) const override;
    Language    coset_language() const override;
    std::string description() const override;

    // Coset invariant: exponent vector reduced modulo the subgroup lattice.
    IntVector coset_key(Word const& g) const;

    // Length of the longest forbidden factor used to build the coset DFA,
    // and the length up to which factors were searched.
    std::size_t forbidden_factor_length() const;
    std::size_t factor_search_bound() const;

   private:
    IntVector key_of_vector(IntVector const& v) const;
    void      extend_layer() const;  // caller holds the unique lock
    void      build_language() const;

    std::shared_ptr<AbelianGroup const> _parent;
    std::vector<Word>                   _gens;
    Alphabet                            _alphabet;
    Lattice                             _lattice;

    mutable std::shared_mutex                                    _mtx;
    mutable std::unordered_map<IntVector, Word, IntVectorHash>   _reps;
    mutable std::vector<std::vector<Word>>                       _layers;

    mutable std::once_flag          _language_once;
    mutable std::shared_ptr<Dfa>    _language;
    mutable std::size_t             _longest_factor = 0;
    mutable std::size_t             _search_bound   = 0;
  };

}  // namespace higgins

#endif  // HIGGINS_ABELIAN_HPP_
