// Free groups with free reduction as canonical form, and cyclic subgroups
// generated by a cyclically reduced word.

#ifndef HIGGINS_FREE_GROUP_HPP_
#define HIGGINS_FREE_GROUP_HPP_

#include <memory>
#include <string>
#include <vector>

#include "higgins/backend.hpp"

namespace higgins {

  class FreeGroup final : public GroupBackend {
   public:
    // Generators are named a, b, c, ... (rank <= 26) unless names are given.
    explicit FreeGroup(std::size_t rank, std::vector<std::string> names = {});

    std::size_t rank() const noexcept {
      return _alphabet.num_generators();
    }
    Alphabet const& alphabet() const override {
      return _alphabet;
    }
    Word canonical(Word const& w) const override {
      _alphabet.validate(w);
      return free_reduce(_alphabet, w);
    }
    Language    canonical_language() const override;
    std::string description() const override;

   private:
    Alphabet _alphabet;
    Dfa      _language;
  };

  class FreeCyclicSubgroup final : public SubgroupContext {
   public:
    // Throws unless gen is nonempty, freely and cyclically reduced.
    FreeCyclicSubgroup(std::shared_ptr<FreeGroup const> parent,
                       Word                             gen,
                       std::string                      name = "y1");

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
    // The shortlex least freely reduced word in the coset.
    Word        coset_rep(Word const& g) const override;
    Language    coset_language() const override;
    std::string description() const override;

   private:
    // m with free_reduce(g) = gen^m, or false.
    bool exponent(Word const& reduced, long& m) const;

    std::shared_ptr<FreeGroup const> _parent;
    std::vector<Word>                _gens;
    Word                             _gen, _gen_inv;
    Alphabet                         _alphabet;
    Dfa                              _language;
  };

}  // namespace higgins

#endif  // HIGGINS_FREE_GROUP_HPP_
