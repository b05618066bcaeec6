// Finite groups given by a multiplication table, and their subgroups.

#ifndef HIGGINS_FINITE_GROUP_HPP_
#define HIGGINS_FINITE_GROUP_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "higgins/backend.hpp"

namespace higgins {

  class FiniteGroup final : public GroupBackend {
   public:
    using Table = std::vector<std::vector<std::size_t>>;

    // table[i][j] = i*j with 0 the identity. Each generator is a name and
    // an element; generators of order 2 become self-inverse letters.
    // Throws unless the table satisfies the group axioms.
    FiniteGroup(Table table,
                std::vector<std::pair<std::string, std::size_t>> generators);
    // Table read from a CSV file.
    static FiniteGroup from_csv(
        std::string const&                               path,
        std::vector<std::pair<std::string, std::size_t>> generators);
    static Table parse_csv(std::string const& text);

    std::size_t order() const noexcept {
      return _table.size();
    }
    std::size_t multiply_elements(std::size_t i, std::size_t j) const {
      return _table[i][j];
    }
    std::size_t element(Word const& w) const;
    std::size_t letter_element(Letter x) const {
      return _letter_element[x];
    }
    // Shortlex least word for an element generated by the alphabet.
    Word const& element_word(std::size_t e) const;

    Alphabet const& alphabet() const override {
      return _alphabet;
    }
    Word canonical(Word const& w) const override {
      return element_word(element(w));
    }
    Language    canonical_language() const override;
    std::string description() const override;

   private:
    Table                    _table;
    Alphabet                 _alphabet;
    std::vector<std::size_t> _letter_element;
    std::vector<Word>        _words;
    std::vector<bool>        _reached;
    Dfa                      _language;
  };

  class FiniteSubgroup final : public SubgroupContext {
   public:
    FiniteSubgroup(std::shared_ptr<FiniteGroup const> parent,
                   std::vector<Word>                  gens,
                   std::vector<std::string>           names = {});

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
    Word        coset_rep(Word const& g) const override;
    Language    coset_language() const override;
    std::string description() const override;

    std::size_t num_cosets() const noexcept {
      return _coset_words.size();
    }
    std::size_t order() const noexcept {
      return _num_members;
    }

   private:
    std::shared_ptr<FiniteGroup const> _parent;
    std::vector<Word>                  _gens;
    Alphabet                           _alphabet;
    std::vector<bool>                  _in_h;
    std::vector<Word>                  _h_words;  // element -> Y-word
    std::vector<std::size_t>           _coset_of;
    std::vector<Word>                  _coset_words;
    std::size_t                        _num_members = 0;
    Dfa                                _language;
  };

}  // namespace higgins

#endif  // HIGGINS_FINITE_GROUP_HPP_
