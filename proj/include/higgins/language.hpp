// A language over an Alphabet given either by an explicit DFA or by a
// membership predicate (optionally with a faster enumerator). Certifiers
// accept both.

#ifndef HIGGINS_LANGUAGE_HPP_
#define HIGGINS_LANGUAGE_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "higgins/dfa.hpp"
#include "higgins/word.hpp"

namespace higgins {

  class Language {
   public:
    using Membership = std::function<bool(Word const&)>;
    using Enumerator = std::function<std::vector<Word>(std::size_t)>;

    Language() = default;
    Language(Alphabet alphabet, Dfa dfa);
    // When no enumerator is given, enumeration filters all words by
    // membership; pass prefix_closed = true to prune the search at the
    // first rejected prefix.
    Language(Alphabet   alphabet,
             Membership membership,
             Enumerator enumerator    = nullptr,
             bool       prefix_closed = false);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    bool       contains(Word const& w) const;
    // Accepted words of length <= n in shortlex order.
    std::vector<Word> enumerate(std::size_t n) const;

    bool has_dfa() const noexcept {
      return _dfa != nullptr;
    }
    Dfa const& dfa() const;  // throws if there is none

    // Restrict to the words satisfying pred; keeps the DFA if filter_dfa is
    // supplied (an automaton for the restricted language).
    Language filter(Membership pred, std::optional<Dfa> filter_dfa = {}) const;

   private:
    Alphabet             _alphabet;
    std::shared_ptr<Dfa> _dfa;
    Membership           _membership;
    Enumerator           _enumerator;
    bool                 _prefix_closed = false;
  };

  // Words of length <= n accepted by pred, shortlex order. With
  // prefix_closed, a word is only extended if it is accepted.
  std::vector<Word> filter_words(Alphabet const&             A,
                                 std::size_t                 n,
                                 Language::Membership const& pred,
                                 bool                        prefix_closed);

}  // namespace higgins

#endif  // HIGGINS_LANGUAGE_HPP_
