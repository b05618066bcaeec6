// Word-difference machines over padded pairs of words.
//
// A pair (w, v) is read letter by letter as (w[i], v[i]); the shorter word
// is padded at the end. Starting from a difference d_0, reading (a, b)
// moves d to b^-1 d a (padding counts as the identity), so after t steps
// d_t = v(t)^-1 d_0 w(t).

#ifndef HIGGINS_PAIR_MACHINE_HPP_
#define HIGGINS_PAIR_MACHINE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "higgins/backend.hpp"
#include "higgins/dfa.hpp"

namespace higgins {

  class PairAlphabet {
   public:
    explicit PairAlphabet(Alphabet base);

    Alphabet const& base() const noexcept {
      return _base;
    }
    // The padding symbol, as a component letter.
    Letter padding() const noexcept {
      return static_cast<Letter>(_base.size());
    }
    std::size_t size() const noexcept {
      return (_base.size() + 1) * (_base.size() + 1) - 1;
    }
    // Components a, b in [0, padding()], not both padding.
    Letter                    symbol(Letter a, Letter b) const;
    std::pair<Letter, Letter> decode(Letter s) const;
    // Display names "(a,b)" with "_" for padding.
    std::vector<std::string> symbol_names() const;
    // The padded pair word of (w, v).
    Word pack(Word const& w, Word const& v) const;

   private:
    Alphabet _base;
  };

  struct WordDifferenceTable {
    // Differences as canonical words; index identity is the trivial one.
    std::vector<Word> differences;
    std::size_t       identity = 0;
    // transitions[d][pair symbol] = index of b^-1 d a, or -1 when that
    // element is outside the table.
    std::vector<std::vector<std::int64_t>> transitions;
  };

  // All elements in the ball of the given radius as differences.
  WordDifferenceTable difference_table(GroupBackend const& G,
                                       PairAlphabet const& P,
                                       std::size_t         radius);

  // Accepts the padded pairs whose difference path starts at differences
  // index start, stays in the table, and ends at index target. Throws if a
  // transition refers to a missing difference or the identity is absent.
  Dfa build_pair_machine(PairAlphabet const&        P,
                         WordDifferenceTable const& table,
                         std::size_t                start,
                         std::size_t                target);

  // Accepts w iff some v makes (w, v) accepted.
  Dfa project_first(Dfa const& pair_dfa, PairAlphabet const& P);

}  // namespace higgins

#endif  // HIGGINS_PAIR_MACHINE_HPP_
