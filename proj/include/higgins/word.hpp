// Generator alphabets and words over them.
//
// Letters are interned as small integers. The integer order of the letters is
// the fixed order of X^{\pm} used for every shortlex comparison; an alphabet
// built from generators g1, g2, ... lays its letters out as
// g1 < g1^-1 < g2 < g2^-1 < ...  (self-inverse generators contribute a
// single letter).

#ifndef HIGGINS_WORD_HPP_
#define HIGGINS_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace higgins {

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (Letter x : w) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  class Alphabet {
   public:
    struct Generator {
      std::string name;
      bool        self_inverse = false;
    };

    Alphabet() = default;

    // Build X^{\pm} from a list of generators.
    explicit Alphabet(std::vector<Generator> const& gens);
    // Convenience: generators none of which is self-inverse.
    static Alphabet from_names(std::vector<std::string> const& names);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::size_t num_generators() const noexcept {
      return _generator_letter.size();
    }

    Letter inverse(Letter x) const {
      return _inverse[x];
    }
    bool is_self_inverse(Letter x) const {
      return _inverse[x] == x;
    }
    // Index of the generator that x or x^-1 is.
    std::size_t generator_of(Letter x) const {
      return _generator_of[x];
    }
    // The positive letter of generator i.
    Letter generator_letter(std::size_t i) const {
      return _generator_letter[i];
    }
    bool is_positive(Letter x) const {
      return _generator_letter[_generator_of[x]] == x;
    }
    std::string const& name(Letter x) const {
      return _names[x];
    }
    std::string const& generator_name(std::size_t i) const {
      return _names[_generator_letter[i]];
    }

    std::optional<Letter> find(std::string_view name) const;
    Letter                letter(std::string_view name) const;  // throws

    bool contains(Word const& w) const noexcept;
    // Throws Error naming the first letter outside the alphabet.
    void validate(Word const& w) const;

    // Whitespace-separated letter names; "ε" or the empty string is the
    // empty word. Tokens may carry a power suffix "^n" or "^-n".
    Word        parse(std::string_view text) const;
    std::string format(Word const& w) const;
    std::string format(std::span<Letter const> w) const;

    std::vector<Generator> const& generators() const noexcept {
      return _generators;
    }

    bool operator==(Alphabet const& that) const {
      return _names == that._names && _inverse == that._inverse;
    }

   private:
    std::vector<Generator>                       _generators;
    std::vector<std::string>                     _names;
    std::vector<Letter>                          _inverse;
    std::vector<std::size_t>                     _generator_of;
    std::vector<Letter>                          _generator_letter;
    std::unordered_map<std::string, Letter>      _index;
  };

  inline constexpr std::string_view empty_word_symbol = "ε";

  ////////////////////////////////////////////////////////////////////////
  // Word operations
  ////////////////////////////////////////////////////////////////////////

  // Letterwise inverse of the reversal.
  Word invert(Alphabet const& A, Word const& w);

  // Cancel adjacent inverse pairs until none remain.
  Word free_reduce(Alphabet const& A, Word const& w);
  bool is_freely_reduced(Alphabet const& A, Word const& w);

  // Shorter words first, then lexicographic on letter indices.
  std::strong_ordering shortlex_cmp(Word const& u, Word const& v);
  // As above, but throws if either word is not over A.
  std::strong_ordering shortlex_cmp(Alphabet const& A,
                                    Word const&     u,
                                    Word const&     v);

  struct ShortlexLess {
    bool operator()(Word const& u, Word const& v) const {
      return shortlex_cmp(u, v) < 0;
    }
  };

  // The prefix of length min(t, |w|).
  Word prefix(Word const& w, std::size_t t);

  Word concat(Word const& u, Word const& v);
  Word concat(Word const& u, Word const& v, Word const& w);

  // x^n as a word (x^-|n| when n is negative).
  Word power(Alphabet const& A, Word const& x, long n);

  // Replace each letter x of w by images[generator_of(x)] (or its inverse).
  Word substitute(Alphabet const&         source,
                  Alphabet const&         target,
                  Word const&             w,
                  std::vector<Word> const& images);

  // All words over A of length exactly n, in lexicographic order.
  std::vector<Word> all_words(Alphabet const& A, std::size_t n);

  // Calls f on every word of length <= n in shortlex order.
  void for_each_word(Alphabet const&                       A,
                     std::size_t                           n,
                     std::function<void(Word const&)> const& f);

}  // namespace higgins

#endif  // HIGGINS_WORD_HPP_
