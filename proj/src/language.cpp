#include "higgins/language.hpp"

#include "higgins/error.hpp"

namespace higgins {

  Language::Language(Alphabet alphabet, Dfa dfa)
      : _alphabet(std::move(alphabet)),
        _dfa(std::make_shared<Dfa>(std::move(dfa))) {
    if (_dfa->num_symbols() != _alphabet.size()) {
      throw Error("DFA alphabet size does not match the language alphabet");
    }
    auto d      = _dfa;
    _membership = [d](Word const& w) {
      return d->accepts(w);
    };
    _enumerator = [d](std::size_t n) {
      return higgins::enumerate(*d, n);
    };
  }

  Language::Language(Alphabet   alphabet,
                     Membership membership,
                     Enumerator enumerator,
                     bool       prefix_closed)
      : _alphabet(std::move(alphabet)),
        _membership(std::move(membership)),
        _enumerator(std::move(enumerator)),
        _prefix_closed(prefix_closed) {
    if (!_membership) {
      throw Error("a language needs a membership predicate");
    }
  }

  bool Language::contains(Word const& w) const {
    if (!_alphabet.contains(w)) {
      return false;
    }
    return _membership(w);
  }

  std::vector<Word> Language::enumerate(std::size_t n) const {
    if (_enumerator) {
      return _enumerator(n);
    }
    return filter_words(_alphabet, n, _membership, _prefix_closed);
  }

  Dfa const& Language::dfa() const {
    if (!_dfa) {
      throw Error("language has no explicit automaton");
    }
    return *_dfa;
  }

  Language Language::filter(Membership pred, std::optional<Dfa> filter_dfa) const {
    if (filter_dfa) {
      return Language(_alphabet, std::move(*filter_dfa));
    }
    auto base = *this;
    auto both = [base, pred](Word const& w) {
      return base.contains(w) && pred(w);
    };
    Enumerator en = [base, pred](std::size_t n) {
      std::vector<Word> out;
      for (auto& w : base.enumerate(n)) {
        if (pred(w)) {
          out.push_back(std::move(w));
        }
      }
      return out;
    };
    return Language(_alphabet, both, en);
  }

  std::vector<Word> filter_words(Alphabet const&             A,
                                 std::size_t                 n,
                                 Language::Membership const& pred,
                                 bool                        prefix_closed) {
    std::vector<Word> out;
    if (!prefix_closed) {
      for_each_word(A, n, [&](Word const& w) {
        if (pred(w)) {
          out.push_back(w);
        }
      });
      return out;
    }
    std::vector<Word> layer;
    if (pred(Word{})) {
      layer.push_back(Word{});
    }
    for (std::size_t len = 0; !layer.empty(); ++len) {
      out.insert(out.end(), layer.begin(), layer.end());
      if (len == n) {
        break;
      }
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (Letter x = 0; x < A.size(); ++x) {
          Word v = w;
          v.push_back(x);
          if (pred(v)) {
            next.push_back(std::move(v));
          }
        }
      }
      layer = std::move(next);
    }
    return out;
  }

}  // namespace higgins
