#include "higgins/free_group.hpp"

#include <algorithm>
#include <map>

#include "higgins/error.hpp"

namespace higgins {

  FreeGroup::FreeGroup(std::size_t rank, std::vector<std::string> names) {
    if (names.empty()) {
      if (rank > 26) {
        throw Error("free groups of rank > 26 need explicit generator names");
      }
      for (std::size_t i = 0; i < rank; ++i) {
        names.emplace_back(1, static_cast<char>('a' + i));
      }
    }
    if (names.size() != rank) {
      throw Error("expected " + std::to_string(rank)
                  + " generator names for the free group");
    }
    _alphabet = Alphabet::from_names(names);
    // state 0 = start, state 1 + x = last letter was x
    std::size_t const k = _alphabet.size();
    Dfa               D(symbol_names(_alphabet), k + 1);
    D.set_start(0);
    for (State s = 0; s <= static_cast<State>(k); ++s) {
      D.set_accepting(s);
      for (Letter x = 0; x < k; ++x) {
        if (s == 0 || _alphabet.inverse(x) != static_cast<Letter>(s - 1)) {
          D.set_transition(s, x, static_cast<State>(x + 1));
        }
      }
    }
    D.set_name("canonical");
    _language = minimize(D);
  }

  Language FreeGroup::canonical_language() const {
    return Language(_alphabet, _language);
  }

  std::string FreeGroup::description() const {
    return "free rank=" + std::to_string(rank());
  }

  FreeCyclicSubgroup::FreeCyclicSubgroup(std::shared_ptr<FreeGroup const> parent,
                                         Word        gen,
                                         std::string name)
      : _parent(std::move(parent)), _gens{gen}, _gen(std::move(gen)) {
    Alphabet const& X = _parent->alphabet();
    X.validate(_gen);
    if (_gen.empty()) {
      throw Error("cyclic subgroup generator is empty");
    }
    if (!is_freely_reduced(X, _gen)) {
      throw Error("cyclic subgroup generator is not freely reduced");
    }
    if (_gen.size() > 1 && _gen.front() == X.inverse(_gen.back())) {
      throw Error("cyclic subgroup generator \"" + X.format(_gen)
                  + "\" is not cyclically reduced; conjugate it first");
    }
    _gen_inv  = invert(X, _gen);
    _alphabet = Alphabet::from_names({name});

    // Membership of a reduced word w in the coset language only depends on
    // its prefix of length |gen|: a trie up to that depth, then states that
    // remember the last letter.
    std::size_t const        n = _gen.size();
    std::size_t const        k = X.size();
    Dfa                      D(symbol_names(X));
    std::map<Word, State>    trie;
    std::vector<State>       tail(k, no_state);
    for (Letter x = 0; x < k; ++x) {
      tail[x] = D.add_state(true);
    }
    for (Letter x = 0; x < k; ++x) {
      for (Letter y = 0; y < k; ++y) {
        if (y != X.inverse(x)) {
          D.set_transition(tail[x], y, tail[y]);
        }
      }
    }
    std::vector<Word> layer = {Word{}};
    trie[Word{}]            = D.add_state(true);
    for (std::size_t len = 1; len <= n; ++len) {
      std::vector<Word> next;
      for (auto const& p : layer) {
        for (Letter x = 0; x < k; ++x) {
          if (!p.empty() && p.back() == X.inverse(x)) {
            continue;
          }
          Word w = p;
          w.push_back(x);
          bool  ok = coset_rep(w) == w;
          State s;
          if (len == n) {
            if (!ok) {
              continue;
            }
            s = tail[x];
          } else {
            s = D.add_state(ok);
            trie[w] = s;
            next.push_back(w);
          }
          D.set_transition(trie.at(p), x, s);
        }
      }
      layer = std::move(next);
    }
    D.set_start(trie.at(Word{}));
    D.set_name("coset");
    _language = minimize(D);
  }

  bool FreeCyclicSubgroup::exponent(Word const& r, long& m) const {
    if (r.size() % _gen.size() != 0) {
      return false;
    }
    long const q = static_cast<long>(r.size() / _gen.size());
    for (Word const* c : {&_gen, &_gen_inv}) {
      bool ok = true;
      for (std::size_t i = 0; i < r.size() && ok; ++i) {
        ok = r[i] == (*c)[i % c->size()];
      }
      if (ok) {
        m = c == &_gen ? q : -q;
        return true;
      }
    }
    return false;
  }

  bool FreeCyclicSubgroup::member(Word const& g) const {
    long m;
    return exponent(_parent->canonical(g), m);
  }

  Word FreeCyclicSubgroup::h_express(Word const& g) const {
    long m;
    if (!exponent(_parent->canonical(g), m)) {
      throw Error("element is not in the cyclic subgroup");
    }
    return Word(static_cast<std::size_t>(m < 0 ? -m : m), m < 0 ? 1 : 0);
  }

  Word FreeCyclicSubgroup::coset_rep(Word const& g) const {
    Alphabet const& X = _parent->alphabet();
    Word            r = _parent->canonical(g);
    // strip the maximal power of gen or gen^-1 on the left
    for (Word const* c : {&_gen, &_gen_inv}) {
      std::size_t i = 0;
      while (r.size() - i >= c->size()
             && std::equal(c->begin(), c->end(), r.begin() + i)) {
        i += c->size();
      }
      r.erase(r.begin(), r.begin() + i);
    }
    // the least element of the coset is r, gen r or gen^-1 r
    Word best = r;
    for (Word const* c : {&_gen, &_gen_inv}) {
      Word v = free_reduce(X, concat(*c, r));
      if (shortlex_cmp(v, best) < 0) {
        best = std::move(v);
      }
    }
    return best;
  }

  Language FreeCyclicSubgroup::coset_language() const {
    return Language(_parent->alphabet(), _language);
  }

  std::string FreeCyclicSubgroup::description() const {
    return "free cyclic subgroup generator="
           + _parent->alphabet().format(_gen);
  }

}  // namespace higgins
