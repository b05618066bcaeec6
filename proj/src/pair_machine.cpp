#include "higgins/pair_machine.hpp"

#include <unordered_map>

#include "higgins/error.hpp"

namespace higgins {

  PairAlphabet::PairAlphabet(Alphabet base) : _base(std::move(base)) {}

  Letter PairAlphabet::symbol(Letter a, Letter b) const {
    Letter const p = padding();
    if (a > p || b > p || (a == p && b == p)) {
      throw Error("invalid pair symbol components");
    }
    return a * (p + 1) + b;
  }

  std::pair<Letter, Letter> PairAlphabet::decode(Letter s) const {
    Letter const p = padding();
    return {s / (p + 1), s % (p + 1)};
  }

  std::vector<std::string> PairAlphabet::symbol_names() const {
    std::vector<std::string> out;
    auto name = [this](Letter a) {
      return a == padding() ? std::string("_") : _base.name(a);
    };
    for (Letter s = 0; s < size(); ++s) {
      auto [a, b] = decode(s);
      out.push_back("(" + name(a) + "," + name(b) + ")");
    }
    return out;
  }

  Word PairAlphabet::pack(Word const& w, Word const& v) const {
    Word out;
    for (std::size_t i = 0; i < std::max(w.size(), v.size()); ++i) {
      out.push_back(symbol(i < w.size() ? w[i] : padding(),
                           i < v.size() ? v[i] : padding()));
    }
    return out;
  }

  WordDifferenceTable difference_table(GroupBackend const& G,
                                       PairAlphabet const& P,
                                       std::size_t         radius) {
    WordDifferenceTable T;
    T.differences = G.ball(radius);
    std::unordered_map<Word, std::int64_t, WordHash> index;
    for (std::size_t i = 0; i < T.differences.size(); ++i) {
      index.emplace(T.differences[i], static_cast<std::int64_t>(i));
    }
    T.identity = static_cast<std::size_t>(index.at(Word{}));
    Alphabet const& X = G.alphabet();
    for (auto const& d : T.differences) {
      std::vector<std::int64_t> row(P.size(), -1);
      for (Letter s = 0; s < P.size(); ++s) {
        auto [a, b] = P.decode(s);
        Word e;
        if (b != P.padding()) {
          e.push_back(X.inverse(b));
        }
        e.insert(e.end(), d.begin(), d.end());
        if (a != P.padding()) {
          e.push_back(a);
        }
        auto it = index.find(G.canonical(e));
        if (it != index.end()) {
          row[s] = it->second;
        }
      }
      T.transitions.push_back(std::move(row));
    }
    return T;
  }

  Dfa build_pair_machine(PairAlphabet const&        P,
                         WordDifferenceTable const& T,
                         std::size_t                start,
                         std::size_t                target) {
    std::size_t const n = T.differences.size();
    if (T.identity >= n || !T.differences[T.identity].empty()) {
      throw Error("difference table has no identity difference");
    }
    if (start >= n || target >= n || T.transitions.size() != n) {
      throw Error("difference table index out of range");
    }
    for (auto const& row : T.transitions) {
      if (row.size() != P.size()) {
        throw Error("difference table row has the wrong width");
      }
      for (auto t : row) {
        if (t < -1 || t >= static_cast<std::int64_t>(n)) {
          throw Error("difference table is not closed under its transitions");
        }
      }
    }
    // state (d, mode): mode 0 both tracks running, 1 first track padded,
    // 2 second track padded
    Dfa  D(P.symbol_names(), 3 * n);
    auto state = [](std::size_t d, int mode) {
      return static_cast<State>(3 * d + mode);
    };
    Letter const pad = P.padding();
    for (std::size_t d = 0; d < n; ++d) {
      for (int mode = 0; mode < 3; ++mode) {
        D.set_accepting(state(d, mode), d == target);
        for (Letter s = 0; s < P.size(); ++s) {
          auto [a, b] = P.decode(s);
          int next    = a == pad ? 1 : b == pad ? 2 : 0;
          if (mode != 0 && next != mode) {
            continue;
          }
          auto t = T.transitions[d][s];
          if (t >= 0) {
            D.set_transition(
                state(d, mode), s, state(static_cast<std::size_t>(t), next));
          }
        }
      }
    }
    D.set_start(state(start, 0));
    D.set_name("pairs");
    return minimize(D);
  }

  Dfa project_first(Dfa const& pair_dfa, PairAlphabet const& P) {
    if (pair_dfa.num_symbols() != P.size()) {
      throw Error("automaton is not over the pair alphabet");
    }
    Nfa N(symbol_names(P.base()));
    for (std::size_t s = 0; s < pair_dfa.num_states(); ++s) {
      N.add_state(pair_dfa.is_accepting(static_cast<State>(s)));
    }
    if (pair_dfa.start() != no_state) {
      N.starts.push_back(pair_dfa.start());
    }
    for (State s = 0; s < static_cast<State>(pair_dfa.num_states()); ++s) {
      for (Letter sym = 0; sym < P.size(); ++sym) {
        State t = pair_dfa.next(s, sym);
        if (t == no_state) {
          continue;
        }
        auto [a, b] = P.decode(sym);
        if (a == P.padding()) {
          N.add_epsilon(s, t);
        } else {
          N.add_transition(s, a, t);
        }
      }
    }
    return minimize(determinize(N));
  }

}  // namespace higgins
