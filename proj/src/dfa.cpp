#include "higgins/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

#include "higgins/error.hpp"

namespace higgins {

  namespace {
    void check_compatible(Dfa const& A, Dfa const& B) {
      if (A.symbols() != B.symbols()) {
        throw Error("automata have different alphabets");
      }
    }

    // Complete copy: every missing transition goes to an explicit sink.
    Dfa complete(Dfa const& A) {
      Dfa   C(A.symbols(), A.num_states());
      State sink = no_state;
      for (State s = 0; s < static_cast<State>(A.num_states()); ++s) {
        C.set_accepting(s, A.is_accepting(s));
      }
      auto get_sink = [&]() {
        if (sink == no_state) {
          sink = C.add_state(false);
          for (Letter a = 0; a < C.num_symbols(); ++a) {
            C.set_transition(sink, a, sink);
          }
        }
        return sink;
      };
      if (A.start() == no_state) {
        C.set_start(get_sink());
        return C;
      }
      C.set_start(A.start());
      for (State s = 0; s < static_cast<State>(A.num_states()); ++s) {
        for (Letter a = 0; a < A.num_symbols(); ++a) {
          State t = A.next(s, a);
          C.set_transition(s, a, t == no_state ? get_sink() : t);
        }
      }
      return C;
    }
  }  // namespace

  Dfa::Dfa(std::vector<std::string> symbols, std::size_t num_states)
      : _symbols(std::move(symbols)),
        _accepting(num_states, false),
        _trans(num_states * _symbols.size(), no_state) {}

  State Dfa::add_state(bool accepting) {
    _accepting.push_back(accepting);
    _trans.resize(_trans.size() + _symbols.size(), no_state);
    return static_cast<State>(_accepting.size() - 1);
  }

  State Dfa::run(std::span<Letter const> w) const {
    State s = _start;
    for (Letter a : w) {
      if (s == no_state) {
        return no_state;
      }
      if (a >= _symbols.size()) {
        return no_state;
      }
      s = next(s, a);
    }
    return s;
  }

  bool Dfa::accepts(std::span<Letter const> w) const {
    State s = run(w);
    return s != no_state && _accepting[s];
  }

  std::size_t Dfa::num_transitions() const {
    return static_cast<std::size_t>(
        std::count_if(_trans.begin(), _trans.end(), [](State t) {
          return t != no_state;
        }));
  }

  State Nfa::add_state(bool acc) {
    accepting.push_back(acc);
    trans.emplace_back(symbols.size());
    epsilon.emplace_back();
    return static_cast<State>(accepting.size() - 1);
  }

  Nfa to_nfa(Dfa const& A) {
    Nfa N(A.symbols());
    for (std::size_t s = 0; s < A.num_states(); ++s) {
      N.add_state(A.is_accepting(s));
    }
    for (State s = 0; s < static_cast<State>(A.num_states()); ++s) {
      for (Letter a = 0; a < A.num_symbols(); ++a) {
        if (A.next(s, a) != no_state) {
          N.add_transition(s, a, A.next(s, a));
        }
      }
    }
    if (A.start() != no_state) {
      N.starts.push_back(A.start());
    }
    return N;
  }

  Dfa determinize(Nfa const& N) {
    auto closure = [&N](std::vector<State> set) {
      std::vector<bool>  seen(N.num_states(), false);
      std::vector<State> stack;
      for (State s : set) {
        if (!seen[s]) {
          seen[s] = true;
          stack.push_back(s);
        }
      }
      while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (State t : N.epsilon[s]) {
          if (!seen[t]) {
            seen[t] = true;
            stack.push_back(t);
          }
        }
      }
      std::vector<State> out;
      for (State s = 0; s < static_cast<State>(N.num_states()); ++s) {
        if (seen[s]) {
          out.push_back(s);
        }
      }
      return out;
    };

    Dfa                                 D(N.symbols);
    std::map<std::vector<State>, State> index;
    std::deque<std::vector<State>>      queue;
    auto                                lookup = [&](std::vector<State> set) {
      auto it = index.find(set);
      if (it != index.end()) {
        return it->second;
      }
      bool acc = std::any_of(
          set.begin(), set.end(), [&N](State s) { return N.accepting[s]; });
      State id = D.add_state(acc);
      index.emplace(set, id);
      queue.push_back(std::move(set));
      return id;
    };
    D.set_start(lookup(closure(N.starts)));
    State current = 0;
    while (!queue.empty()) {
      std::vector<State> set = std::move(queue.front());
      queue.pop_front();
      for (Letter a = 0; a < N.symbols.size(); ++a) {
        std::vector<State> target;
        for (State s : set) {
          auto const& ts = N.trans[s][a];
          target.insert(target.end(), ts.begin(), ts.end());
        }
        if (target.empty()) {
          continue;
        }
        std::sort(target.begin(), target.end());
        target.erase(std::unique(target.begin(), target.end()), target.end());
        State t = lookup(closure(std::move(target)));
        D.set_transition(current, a, t);
      }
      ++current;
    }
    return trim(D);
  }

  Dfa trim(Dfa const& A) {
    std::size_t const n = A.num_states();
    if (A.start() == no_state) {
      return empty_dfa(A.symbols());
    }
    // co-accessible states
    std::vector<std::vector<State>> pre(n);
    for (State s = 0; s < static_cast<State>(n); ++s) {
      for (Letter a = 0; a < A.num_symbols(); ++a) {
        if (A.next(s, a) != no_state) {
          pre[A.next(s, a)].push_back(s);
        }
      }
    }
    std::vector<bool>  live(n, false);
    std::vector<State> stack;
    for (State s = 0; s < static_cast<State>(n); ++s) {
      if (A.is_accepting(s)) {
        live[s] = true;
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (State p : pre[s]) {
        if (!live[p]) {
          live[p] = true;
          stack.push_back(p);
        }
      }
    }
    if (!live[A.start()]) {
      Dfa E = empty_dfa(A.symbols());
      E.set_name(A.name());
      return E;
    }
    // breadth-first renumbering over live states
    std::vector<State> number(n, no_state);
    std::vector<State> order;
    number[A.start()] = 0;
    order.push_back(A.start());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Letter a = 0; a < A.num_symbols(); ++a) {
        State t = A.next(order[i], a);
        if (t != no_state && live[t] && number[t] == no_state) {
          number[t] = static_cast<State>(order.size());
          order.push_back(t);
        }
      }
    }
    Dfa T(A.symbols(), order.size());
    T.set_name(A.name());
    T.set_start(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      T.set_accepting(static_cast<State>(i), A.is_accepting(order[i]));
      for (Letter a = 0; a < A.num_symbols(); ++a) {
        State t = A.next(order[i], a);
        if (t != no_state && live[t]) {
          T.set_transition(static_cast<State>(i), a, number[t]);
        }
      }
    }
    return T;
  }

  Dfa minimize(Dfa const& input) {
    Dfa A = trim(input);
    if (A.num_states() == 0) {
      return A;
    }
    Dfa               C = complete(A);
    std::size_t const n = C.num_states();
    std::size_t const k = C.num_symbols();

    // inverse transitions
    std::vector<std::vector<std::vector<State>>> pre(
        k, std::vector<std::vector<State>>(n));
    for (State s = 0; s < static_cast<State>(n); ++s) {
      for (Letter a = 0; a < k; ++a) {
        pre[a][C.next(s, a)].push_back(s);
      }
    }

    std::vector<std::size_t>              block(n);
    std::vector<std::vector<State>>       blocks;
    std::vector<State>                    acc, rej;
    for (State s = 0; s < static_cast<State>(n); ++s) {
      (C.is_accepting(s) ? acc : rej).push_back(s);
    }
    for (auto* part : {&acc, &rej}) {
      if (!part->empty()) {
        for (State s : *part) {
          block[s] = blocks.size();
        }
        blocks.push_back(*part);
      }
    }
    std::deque<std::size_t> work;
    std::vector<bool>       in_work(blocks.size(), false);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      work.push_back(b);
      in_work[b] = true;
    }

    std::vector<std::size_t> hits(n, 0);
    std::vector<bool>        marked(n, false);
    while (!work.empty()) {
      std::size_t splitter = work.front();
      work.pop_front();
      in_work[splitter]            = false;
      std::vector<State> const spl = blocks[splitter];
      for (Letter a = 0; a < k; ++a) {
        std::vector<State> X;
        for (State t : spl) {
          for (State p : pre[a][t]) {
            if (!marked[p]) {
              marked[p] = true;
              X.push_back(p);
            }
          }
        }
        std::vector<std::size_t> touched;
        for (State p : X) {
          if (hits[block[p]]++ == 0) {
            touched.push_back(block[p]);
          }
        }
        for (std::size_t b : touched) {
          if (hits[b] < blocks[b].size()) {
            std::vector<State> inside, outside;
            for (State s : blocks[b]) {
              (marked[s] ? inside : outside).push_back(s);
            }
            std::size_t nb = blocks.size();
            blocks[b]      = std::move(outside);
            blocks.push_back(std::move(inside));
            in_work.push_back(false);
            for (State s : blocks[nb]) {
              block[s] = nb;
            }
            if (in_work[b]) {
              work.push_back(nb);
              in_work[nb] = true;
            } else {
              std::size_t smaller
                  = blocks[b].size() <= blocks[nb].size() ? b : nb;
              work.push_back(smaller);
              in_work[smaller] = true;
            }
          }
          hits[b] = 0;
        }
        for (State p : X) {
          marked[p] = false;
        }
      }
    }

    Dfa Q(C.symbols(), blocks.size());
    Q.set_name(A.name());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      State rep = blocks[b].front();
      Q.set_accepting(static_cast<State>(b), C.is_accepting(rep));
      for (Letter a = 0; a < k; ++a) {
        Q.set_transition(static_cast<State>(b), a, block[C.next(rep, a)]);
      }
    }
    Q.set_start(block[C.start()]);
    return trim(Q);
  }

  Dfa intersect(Dfa const& A, Dfa const& B) {
    check_compatible(A, B);
    Dfa P(A.symbols());
    if (A.start() == no_state || B.start() == no_state) {
      return empty_dfa(A.symbols());
    }
    std::map<std::pair<State, State>, State> index;
    std::deque<std::pair<State, State>>      queue;
    auto lookup = [&](std::pair<State, State> p) {
      auto it = index.find(p);
      if (it != index.end()) {
        return it->second;
      }
      State id = P.add_state(A.is_accepting(p.first)
                             && B.is_accepting(p.second));
      index.emplace(p, id);
      queue.push_back(p);
      return id;
    };
    P.set_start(lookup({A.start(), B.start()}));
    while (!queue.empty()) {
      auto p = queue.front();
      queue.pop_front();
      State from = index[p];
      for (Letter a = 0; a < A.num_symbols(); ++a) {
        State s = A.next(p.first, a), t = B.next(p.second, a);
        if (s != no_state && t != no_state) {
          P.set_transition(from, a, lookup({s, t}));
        }
      }
    }
    return trim(P);
  }

  Dfa unite(Dfa const& A, Dfa const& B) {
    check_compatible(A, B);
    Dfa CA = complete(A), CB = complete(B);
    Dfa P(A.symbols());
    std::map<std::pair<State, State>, State> index;
    std::deque<std::pair<State, State>>      queue;
    auto lookup = [&](std::pair<State, State> p) {
      auto it = index.find(p);
      if (it != index.end()) {
        return it->second;
      }
      State id = P.add_state(CA.is_accepting(p.first)
                             || CB.is_accepting(p.second));
      index.emplace(p, id);
      queue.push_back(p);
      return id;
    };
    P.set_start(lookup({CA.start(), CB.start()}));
    while (!queue.empty()) {
      auto p = queue.front();
      queue.pop_front();
      State from = index[p];
      for (Letter a = 0; a < A.num_symbols(); ++a) {
        P.set_transition(
            from, a, lookup({CA.next(p.first, a), CB.next(p.second, a)}));
      }
    }
    return trim(P);
  }

  Dfa complement(Dfa const& A) {
    Dfa C = complete(A);
    for (State s = 0; s < static_cast<State>(C.num_states()); ++s) {
      C.set_accepting(s, !C.is_accepting(s));
    }
    return trim(C);
  }

  Dfa concat(Dfa const& A, Dfa const& B) {
    check_compatible(A, B);
    Nfa         N      = to_nfa(A);
    std::size_t offset = N.num_states();
    for (std::size_t s = 0; s < B.num_states(); ++s) {
      N.add_state(B.is_accepting(s));
    }
    for (State s = 0; s < static_cast<State>(B.num_states()); ++s) {
      for (Letter a = 0; a < B.num_symbols(); ++a) {
        if (B.next(s, a) != no_state) {
          N.add_transition(s + offset, a, B.next(s, a) + offset);
        }
      }
    }
    for (State s = 0; s < static_cast<State>(offset); ++s) {
      if (N.accepting[s]) {
        N.accepting[s] = false;
        if (B.start() != no_state) {
          N.add_epsilon(s, B.start() + offset);
        }
      }
    }
    return determinize(N);
  }

  Dfa empty_dfa(std::vector<std::string> symbols) {
    Dfa E(std::move(symbols), 1);
    E.set_start(0);
    return E;
  }

  Dfa universal_dfa(std::vector<std::string> symbols) {
    Dfa U(std::move(symbols), 1);
    U.set_start(0);
    U.set_accepting(0);
    for (Letter a = 0; a < U.num_symbols(); ++a) {
      U.set_transition(0, a, 0);
    }
    return U;
  }

  Dfa finite_dfa(std::vector<std::string> symbols,
                 std::vector<Word> const& words) {
    Dfa T(std::move(symbols), 1);
    T.set_start(0);
    for (auto const& w : words) {
      State s = 0;
      for (Letter a : w) {
        if (a >= T.num_symbols()) {
          throw Error("word letter outside the automaton alphabet");
        }
        State t = T.next(s, a);
        if (t == no_state) {
          t = T.add_state(false);
          T.set_transition(s, a, t);
        }
        s = t;
      }
      T.set_accepting(s);
    }
    return trim(T);
  }

  Dfa avoiding_dfa(std::vector<std::string> symbols,
                   std::vector<Word> const& forbidden) {
    std::size_t const k = symbols.size();
    // trie of the forbidden words
    std::vector<std::vector<State>> go(1, std::vector<State>(k, no_state));
    std::vector<bool>               bad(1, false);
    for (auto const& w : forbidden) {
      if (w.empty()) {
        return empty_dfa(std::move(symbols));
      }
      State s = 0;
      for (Letter a : w) {
        if (a >= k) {
          throw Error("forbidden word letter outside the alphabet");
        }
        if (go[s][a] == no_state) {
          go[s][a] = static_cast<State>(go.size());
          go.emplace_back(k, no_state);
          bad.push_back(false);
        }
        s = go[s][a];
      }
      bad[s] = true;
    }
    // failure links, completing the goto function breadth-first
    std::vector<State> fail(go.size(), 0);
    std::deque<State>  queue;
    for (Letter a = 0; a < k; ++a) {
      if (go[0][a] == no_state) {
        go[0][a] = 0;
      } else {
        fail[go[0][a]] = 0;
        queue.push_back(go[0][a]);
      }
    }
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      bad[s] = bad[s] || bad[fail[s]];
      for (Letter a = 0; a < k; ++a) {
        State t = go[s][a];
        if (t == no_state) {
          go[s][a] = go[fail[s]][a];
        } else {
          fail[t] = go[fail[s]][a];
          queue.push_back(t);
        }
      }
    }
    Dfa D(std::move(symbols), go.size());
    D.set_start(0);
    for (State s = 0; s < static_cast<State>(go.size()); ++s) {
      if (bad[s]) {
        continue;
      }
      D.set_accepting(s);
      for (Letter a = 0; a < k; ++a) {
        if (!bad[go[s][a]]) {
          D.set_transition(s, a, go[s][a]);
        }
      }
    }
    return minimize(D);
  }

  Dfa relabel(Dfa const&                 A,
              std::vector<Letter> const& map,
              std::vector<std::string>   new_symbols) {
    Dfa R(std::move(new_symbols), A.num_states());
    R.set_name(A.name());
    R.set_start(A.start());
    for (State s = 0; s < static_cast<State>(A.num_states()); ++s) {
      R.set_accepting(s, A.is_accepting(s));
      for (Letter a = 0; a < A.num_symbols(); ++a) {
        if (A.next(s, a) != no_state) {
          if (map.at(a) >= R.num_symbols()) {
            throw Error("relabel target outside the new alphabet");
          }
          if (R.next(s, map[a]) != no_state) {
            throw Error("relabel map is not injective on transitions");
          }
          R.set_transition(s, map[a], A.next(s, a));
        }
      }
    }
    return R;
  }

  bool is_empty(Dfa const& A) {
    Dfa T = trim(A);
    return T.num_states() == 1 && !T.is_accepting(0)
           && T.num_transitions() == 0;
  }

  bool equivalent(Dfa const& A, Dfa const& B) {
    Dfa MA = minimize(A), MB = minimize(B);
    MA.set_name("");
    MB.set_name("");
    return MA == MB;
  }

  std::vector<Word> enumerate(Dfa const& input, std::size_t n) {
    Dfa               A = trim(input);
    std::vector<Word> result;
    if (is_empty(A)) {
      return result;
    }
    // Each level is kept in lexicographic order: expanding the words of a
    // sorted level in symbol order yields the next level sorted.
    std::vector<std::pair<Word, State>> level = {{Word{}, A.start()}};
    for (std::size_t len = 0; len <= n && !level.empty(); ++len) {
      for (auto const& [w, s] : level) {
        if (A.is_accepting(s)) {
          result.push_back(w);
        }
      }
      if (len == n) {
        break;
      }
      std::vector<std::pair<Word, State>> next;
      for (auto const& [w, s] : level) {
        for (Letter a = 0; a < A.num_symbols(); ++a) {
          State t = A.next(s, a);
          if (t != no_state) {
            Word v = w;
            v.push_back(a);
            next.emplace_back(std::move(v), t);
          }
        }
      }
      level = std::move(next);
    }
    return result;
  }

  std::vector<std::string> symbol_names(Alphabet const& A) {
    std::vector<std::string> out;
    for (Letter x = 0; x < A.size(); ++x) {
      out.push_back(A.name(x));
    }
    return out;
  }

}  // namespace higgins
