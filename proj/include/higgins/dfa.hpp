// Deterministic and nondeterministic finite automata over small integer
// alphabets, with the boolean and rational operations used to build and
// compare coset languages.
//
// Transition functions are partial: a missing transition leads to an
// implicit dead state.

#ifndef HIGGINS_DFA_HPP_
#define HIGGINS_DFA_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "higgins/word.hpp"

namespace higgins {

  using State = std::int32_t;
  inline constexpr State no_state = -1;

  class Dfa {
   public:
    Dfa() = default;
    explicit Dfa(std::vector<std::string> symbols, std::size_t num_states = 0);

    std::size_t num_symbols() const noexcept {
      return _symbols.size();
    }
    std::size_t num_states() const noexcept {
      return _accepting.size();
    }
    std::vector<std::string> const& symbols() const noexcept {
      return _symbols;
    }

    State add_state(bool accepting = false);

    State start() const noexcept {
      return _start;
    }
    void set_start(State s) {
      _start = s;
    }

    bool is_accepting(State s) const {
      return _accepting[s];
    }
    void set_accepting(State s, bool value = true) {
      _accepting[s] = value;
    }

    State next(State s, Letter a) const {
      return _trans[s * _symbols.size() + a];
    }
    void set_transition(State from, Letter a, State to) {
      _trans[from * _symbols.size() + a] = to;
    }

    // State reached after reading w, or no_state.
    State run(std::span<Letter const> w) const;
    bool  accepts(std::span<Letter const> w) const;

    std::size_t num_transitions() const;

    std::string const& name() const noexcept {
      return _name;
    }
    void set_name(std::string name) {
      _name = std::move(name);
    }

    bool operator==(Dfa const&) const = default;

   private:
    std::string              _name = "dfa";
    std::vector<std::string> _symbols;
    State                    _start = no_state;
    std::vector<bool>        _accepting;
    std::vector<State>       _trans;
  };

  struct Nfa {
    std::vector<std::string>                     symbols;
    std::vector<State>                           starts;
    std::vector<bool>                            accepting;
    std::vector<std::vector<std::vector<State>>> trans;  // [state][symbol]
    std::vector<std::vector<State>>              epsilon;

    explicit Nfa(std::vector<std::string> syms) : symbols(std::move(syms)) {}

    State add_state(bool acc = false);
    void  add_transition(State from, Letter a, State to) {
      trans[from][a].push_back(to);
    }
    void add_epsilon(State from, State to) {
      epsilon[from].push_back(to);
    }
    std::size_t num_states() const noexcept {
      return accepting.size();
    }
  };

  Nfa to_nfa(Dfa const& A);

  // Subset construction with epsilon closure. The result is trimmed.
  Dfa determinize(Nfa const& N);

  // Remove states that are unreachable or cannot reach an accepting state.
  // States are renumbered in breadth-first order from the start state.
  Dfa trim(Dfa const& A);

  // Hopcroft partition refinement followed by trimming; the result is the
  // canonical minimal DFA (states numbered breadth-first in symbol order).
  Dfa minimize(Dfa const& A);

  Dfa intersect(Dfa const& A, Dfa const& B);
  Dfa unite(Dfa const& A, Dfa const& B);
  Dfa complement(Dfa const& A);
  Dfa concat(Dfa const& A, Dfa const& B);

  Dfa empty_dfa(std::vector<std::string> symbols);
  Dfa universal_dfa(std::vector<std::string> symbols);
  // Accepts exactly the given words.
  Dfa finite_dfa(std::vector<std::string> symbols,
                 std::vector<Word> const& words);
  // Words containing none of the given words as a factor (Aho-Corasick).
  Dfa avoiding_dfa(std::vector<std::string> symbols,
                   std::vector<Word> const& forbidden);
  // Relabel symbol a as map[a] in an alphabet of new_symbols.
  Dfa relabel(Dfa const&                 A,
              std::vector<Letter> const& map,
              std::vector<std::string>   new_symbols);

  bool is_empty(Dfa const& A);
  // Same language (compared via minimal automata).
  bool equivalent(Dfa const& A, Dfa const& B);

  // All accepted words of length <= n, in shortlex order.
  std::vector<Word> enumerate(Dfa const& A, std::size_t n);

  // Symbol names of an alphabet in letter order.
  std::vector<std::string> symbol_names(Alphabet const& A);

}  // namespace higgins

#endif  // HIGGINS_DFA_HPP_
