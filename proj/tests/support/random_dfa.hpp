// Random partial DFAs for property tests.

#ifndef HIGGINS_TESTS_RANDOM_DFA_HPP_
#define HIGGINS_TESTS_RANDOM_DFA_HPP_

#include <random>
#include <set>
#include <string>
#include <vector>

#include "higgins/dfa.hpp"

namespace higgins::testing {

  inline Dfa random_dfa(std::mt19937& rng, std::size_t max_states,
                        std::vector<std::string> const& symbols) {
    std::uniform_int_distribution<std::size_t> count(1, max_states);
    std::size_t                                n = count(rng);
    std::uniform_int_distribution<State>       target(-1, n - 1);
    std::bernoulli_distribution                coin(0.4);
    Dfa                                        A(symbols, n);
    A.set_start(0);
    for (State s = 0; s < static_cast<State>(n); ++s) {
      A.set_accepting(s, coin(rng));
      for (Letter a = 0; a < symbols.size(); ++a) {
        A.set_transition(s, a, target(rng));
      }
    }
    return A;
  }

  // Accepted words of length <= n by brute force over all words.
  inline std::set<Word> brute_language(Dfa const& A, std::size_t n) {
    std::set<Word>    out;
    std::vector<Word> layer = {Word{}};
    for (std::size_t len = 0; len <= n; ++len) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        if (A.accepts(w)) {
          out.insert(w);
        }
        if (len < n) {
          for (Letter a = 0; a < A.num_symbols(); ++a) {
            Word v = w;
            v.push_back(a);
            next.push_back(std::move(v));
          }
        }
      }
      layer = std::move(next);
    }
    return out;
  }

}  // namespace higgins::testing

#endif  // HIGGINS_TESTS_RANDOM_DFA_HPP_
