// Independent oracles for the free product Z * Z = F(a, b) and for the HNN
// extension of Z^2 = <x1, x2> over <x1> with the identity isomorphism,
// which is Z x F(x2, s): x1 is central.

#ifndef HIGGINS_TESTS_ORACLES_FREE_PRODUCT_HPP_
#define HIGGINS_TESTS_ORACLES_FREE_PRODUCT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace higgins::oracles {

  using Tokens = std::vector<std::string>;

  inline std::string inverse_token(std::string const& t) {
    std::string const suffix = "^-1";
    if (t.size() > suffix.size() && t.ends_with(suffix)) {
      return t.substr(0, t.size() - suffix.size());
    }
    return t + suffix;
  }

  // Interleaved free reduction: in Z * Z every syllable is a power of one
  // generator, so reducing the word freely merges and cancels syllables.
  inline Tokens free_product_normal_form(Tokens const& w) {
    Tokens out;
    for (auto const& t : w) {
      if (!out.empty() && out.back() == inverse_token(t)) {
        out.pop_back();
      } else {
        out.push_back(t);
      }
    }
    return out;
  }

  // (exponent sum of x1, reduced word in the remaining letters)
  inline std::pair<long, Tokens> hnn_key(Tokens const& w,
                                         std::string const& central = "x1") {
    long   sum = 0;
    Tokens rest;
    for (auto const& t : w) {
      if (t == central) {
        ++sum;
      } else if (t == inverse_token(central)) {
        --sum;
      } else {
        rest.push_back(t);
      }
    }
    return {sum, free_product_normal_form(rest)};
  }

}  // namespace higgins::oracles

#endif  // HIGGINS_TESTS_ORACLES_FREE_PRODUCT_HPP_
