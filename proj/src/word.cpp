#include "higgins/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "higgins/error.hpp"

namespace higgins {

  Alphabet::Alphabet(std::vector<Generator> const& gens) : _generators(gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto const& g = gens[i];
      if (g.name.empty() || g.name.find_first_of(" \t\n^") != std::string::npos
          || g.name == empty_word_symbol) {
        throw Error("invalid generator name \"" + g.name + "\"");
      }
      Letter pos = static_cast<Letter>(_names.size());
      _generator_letter.push_back(pos);
      _names.push_back(g.name);
      _generator_of.push_back(i);
      if (g.self_inverse) {
        _inverse.push_back(pos);
      } else {
        _inverse.push_back(pos + 1);
        _names.push_back(g.name + "^-1");
        _generator_of.push_back(i);
        _inverse.push_back(pos);
      }
    }
    for (Letter x = 0; x < _names.size(); ++x) {
      if (!_index.emplace(_names[x], x).second) {
        throw Error("duplicate letter name \"" + _names[x] + "\"");
      }
    }
  }

  Alphabet Alphabet::from_names(std::vector<std::string> const& names) {
    std::vector<Generator> gens;
    for (auto const& n : names) {
      gens.push_back({n, false});
    }
    return Alphabet(gens);
  }

  std::optional<Letter> Alphabet::find(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Letter Alphabet::letter(std::string_view name) const {
    auto x = find(name);
    if (!x) {
      throw ParseError("unknown letter \"" + std::string(name) + "\"");
    }
    return *x;
  }

  bool Alphabet::contains(Word const& w) const noexcept {
    return std::all_of(
        w.begin(), w.end(), [this](Letter x) { return x < _names.size(); });
  }

  void Alphabet::validate(Word const& w) const {
    for (Letter x : w) {
      if (x >= _names.size()) {
        throw Error("letter index " + std::to_string(x)
                    + " is not in the alphabet");
      }
    }
  }

  Word Alphabet::parse(std::string_view text) const {
    Word               result;
    std::istringstream in{std::string(text)};
    std::string        tok;
    while (in >> tok) {
      if (tok == empty_word_symbol) {
        continue;
      }
      if (auto x = find(tok)) {
        result.push_back(*x);
        continue;
      }
      auto caret = tok.rfind('^');
      if (caret == std::string::npos) {
        throw ParseError("unknown letter \"" + tok + "\"");
      }
      auto base = find(std::string_view(tok).substr(0, caret));
      long n    = 0;
      auto exp  = std::string_view(tok).substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), n);
      if (!base || ec != std::errc() || ptr != exp.data() + exp.size()) {
        throw ParseError("cannot parse \"" + tok + "\" as a letter or power");
      }
      Letter      x = n < 0 ? _inverse[*base] : *base;
      std::size_t m = static_cast<std::size_t>(n < 0 ? -n : n);
      if (is_self_inverse(x)) {
        m %= 2;
      }
      result.insert(result.end(), m, x);
    }
    return result;
  }

  std::string Alphabet::format(std::span<Letter const> w) const {
    if (w.empty()) {
      return std::string(empty_word_symbol);
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += w[i] < _names.size() ? _names[w[i]] : "?" + std::to_string(w[i]);
    }
    return out;
  }

  std::string Alphabet::format(Word const& w) const {
    return format(std::span<Letter const>(w));
  }

  Word invert(Alphabet const& A, Word const& w) {
    Word result(w.size());
    std::transform(
        w.rbegin(), w.rend(), result.begin(), [&A](Letter x) {
          return A.inverse(x);
        });
    return result;
  }

  Word free_reduce(Alphabet const& A, Word const& w) {
    Word stack;
    stack.reserve(w.size());
    for (Letter x : w) {
      if (!stack.empty() && stack.back() == A.inverse(x)) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return stack;
  }

  bool is_freely_reduced(Alphabet const& A, Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == A.inverse(w[i - 1])) {
        return false;
      }
    }
    return true;
  }

  std::strong_ordering shortlex_cmp(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() <=> v.size();
    }
    return std::lexicographical_compare_three_way(
        u.begin(), u.end(), v.begin(), v.end());
  }

  std::strong_ordering shortlex_cmp(Alphabet const& A,
                                    Word const&     u,
                                    Word const&     v) {
    A.validate(u);
    A.validate(v);
    return shortlex_cmp(u, v);
  }

  Word prefix(Word const& w, std::size_t t) {
    return Word(w.begin(), w.begin() + std::min(t, w.size()));
  }

  Word concat(Word const& u, Word const& v) {
    Word r;
    r.reserve(u.size() + v.size());
    r.insert(r.end(), u.begin(), u.end());
    r.insert(r.end(), v.begin(), v.end());
    return r;
  }

  Word concat(Word const& u, Word const& v, Word const& w) {
    Word r;
    r.reserve(u.size() + v.size() + w.size());
    r.insert(r.end(), u.begin(), u.end());
    r.insert(r.end(), v.begin(), v.end());
    r.insert(r.end(), w.begin(), w.end());
    return r;
  }

  Word power(Alphabet const& A, Word const& x, long n) {
    Word const  base = n < 0 ? invert(A, x) : x;
    std::size_t m    = static_cast<std::size_t>(n < 0 ? -n : n);
    Word        r;
    r.reserve(base.size() * m);
    for (std::size_t i = 0; i < m; ++i) {
      r.insert(r.end(), base.begin(), base.end());
    }
    return r;
  }

  Word substitute(Alphabet const&          source,
                  Alphabet const&          target,
                  Word const&              w,
                  std::vector<Word> const& images) {
    Word r;
    for (Letter x : w) {
      Word const& img = images.at(source.generator_of(x));
      if (source.is_positive(x)) {
        r.insert(r.end(), img.begin(), img.end());
      } else {
        for (auto it = img.rbegin(); it != img.rend(); ++it) {
          r.push_back(target.inverse(*it));
        }
      }
    }
    return r;
  }

  std::vector<Word> all_words(Alphabet const& A, std::size_t n) {
    std::vector<Word> layer = {Word{}};
    for (std::size_t len = 0; len < n; ++len) {
      std::vector<Word> next;
      next.reserve(layer.size() * A.size());
      for (auto const& w : layer) {
        for (Letter x = 0; x < A.size(); ++x) {
          Word v = w;
          v.push_back(x);
          next.push_back(std::move(v));
        }
      }
      layer = std::move(next);
    }
    return layer;
  }

  void for_each_word(Alphabet const&                         A,
                     std::size_t                             n,
                     std::function<void(Word const&)> const& f) {
    Word w;
    for (std::size_t len = 0; len <= n; ++len) {
      w.assign(len, 0);
      if (len != 0 && A.size() == 0) {
        return;
      }
      while (true) {
        f(w);
        // increment as a base-|A| counter
        std::size_t i = len;
        while (i > 0 && w[i - 1] + 1 == A.size()) {
          w[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
        ++w[i - 1];
      }
    }
  }

}  // namespace higgins
