#include "higgins/finite_group.hpp"

#include <fstream>
#include <sstream>

#include "higgins/error.hpp"

namespace higgins {

  namespace {
    std::vector<Alphabet::Generator> make_generators(
        FiniteGroup::Table const&                               table,
        std::vector<std::pair<std::string, std::size_t>> const& gens) {
      std::vector<Alphabet::Generator> out;
      for (auto const& [name, e] : gens) {
        if (e >= table.size()) {
          throw Error("generator " + name + " names element "
                      + std::to_string(e) + " outside the table");
        }
        out.push_back({name, e != 0 && table[e][e] == 0});
      }
      return out;
    }

    void check_group(FiniteGroup::Table const& t) {
      std::size_t const n = t.size();
      if (n == 0) {
        throw Error("empty multiplication table");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (t[i].size() != n) {
          throw Error("multiplication table is not square (row "
                      + std::to_string(i) + ")");
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (t[i][j] >= n) {
            throw Error("table entry out of range at (" + std::to_string(i)
                        + "," + std::to_string(j) + ")");
          }
        }
        if (t[0][i] != i || t[i][0] != i) {
          throw Error("element 0 is not the identity");
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (std::size_t j = 0; j < n && !has_inverse; ++j) {
          has_inverse = t[i][j] == 0 && t[j][i] == 0;
        }
        if (!has_inverse) {
          throw Error("element " + std::to_string(i) + " has no inverse");
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            if (t[t[i][j]][k] != t[i][t[j][k]]) {
              throw Error("multiplication is not associative at ("
                          + std::to_string(i) + "," + std::to_string(j) + ","
                          + std::to_string(k) + ")");
            }
          }
        }
      }
    }
  }  // namespace

  FiniteGroup::FiniteGroup(
      Table                                            table,
      std::vector<std::pair<std::string, std::size_t>> generators)
      : _table(std::move(table)) {
    check_group(_table);
    _alphabet = Alphabet(make_generators(_table, generators));
    std::size_t const n = _table.size();
    // letter -> element
    for (Letter x = 0; x < _alphabet.size(); ++x) {
      std::size_t g = generators[_alphabet.generator_of(x)].second;
      if (!_alphabet.is_positive(x)) {
        std::size_t inv = 0;
        while (_table[g][inv] != 0) {
          ++inv;
        }
        g = inv;
      }
      _letter_element.push_back(g);
    }
    // breadth-first shortlex tree
    _words.assign(n, Word{});
    _reached.assign(n, false);
    _reached[0] = true;
    std::vector<std::size_t> queue = {0};
    Dfa D(symbol_names(_alphabet), n);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t e = queue[i];
      D.set_accepting(static_cast<State>(e));
      for (Letter x = 0; x < _alphabet.size(); ++x) {
        std::size_t f = _table[e][_letter_element[x]];
        if (!_reached[f]) {
          _reached[f] = true;
          _words[f]   = _words[e];
          _words[f].push_back(x);
          queue.push_back(f);
          D.set_transition(static_cast<State>(e), x, static_cast<State>(f));
        }
      }
    }
    D.set_start(0);
    D.set_name("canonical");
    _language = minimize(D);
  }

  FiniteGroup::Table FiniteGroup::parse_csv(std::string const& text) {
    Table              t;
    std::istringstream in(text);
    std::string        line;
    std::size_t        line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      std::vector<std::size_t> row;
      std::istringstream       ls(line);
      std::string              cell;
      while (std::getline(ls, cell, ',')) {
        try {
          std::size_t pos = 0;
          long        v   = std::stol(cell, &pos);
          if (v < 0 || cell.find_first_not_of(" \t\r", pos) != std::string::npos) {
            throw std::invalid_argument(cell);
          }
          row.push_back(static_cast<std::size_t>(v));
        } catch (std::logic_error const&) {
          throw ParseError("bad table entry \"" + cell + "\"", line_no);
        }
      }
      t.push_back(std::move(row));
    }
    return t;
  }

  FiniteGroup FiniteGroup::from_csv(
      std::string const&                               path,
      std::vector<std::pair<std::string, std::size_t>> generators) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open \"" + path + "\"");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return FiniteGroup(parse_csv(buf.str()), std::move(generators));
  }

  std::size_t FiniteGroup::element(Word const& w) const {
    std::size_t e = 0;
    for (Letter x : w) {
      if (x >= _alphabet.size()) {
        throw Error("letter index " + std::to_string(x)
                    + " is not in the alphabet");
      }
      e = _table[e][_letter_element[x]];
    }
    return e;
  }

  Word const& FiniteGroup::element_word(std::size_t e) const {
    if (e >= _words.size() || !_reached[e]) {
      throw Error("element " + std::to_string(e)
                  + " is not generated by the alphabet");
    }
    return _words[e];
  }

  Language FiniteGroup::canonical_language() const {
    return Language(_alphabet, _language);
  }

  std::string FiniteGroup::description() const {
    return "finite order=" + std::to_string(order());
  }

  FiniteSubgroup::FiniteSubgroup(std::shared_ptr<FiniteGroup const> parent,
                                 std::vector<Word>                  gens,
                                 std::vector<std::string>           names)
      : _parent(std::move(parent)), _gens(std::move(gens)) {
    if (names.empty()) {
      for (std::size_t j = 1; j <= _gens.size(); ++j) {
        names.push_back("y" + std::to_string(j));
      }
    }
    if (names.size() != _gens.size()) {
      throw Error("expected one name per subgroup generator");
    }
    _alphabet               = Alphabet::from_names(names);
    FiniteGroup const& G    = *_parent;
    std::size_t const  n    = G.order();
    // closure by orbit, recording shortest Y-words
    std::vector<std::size_t> y_elem;
    for (Letter y = 0; y < _alphabet.size(); ++y) {
      y_elem.push_back(G.element(evaluate(Word{y})));
    }
    _in_h.assign(n, false);
    _h_words.assign(n, Word{});
    _in_h[0]                       = true;
    std::vector<std::size_t> queue = {0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t e = queue[i];
      for (Letter y = 0; y < _alphabet.size(); ++y) {
        std::size_t f = G.multiply_elements(e, y_elem[y]);
        if (!_in_h[f]) {
          _in_h[f]    = true;
          _h_words[f] = _h_words[e];
          _h_words[f].push_back(y);
          queue.push_back(f);
        }
      }
    }
    _num_members = queue.size();
    // right cosets Hg, explored breadth-first from H
    std::size_t const none = static_cast<std::size_t>(-1);
    _coset_of.assign(n, none);
    auto label = [&](std::size_t g, std::size_t id) {
      for (std::size_t h = 0; h < n; ++h) {
        if (_in_h[h]) {
          _coset_of[G.multiply_elements(h, g)] = id;
        }
      }
    };
    std::vector<std::size_t> coset_elem = {0};
    _coset_words.push_back(Word{});
    label(0, 0);
    Alphabet const& X = G.alphabet();
    Dfa             D(symbol_names(X));
    D.add_state(true);
    for (std::size_t c = 0; c < coset_elem.size(); ++c) {
      for (Letter x = 0; x < X.size(); ++x) {
        std::size_t g = G.multiply_elements(coset_elem[c], G.letter_element(x));
        if (_coset_of[g] == none) {
          std::size_t id = coset_elem.size();
          label(g, id);
          coset_elem.push_back(g);
          Word w = _coset_words[c];
          w.push_back(x);
          _coset_words.push_back(std::move(w));
          D.add_state(true);
          D.set_transition(static_cast<State>(c), x, static_cast<State>(id));
        }
      }
    }
    D.set_start(0);
    D.set_name("coset");
    _language = minimize(D);
  }

  bool FiniteSubgroup::member(Word const& g) const {
    return _in_h[_parent->element(g)];
  }

  Word FiniteSubgroup::h_express(Word const& g) const {
    std::size_t e = _parent->element(g);
    if (!_in_h[e]) {
      throw Error("element is not in the subgroup");
    }
    return _h_words[e];
  }

  Word FiniteSubgroup::coset_rep(Word const& g) const {
    std::size_t c = _coset_of[_parent->element(g)];
    if (c >= _coset_words.size()) {
      throw Error("element is not generated by the alphabet");
    }
    return _coset_words[c];
  }

  Language FiniteSubgroup::coset_language() const {
    return Language(_parent->alphabet(), _language);
  }

  std::string FiniteSubgroup::description() const {
    return "finite subgroup order=" + std::to_string(_num_members)
           + " cosets=" + std::to_string(num_cosets());
  }

}  // namespace higgins
