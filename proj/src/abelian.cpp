#include "higgins/abelian.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>

#include "higgins/error.hpp"

namespace higgins {

  namespace {
    constexpr std::size_t factor_search_cap = 40;

    std::vector<std::string> default_names(std::string const& stem,
                                           std::size_t        n) {
      std::vector<std::string> out;
      for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(stem + std::to_string(i));
      }
      return out;
    }

    std::int64_t mod(std::int64_t a, std::int64_t d) {
      std::int64_t r = a % d;
      return r < 0 ? r + d : r;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // AbelianGroup
  ////////////////////////////////////////////////////////////////////////

  AbelianGroup::AbelianGroup(std::size_t                      rank,
                             std::vector<std::int64_t> const& torsion,
                             std::vector<std::string>         names)
      : _rank(rank), _torsion(torsion) {
    for (auto d : torsion) {
      if (d < 2) {
        throw Error("torsion modulus " + std::to_string(d) + " is less than 2");
      }
    }
    if (names.empty()) {
      names = default_names("x", num_factors());
    }
    if (names.size() != num_factors()) {
      throw Error("expected " + std::to_string(num_factors())
                  + " generator names for the abelian group");
    }
    _alphabet = Alphabet::from_names(names);

    // x1^{r1} ... xn^{rn}: one block per generator, in order; blocks of
    // torsion generators have bounded length.
    std::size_t const        n = num_factors();
    Dfa                      D(symbol_names(_alphabet));
    State                    start = D.add_state(true);
    // entry[i][sign] = first state of block i with that sign
    std::vector<std::array<State, 2>> entry(n, {no_state, no_state});
    std::vector<std::size_t>          block_of;  // state -> generator
    block_of.push_back(n);                       // start state
    for (std::size_t i = 0; i < n; ++i) {
      for (int sign = 0; sign < 2; ++sign) {
        Letter x = _alphabet.generator_letter(i) + sign;
        if (i < rank) {
          State s = D.add_state(true);
          block_of.push_back(i);
          D.set_transition(s, x, s);
          entry[i][sign] = s;
        } else {
          std::int64_t d   = _torsion[i - rank];
          std::int64_t len = sign == 0 ? d / 2 : (d - 1) / 2;
          State        prev = no_state;
          for (std::int64_t k = 0; k < len; ++k) {
            State s = D.add_state(true);
            block_of.push_back(i);
            if (prev == no_state) {
              entry[i][sign] = s;
            } else {
              D.set_transition(prev, x, s);
            }
            prev = s;
          }
        }
      }
    }
    for (State s = 0; s < static_cast<State>(D.num_states()); ++s) {
      std::size_t first = s == start ? 0 : block_of[s] + 1;
      for (std::size_t j = first; j < n; ++j) {
        for (int sign = 0; sign < 2; ++sign) {
          if (entry[j][sign] != no_state) {
            D.set_transition(
                s, _alphabet.generator_letter(j) + sign, entry[j][sign]);
          }
        }
      }
    }
    D.set_start(start);
    D.set_name("canonical");
    _language = minimize(D);
  }

  IntVector AbelianGroup::exponents(Word const& w) const {
    IntVector v(num_factors(), 0);
    for (Letter x : w) {
      if (x >= _alphabet.size()) {
        throw Error("letter index " + std::to_string(x)
                    + " is not in the alphabet");
      }
      v[_alphabet.generator_of(x)] += _alphabet.is_positive(x) ? 1 : -1;
    }
    return normalize(std::move(v));
  }

  IntVector AbelianGroup::normalize(IntVector v) const {
    for (std::size_t i = 0; i < _torsion.size(); ++i) {
      v[_rank + i] = mod(v[_rank + i], _torsion[i]);
    }
    return v;
  }

  std::int64_t AbelianGroup::signed_exponent(std::size_t i, std::int64_t r) const {
    if (i < _rank) {
      return r;
    }
    std::int64_t d = _torsion[i - _rank];
    r              = mod(r, d);
    return 2 * r > d ? r - d : r;
  }

  Word AbelianGroup::word(IntVector const& v) const {
    Word w;
    for (std::size_t i = 0; i < num_factors(); ++i) {
      std::int64_t r = signed_exponent(i, v[i]);
      Letter       x = _alphabet.generator_letter(i) + (r < 0 ? 1 : 0);
      w.insert(w.end(), static_cast<std::size_t>(r < 0 ? -r : r), x);
    }
    return w;
  }

  Word AbelianGroup::canonical(Word const& w) const {
    return word(exponents(w));
  }

  std::size_t AbelianGroup::geodesic_length(Word const& w) const {
    IntVector   v   = exponents(w);
    std::size_t len = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::int64_t r = signed_exponent(i, v[i]);
      len += static_cast<std::size_t>(r < 0 ? -r : r);
    }
    return len;
  }

  Language AbelianGroup::canonical_language() const {
    return Language(_alphabet, _language);
  }

  std::string AbelianGroup::description() const {
    std::ostringstream out;
    out << "abelian rank=" << _rank << " torsion=";
    for (std::size_t i = 0; i < _torsion.size(); ++i) {
      out << (i ? "," : "") << _torsion[i];
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // AbelianSubgroup
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<IntVector> lattice_rows(AbelianGroup const&      G,
                                        std::vector<Word> const& gens) {
      std::vector<IntVector> rows;
      for (auto const& g : gens) {
        rows.push_back(G.exponents(g));
      }
      for (std::size_t i = 0; i < G.torsion().size(); ++i) {
        IntVector t(G.num_factors(), 0);
        t[G.rank() + i] = G.torsion()[i];
        rows.push_back(std::move(t));
      }
      return rows;
    }
  }  // namespace

  AbelianSubgroup::AbelianSubgroup(std::shared_ptr<AbelianGroup const> parent,
                                   std::vector<Word>                   gens,
                                   std::vector<std::string>            names)
      : _parent(std::move(parent)),
        _gens(std::move(gens)),
        _lattice(_parent->num_factors(), lattice_rows(*_parent, _gens)) {
    if (names.empty()) {
      names = default_names("y", _gens.size());
    }
    if (names.size() != _gens.size()) {
      throw Error("expected one name per subgroup generator");
    }
    _alphabet = Alphabet::from_names(names);
    _reps.emplace(key_of_vector(IntVector(_parent->num_factors(), 0)), Word{});
    _layers.push_back({Word{}});
  }

  IntVector AbelianSubgroup::key_of_vector(IntVector const& v) const {
    return _lattice.reduce(v);
  }

  IntVector AbelianSubgroup::coset_key(Word const& g) const {
    return key_of_vector(_parent->exponents(g));
  }

  bool AbelianSubgroup::member(Word const& g) const {
    return _lattice.contains(_parent->exponents(g));
  }

  Word AbelianSubgroup::h_express(Word const& g) const {
    IntVector c;
    IntVector r = _lattice.reduce(_parent->exponents(g), &c);
    if (std::any_of(r.begin(), r.end(), [](auto x) { return x != 0; })) {
      throw Error("element is not in the subgroup");
    }
    Word h;
    for (std::size_t j = 0; j < _gens.size(); ++j) {
      Letter y = _alphabet.generator_letter(j) + (c[j] < 0 ? 1 : 0);
      h.insert(h.end(), static_cast<std::size_t>(c[j] < 0 ? -c[j] : c[j]), y);
    }
    return h;
  }

  void AbelianSubgroup::extend_layer() const {
    std::vector<Word> next;
    for (auto const& p : _layers.back()) {
      for (Letter x = 0; x < _parent->alphabet().size(); ++x) {
        Word w = p;
        w.push_back(x);
        if (_reps.emplace(coset_key(w), w).second) {
          next.push_back(std::move(w));
        }
      }
    }
    _layers.push_back(std::move(next));
  }

  Word AbelianSubgroup::coset_rep(Word const& g) const {
    IntVector key = coset_key(g);
    {
      std::shared_lock lock(_mtx);
      auto             it = _reps.find(key);
      if (it != _reps.end()) {
        return it->second;
      }
    }
    std::unique_lock lock(_mtx);
    while (true) {
      auto it = _reps.find(key);
      if (it != _reps.end()) {
        return it->second;
      }
      if (_layers.back().empty()) {
        throw Error("coset enumeration exhausted without finding the coset");
      }
      extend_layer();
    }
  }

  void AbelianSubgroup::build_language() const {
    std::unique_lock  lock(_mtx);
    Alphabet const&   X = _parent->alphabet();
    auto              is_rep = [this](Word const& w) {
      auto it = _reps.find(coset_key(w));
      // every word of length <= the enumerated depth has its coset listed
      return it != _reps.end() && it->second == w;
    };
    std::vector<Word> forbidden;
    std::size_t       longest = 0;
    std::size_t       len     = 1;
    while (true) {
      while (_layers.size() <= len && !_layers.back().empty()) {
        extend_layer();
      }
      if (_layers.size() <= len) {
        _layers.emplace_back();
      }
      std::vector<Word> const& prev = _layers[len - 1];
      for (auto const& p : prev) {
        for (Letter x = 0; x < X.size(); ++x) {
          Word w = p;
          w.push_back(x);
          if (is_rep(w)) {
            continue;
          }
          if (is_rep(Word(w.begin() + 1, w.end()))) {
            forbidden.push_back(std::move(w));
            longest = len;
          }
        }
      }
      std::size_t bound = std::max<std::size_t>(6, 2 * longest + 4);
      if (prev.empty() || len >= std::min(bound, factor_search_cap)) {
        break;
      }
      ++len;
    }
    _longest_factor = longest;
    _search_bound   = len;
    Dfa D           = avoiding_dfa(symbol_names(X), forbidden);
    D.set_name("coset");
    _language = std::make_shared<Dfa>(std::move(D));
  }

  Language AbelianSubgroup::coset_language() const {
    std::call_once(_language_once, [this] { build_language(); });
    return Language(_parent->alphabet(), *_language);
  }

  std::size_t AbelianSubgroup::forbidden_factor_length() const {
    coset_language();
    return _longest_factor;
  }

  std::size_t AbelianSubgroup::factor_search_bound() const {
    coset_language();
    return _search_bound;
  }

  std::string AbelianSubgroup::description() const {
    std::ostringstream out;
    out << "abelian subgroup generators=";
    for (std::size_t j = 0; j < _gens.size(); ++j) {
      out << (j ? ";" : "") << _parent->alphabet().format(_gens[j]);
    }
    return out.str();
  }

}  // namespace higgins
