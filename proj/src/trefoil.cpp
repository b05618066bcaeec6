#include "higgins/trefoil.hpp"

#include <cstdlib>
#include <mutex>

#include "higgins/error.hpp"

namespace higgins {

  namespace {
    using Matrix = std::array<std::int64_t, 4>;

    Matrix times(Matrix const& p, Matrix const& q) {
      return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
              p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]};
    }

    // x, x^-1, y, y^-1
    Matrix const letter_matrix[4] = {
        {1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, -1, 1}, {1, 0, 1, 1}};

    void append_power(Word& w, Letter positive, std::int64_t n) {
      for (std::int64_t i = 0; i < std::abs(n); ++i) {
        w.push_back(n > 0 ? positive : positive + 1);
      }
    }
  }  // namespace

  TrefoilGroup::TrefoilGroup() : _alphabet(Alphabet::from_names({"x", "y"})) {}

  TrefoilGroup::Key TrefoilGroup::key(Word const& w) const {
    Key k{{1, 0, 0, 1}, 0};
    for (Letter x : w) {
      if (x >= 4) {
        throw Error("letter outside the trefoil alphabet");
      }
      k.m = times(k.m, letter_matrix[x]);
      k.exponent += (x % 2 == 0) ? 1 : -1;
    }
    return k;
  }

  Word TrefoilGroup::central() const {
    return {0, 2, 0, 0, 2, 0};
  }

  Word TrefoilGroup::word(Key const& k) const {
    auto [a, b, c, d] = k.m;
    Word w;
    // Reduce the first column to (+-1, 0) by row operations, recording the
    // inverse of each one.
    while (c != 0) {
      if (a != 0 && std::abs(c) >= std::abs(a)) {
        std::int64_t m = c / a;  // L^m: row2 -= m row1
        c -= m * a;
        d -= m * b;
        append_power(w, 2, -m);
      } else if (a == 0) {
        a += c;  // T: row1 += row2
        b += d;
        append_power(w, 0, -1);
      } else {
        std::int64_t q = a / c;  // T^-q: row1 -= q row2
        a -= q * c;
        b -= q * d;
        append_power(w, 0, q);
      }
    }
    // now [[s, b], [0, s]] = s T^{s b}
    std::int64_t s = a;
    if (s < 0) {
      Word D = central();
      w.insert(w.end(), D.begin(), D.end());
    }
    append_power(w, 0, s * b);
    std::int64_t diff = k.exponent - key(w).exponent;
    if (diff % 12 != 0) {
      throw Error("inconsistent trefoil key");
    }
    Word D2 = concat(central(), central());
    Word step = diff > 0 ? D2 : invert(_alphabet, D2);
    for (std::int64_t i = 0; i < std::abs(diff) / 12; ++i) {
      w.insert(w.end(), step.begin(), step.end());
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // H = <x, d>
  ////////////////////////////////////////////////////////////////////////

  TrefoilSubgroup::TrefoilSubgroup(std::shared_ptr<TrefoilGroup const> G)
      : _group(std::move(G)),
        _gens{Word{0}, _group->central()},
        _alphabet(Alphabet::from_names({"x", "d"})) {
    _reps.emplace(coset_key(Word{}), Word{});
    _layers.push_back({Word{}});
  }

  TrefoilSubgroup::CosetKey TrefoilSubgroup::coset_key(Word const& g) const {
    auto         k = _group->key(g);
    std::int64_t c = k.m[2], d = k.m[3];
    if (c < 0 || (c == 0 && d < 0)) {
      c = -c;
      d = -d;
    }
    return {c, d};
  }

  bool TrefoilSubgroup::member(Word const& g) const {
    return _group->key(g).m[2] == 0;
  }

  Word TrefoilSubgroup::h_express(Word const& g) const {
    auto k = _group->key(g);
    if (k.m[2] != 0) {
      throw Error("element is not in H = <x, d>");
    }
    std::int64_t p = k.m[0] * k.m[1];
    std::int64_t q = (k.exponent - p) / 6;
    Word         h;
    append_power(h, 0, p);
    append_power(h, 2, q);
    return h;
  }

  void TrefoilSubgroup::extend() const {
    Alphabet const&   X = _group->alphabet();
    std::vector<Word> next;
    for (auto const& r : _layers.back()) {
      for (Letter x = 0; x < X.size(); ++x) {
        Word w = concat(r, Word{x});
        if (_reps.emplace(coset_key(w), w).second) {
          next.push_back(std::move(w));
        }
      }
    }
    _layers.push_back(std::move(next));
  }

  Word TrefoilSubgroup::coset_rep(Word const& g) const {
    CosetKey key = coset_key(g);
    {
      std::shared_lock lock(_mtx);
      auto             it = _reps.find(key);
      if (it != _reps.end()) {
        return it->second;
      }
    }
    std::unique_lock lock(_mtx);
    // the coset of g has a representative of length at most |g|
    while (_layers.size() <= g.size() + 1) {
      auto it = _reps.find(key);
      if (it != _reps.end()) {
        return it->second;
      }
      extend();
    }
    auto it = _reps.find(key);
    if (it == _reps.end()) {
      throw Error("coset representative search exhausted");
    }
    return it->second;
  }

  Language TrefoilSubgroup::coset_language() const {
    auto enumerate = [this](std::size_t n) {
      std::unique_lock lock(_mtx);
      while (_layers.size() <= n) {
        extend();
      }
      std::vector<Word> out;
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<Word> layer = _layers[i];
        std::sort(layer.begin(), layer.end(), ShortlexLess{});
        out.insert(out.end(), layer.begin(), layer.end());
      }
      return out;
    };
    return Language(
        _group->alphabet(), [this](Word const& w) { return coset_rep(w) == w; },
        enumerate, true);
  }

  ////////////////////////////////////////////////////////////////////////
  // Experiment
  ////////////////////////////////////////////////////////////////////////

  Report trefoil_crossover_experiment(std::size_t radius,
                                      std::size_t lambda_max,
                                      Execution   exec) {
    auto G   = std::make_shared<TrefoilGroup>();
    auto H   = std::make_shared<TrefoilSubgroup>(G);
    auto sys = make_coset_system(H, Mode::asynchronous);
    std::vector<Word> Y = H->generators();

    Report rep;
    rep.property = "trefoil-crossover";
    rep.param("lambda_max", std::to_string(lambda_max));
    rep.param("Y", format_words(G->alphabet(), Y));
    rep.param("Z", format_words(G->alphabet(), Y));
    rep.param("representatives", "shortlex");
    rep.radius = radius;

    std::optional<std::size_t> least;
    for (std::size_t lambda = 1; lambda <= lambda_max; ++lambda) {
      Report      r = check_limited_crossover(sys, Y, Y, lambda, radius, exec);
      std::size_t worst = 0;
      for (auto const& w : r.witnesses) {
        auto pos = w.find("excess=");
        worst    = std::max<std::size_t>(worst, std::stoul(w.substr(pos + 7)));
      }
      std::string row = "lambda=" + std::to_string(lambda)
                        + " witnesses=" + std::to_string(r.violations)
                        + " max_excess=" + std::to_string(worst)
                        + " status=" + (r.pass() ? "pass" : "fail");
      if (lambda >= radius) {
        row += " saturated";
      }
      rep.rows.push_back(row);
      if (r.pass()) {
        least = least ? least : lambda;
      } else {
        rep.add_witness("lambda=" + std::to_string(lambda) + " "
                        + r.witnesses.front());
      }
    }
    rep.set("min_lambda", least ? std::to_string(*least) : "none");
    if (radius == 0) {
      rep.inconclusive = true;
      rep.comments.push_back("radius 0 meets no coset pairs: inconclusive");
    }
    if (!least) {
      rep.comments.push_back("no lambda <= " + std::to_string(lambda_max)
                             + " certified at radius " + std::to_string(radius));
    }
    return rep;
  }

}  // namespace higgins
