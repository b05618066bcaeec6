// The trefoil group <x, y | x y x = y x y> (the braid group B_3) and its
// subgroup H = <x, d> with d = (x y x)^2 central.
//
// Elements are keyed by their image in SL(2, Z) under x -> [[1,1],[0,1]],
// y -> [[1,0],[-1,1]] together with the exponent sum; the pair is faithful
// because the kernel of the matrix map is <d^2> and d has exponent sum 6.
// H is the full preimage of the upper unitriangular matrices (up to sign),
// so the right coset Hg is determined by the second row of the matrix of g
// up to sign.

#ifndef HIGGINS_TREFOIL_HPP_
#define HIGGINS_TREFOIL_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "higgins/backend.hpp"
#include "higgins/coset_system.hpp"
#include "higgins/parallel.hpp"
#include "higgins/report.hpp"

namespace higgins {

  class TrefoilGroup final : public GroupBackend {
   public:
    struct Key {
      std::array<std::int64_t, 4> m;  // row major
      std::int64_t                exponent;

      auto operator<=>(Key const&) const = default;
    };

    TrefoilGroup();

    Alphabet const& alphabet() const override {
      return _alphabet;
    }
    // A normal form read off the key (not shortlex).
    Word canonical(Word const& w) const override {
      return word(key(w));
    }
    bool canonical_is_shortlex() const override {
      return false;
    }
    std::string description() const override {
      return "trefoil group <x, y | x y x = y x y>";
    }

    Key  key(Word const& w) const;
    Word word(Key const& k) const;
    // d = (x y x)^2
    Word central() const;

   private:
    Alphabet _alphabet;
  };

  class TrefoilSubgroup final : public SubgroupContext {
   public:
    explicit TrefoilSubgroup(std::shared_ptr<TrefoilGroup const> G);

    GroupBackend const& parent() const override {
      return *_group;
    }
    std::vector<Word> const& generators() const override {
      return _gens;
    }
    Alphabet const& subgroup_alphabet() const override {
      return _alphabet;
    }
    bool member(Word const& g) const override;
    // x^p d^q
    Word h_express(Word const& g) const override;
    // Shortlex least word of the coset, found breadth first.
    Word        coset_rep(Word const& g) const override;
    Language    coset_language() const override;
    std::string description() const override {
      return "H = <x, d> in the trefoil group";
    }

    using CosetKey = std::pair<std::int64_t, std::int64_t>;
    CosetKey coset_key(Word const& g) const;

   private:
    void extend() const;  // caller holds the unique lock

    std::shared_ptr<TrefoilGroup const> _group;
    std::vector<Word>                   _gens;
    Alphabet                            _alphabet;

    mutable std::shared_mutex           _mtx;
    mutable std::map<CosetKey, Word>    _reps;
    mutable std::vector<std::vector<Word>> _layers;
  };

  // Limited crossover of the shortlex coset language of H for
  // lambda = 1 .. lambda_max with Y = Z = {x, d}. One row per lambda; the
  // extra field min_lambda is the least lambda without witnesses, or none.
  Report trefoil_crossover_experiment(std::size_t radius,
                                      std::size_t lambda_max,
                                      Execution   exec = Execution::serial());

}  // namespace higgins

#endif  // HIGGINS_TREFOIL_HPP_
