// Uniform oracle interfaces for vertex groups and their subgroups.
//
// A GroupBackend solves the word problem over its alphabet through a
// canonical form. A SubgroupContext adds the coset decomposition
// g = h * coset_rep(g) with h expressed over the subgroup generators Y.
// Implementations must be reentrant: certifier sweeps call them from
// several threads at once.

#ifndef HIGGINS_BACKEND_HPP_
#define HIGGINS_BACKEND_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "higgins/language.hpp"
#include "higgins/word.hpp"

namespace higgins {

  class GroupBackend {
   public:
    virtual ~GroupBackend() = default;

    virtual Alphabet const& alphabet() const = 0;
    // Unique representative of the element w; constant on =_G classes.
    virtual Word canonical(Word const& w) const = 0;
    // True when canonical(w) is the shortlex least word for w (and hence
    // geodesic).
    virtual bool canonical_is_shortlex() const {
      return true;
    }
    virtual std::size_t geodesic_length(Word const& w) const;
    // Canonical words of all elements at distance <= r from 1, ordered by
    // distance and then shortlex on the canonical word.
    virtual std::vector<Word> ball(std::size_t r) const;
    // The set of canonical words.
    virtual Language canonical_language() const;
    virtual std::string description() const = 0;

    bool equal(Word const& u, Word const& v) const {
      return canonical(u) == canonical(v);
    }
    bool is_identity(Word const& w) const {
      return canonical(w).empty();
    }
    Word multiply(Word const& u, Word const& v) const {
      return canonical(concat(u, v));
    }
    Word inverse(Word const& w) const {
      return canonical(invert(alphabet(), w));
    }
  };

  class SubgroupContext {
   public:
    virtual ~SubgroupContext() = default;

    virtual GroupBackend const& parent() const = 0;
    // Y as words over the parent alphabet, one per generator of
    // subgroup_alphabet().
    virtual std::vector<Word> const& generators() const = 0;
    // Y^{\pm} with the declared generator names.
    virtual Alphabet const& subgroup_alphabet() const = 0;

    virtual bool member(Word const& g) const = 0;
    // A word over Y^{\pm} evaluating to g; throws Error when g is not in H.
    virtual Word h_express(Word const& g) const = 0;
    // Representative of the right coset Hg in the coset language; the
    // identity coset is represented by the empty word.
    virtual Word coset_rep(Word const& g) const = 0;
    virtual Language coset_language() const = 0;
    // Least length of a word in Hg. The default assumes coset_rep returns
    // a minimal-length representative.
    virtual std::size_t min_coset_length(Word const& g) const {
      return coset_rep(g).size();
    }
    virtual std::string description() const = 0;

    // Evaluate a word over Y^{\pm} as a word over the parent alphabet.
    Word evaluate(Word const& y_word) const {
      return substitute(subgroup_alphabet(), parent().alphabet(), y_word,
                        generators());
    }
    // Both words lie in the same right coset of H.
    bool same_coset(Word const& u, Word const& v) const {
      return member(concat(u, invert(parent().alphabet(), v)));
    }
  };

  // The subgroup {1}: coset representatives are canonical forms.
  class TrivialSubgroup final : public SubgroupContext {
   public:
    explicit TrivialSubgroup(std::shared_ptr<GroupBackend const> parent);

    GroupBackend const& parent() const override {
      return *_parent;
    }
    std::vector<Word> const& generators() const override {
      return _gens;
    }
    Alphabet const& subgroup_alphabet() const override {
      return _alphabet;
    }
    bool member(Word const& g) const override {
      return _parent->is_identity(g);
    }
    Word        h_express(Word const& g) const override;
    Word        coset_rep(Word const& g) const override {
      return _parent->canonical(g);
    }
    Language    coset_language() const override {
      return _parent->canonical_language();
    }
    std::size_t min_coset_length(Word const& g) const override {
      return _parent->geodesic_length(g);
    }
    std::string description() const override {
      return "trivial subgroup";
    }

   private:
    std::shared_ptr<GroupBackend const> _parent;
    std::vector<Word>                   _gens;
    Alphabet                            _alphabet;
  };

  // Breadth-first shortest word over Y^{\pm} for g in H, exploring at most
  // max_length; returns false when not found. Keys by parent canonical form.
  bool bfs_express(SubgroupContext const& ctx,
                   Word const&            g,
                   std::size_t            max_length,
                   Word&                  out);

}  // namespace higgins

#endif  // HIGGINS_BACKEND_HPP_
