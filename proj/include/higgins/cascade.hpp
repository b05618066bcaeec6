// Normal forms for the fundamental group of a graph of groups.
//
// Words are handled in their inflated, alternating shape
//   u_0 s_{e_1} u_1 ... s_{e_k} u_k
// with u_i over the vertex alphabet at the end of e_i. The cascade rewrites
// the u_i right to left into coset representatives, pushing the subgroup
// part of each through the edge isomorphism into the segment on its left.

#ifndef HIGGINS_CASCADE_HPP_
#define HIGGINS_CASCADE_HPP_

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "higgins/backend.hpp"
#include "higgins/graph_of_groups.hpp"

namespace higgins {

  struct Segment {
    EdgeId edge;
    Word   word;  // over the alphabet of the group at target(edge)

    bool operator==(Segment const&) const = default;
  };

  struct InflatedWord {
    VertexId             base = 0;
    Word                 base_word;  // over the alphabet at base
    std::vector<Segment> path;

    bool operator==(InflatedWord const&) const = default;
  };

  struct CascadeStep {
    std::size_t           index;  // 0 for the base segment
    std::optional<EdgeId> edge;   // e_i; none for the base segment
    Word        h;      // over Y_{e_i} (over the coset subgroup at i = 0)
    Word        h_image;  // phi_{e_i}(h), over the alphabet at source(e_i)
    Word        output;   // the new u_i
  };

  struct CascadeTrace {
    std::vector<CascadeStep> steps;  // in the order performed
    std::size_t              pinches = 0;
  };

  // Either the whole group (base vertex) or the cosets of G_e inside it,
  // based at target(e).
  struct Pi1Base {
    VertexId              vertex = 0;
    std::optional<EdgeId> coset_edge;
  };

  class Pi1 {
   public:
    explicit Pi1(std::shared_ptr<GraphOfGroups const> gog,
                 std::optional<SpanningTree>          tree = std::nullopt);

    GraphOfGroups const& gog() const noexcept {
      return *_gog;
    }
    SpanningTree const& tree() const noexcept {
      return _tree;
    }
    Pi1Alphabets const& alphabets() const noexcept {
      return _alphabets;
    }
    Alphabet const& alphabet() const noexcept {
      return _alphabets.deflated();
    }
    Pi1Base group_base(VertexId v) const {
      return {v, std::nullopt};
    }
    Pi1Base coset_base(EdgeId e) const {
      return {gog().graph().target(e), e};
    }

    // Split an inflated word; throws Error if its stable letters do not
    // trace an edge path from start.
    InflatedWord parse_alternating(Word const& inflated, VertexId start) const;
    Word         join(InflatedWord const& w) const;
    InflatedWord split(Word const& deflated, VertexId start) const;
    Word         deflated(InflatedWord const& w) const;

    // Remove every backtrack s_e u s_ebar with u in G_e; returns the number
    // removed.
    std::size_t pinch_reduce(InflatedWord& w) const;
    // One right-to-left pass.
    // Returns the subgroup part split off the base segment in coset mode.
    Word cascade(InflatedWord& w, Pi1Base const& base, CascadeTrace* trace) const;
    // Alternate pinching and cascading until neither changes anything. In
    // coset mode coset_h receives the accumulated subgroup part.
    InflatedWord reduce(InflatedWord   w,
                        Pi1Base const& base,
                        CascadeTrace*  trace,
                        Word*          coset_h = nullptr) const;

    // Normal forms over the deflated alphabet.
    Word normal_form(Word const& w, VertexId base) const;
    // The representative of G_e w; h receives the subgroup part as a word
    // over Y_e, so that w = h * result.
    Word coset_normal_form(Word const& w, EdgeId e, Word* h = nullptr) const;

    bool is_higgins(Word const& deflated, Pi1Base const& base) const;
    // Deterministic automaton for the Higgins words at base; throws Error
    // unless every component language has a DFA. Assumes each coset
    // language meets its subgroup only in the empty word.
    Dfa higgins_automaton(Pi1Base const& base) const;
    Language higgins_language(Pi1Base const& base) const;

    // One line per step: "i=<k> h=<word> h'=<word> u'=<word>".
    std::string format_trace(CascadeTrace const& trace, Pi1Base const& base) const;

   private:
    Language const& component_language(Pi1Base const& base) const;

    std::shared_ptr<GraphOfGroups const> _gog;
    SpanningTree                         _tree;
    Pi1Alphabets                         _alphabets;
    std::vector<Language>                _vertex_languages;
    std::vector<Language>                _edge_languages;
  };

  bool pi1_word_problem(Pi1 const& pi, VertexId base, Word const& u, Word const& v);

  class Pi1Backend final : public GroupBackend {
   public:
    Pi1Backend(std::shared_ptr<Pi1 const> pi, VertexId base);

    Alphabet const& alphabet() const override {
      return _pi->alphabet();
    }
    Word canonical(Word const& w) const override {
      return _pi->normal_form(w, _base);
    }
    bool canonical_is_shortlex() const override {
      return false;
    }
    Language    canonical_language() const override;
    std::string description() const override;

    Pi1 const& pi1() const noexcept {
      return *_pi;
    }
    VertexId base() const noexcept {
      return _base;
    }

   private:
    std::shared_ptr<Pi1 const> _pi;
    VertexId                   _base;
  };

  // The edge subgroup G_e as a subgroup of pi_1 based at target(e).
  class Pi1CosetContext final : public SubgroupContext {
   public:
    Pi1CosetContext(std::shared_ptr<Pi1 const> pi, EdgeId e);

    GroupBackend const& parent() const override {
      return *_parent;
    }
    std::vector<Word> const& generators() const override {
      return _gens;
    }
    Alphabet const& subgroup_alphabet() const override {
      return _pi->gog().edge_group(_edge).subgroup_alphabet();
    }
    bool member(Word const& g) const override {
      return _pi->coset_normal_form(g, _edge).empty();
    }
    Word h_express(Word const& g) const override;
    Word coset_rep(Word const& g) const override {
      return _pi->coset_normal_form(g, _edge);
    }
    Language    coset_language() const override;
    // Breadth-first over the coset graph; memoized.
    std::size_t min_coset_length(Word const& g) const override;
    std::string description() const override;

    std::shared_ptr<Pi1Backend const> parent_ptr() const {
      return _parent;
    }
    EdgeId edge() const noexcept {
      return _edge;
    }

   private:
    std::shared_ptr<Pi1 const>        _pi;
    std::shared_ptr<Pi1Backend const> _parent;
    EdgeId                            _edge;
    std::vector<Word>                 _gens;

    mutable std::mutex                                      _mutex;
    mutable std::unordered_map<Word, std::size_t, WordHash> _distance;
    mutable std::vector<Word>                               _frontier;
    mutable std::size_t                                     _depth = 0;
  };

}  // namespace higgins

#endif  // HIGGINS_CASCADE_HPP_
