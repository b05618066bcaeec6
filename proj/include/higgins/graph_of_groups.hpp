// Graphs of groups: a connected directed graph with an edge involution,
// a group per vertex, for each directed edge e a subgroup G_e of the group
// at its terminal vertex, and isomorphisms phi_e : G_e -> G_ebar given on
// generators.

#ifndef HIGGINS_GRAPH_OF_GROUPS_HPP_
#define HIGGINS_GRAPH_OF_GROUPS_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "higgins/backend.hpp"

namespace higgins {

  using VertexId = std::size_t;
  using EdgeId   = std::size_t;

  class DirectedGraph {
   public:
    VertexId add_vertex(std::string name);
    // Adds e and its reverse (named reverse_name, or name + "~"); returns e.
    // The reverse of edge id k is k ^ 1.
    EdgeId add_edge(std::string name,
                    VertexId    from,
                    VertexId    to,
                    std::string reverse_name = "");

    std::size_t num_vertices() const noexcept {
      return _vertex_names.size();
    }
    std::size_t num_edges() const noexcept {
      return _source.size();
    }
    VertexId source(EdgeId e) const {
      return _source[e];
    }
    VertexId target(EdgeId e) const {
      return _target[e];
    }
    static EdgeId reverse(EdgeId e) noexcept {
      return e ^ 1;
    }
    std::string const& vertex_name(VertexId v) const {
      return _vertex_names[v];
    }
    std::string const& edge_name(EdgeId e) const {
      return _edge_names[e];
    }
    std::optional<VertexId> find_vertex(std::string const& name) const;
    std::optional<EdgeId>   find_edge(std::string const& name) const;
    // Edges e with source(e) = v, by increasing id.
    std::vector<EdgeId> out_edges(VertexId v) const;
    bool                connected() const;

   private:
    std::vector<std::string> _vertex_names;
    std::vector<std::string> _edge_names;
    std::vector<VertexId>    _source, _target;
  };

  struct SpanningTree {
    VertexId              root = 0;
    std::vector<bool>     in_tree;      // per edge, closed under reverse
    std::vector<EdgeId>   parent_edge;  // tree edge parent -> v (unused at root)
    std::vector<VertexId> parent;
    std::vector<std::size_t> depth;

    bool contains(EdgeId e) const {
      return in_tree[e];
    }
    // Tree edges along the unique path from u to v.
    std::vector<EdgeId> path(VertexId u, VertexId v) const;
  };

  // Breadth-first tree from the vertex with the least name, exploring edges
  // in id order. Throws Error if the graph is disconnected.
  SpanningTree maximal_tree(DirectedGraph const& graph);
  // The tree formed by the named edges (and their reverses); throws unless
  // they form a spanning tree.
  SpanningTree tree_from_edges(DirectedGraph const&       graph,
                               std::vector<EdgeId> const& edges);

  class GraphOfGroups {
   public:
    explicit GraphOfGroups(DirectedGraph graph);

    DirectedGraph const& graph() const noexcept {
      return _graph;
    }
    void set_vertex_group(VertexId v, std::shared_ptr<GroupBackend const> G);
    // G_e inside the group at target(e), and the images of its generators
    // as words over the alphabet of the group at source(e).
    void set_edge(EdgeId                                 e,
                  std::shared_ptr<SubgroupContext const> subgroup,
                  std::vector<Word>                      iso);
    // Sets the reverse isomorphism from the forward one: directly when the
    // reverse subgroup generators are the forward images in order, otherwise
    // by searching words over the images up to max_length.
    void derive_reverse_iso(EdgeId e, std::size_t max_length = 12);

    GroupBackend const& vertex_group(VertexId v) const;
    std::shared_ptr<GroupBackend const> vertex_group_ptr(VertexId v) const {
      return _vertex[v];
    }
    SubgroupContext const& edge_group(EdgeId e) const;
    std::shared_ptr<SubgroupContext const> edge_group_ptr(EdgeId e) const {
      return _edge[e];
    }
    std::vector<Word> const& edge_iso(EdgeId e) const {
      return _iso[e];
    }
    bool has_iso(EdgeId e) const {
      return _iso_set[e];
    }
    // phi_e applied to a word over Y_e, as a word over X_{source(e)}.
    Word apply_iso(EdgeId e, Word const& y_word) const;

    // Every failed invariant, one message each; empty when valid.
    std::vector<std::string> validate() const;

   private:
    DirectedGraph                                       _graph;
    std::vector<std::shared_ptr<GroupBackend const>>    _vertex;
    std::vector<std::shared_ptr<SubgroupContext const>> _edge;
    std::vector<std::vector<Word>>                      _iso;
    std::vector<bool>                                   _iso_set;
  };

  // The alphabets of pi_1: the inflated alphabet (all vertex letters plus a
  // stable letter s_e per edge pair, with s_e^-1 standing for s_ebar) and
  // the deflated one (tree stable letters omitted). Vertex letters keep
  // their names unless two vertex alphabets share a name, in which case the
  // clashing names are qualified as "<vertex>.<name>".
  class Pi1Alphabets {
   public:
    Pi1Alphabets(GraphOfGroups const& gog, SpanningTree const& tree);

    Alphabet const& inflated() const noexcept {
      return _inflated;
    }
    Alphabet const& deflated() const noexcept {
      return _deflated;
    }

    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    // For an inflated letter: its vertex (or none for stable letters), its
    // letter in the vertex alphabet, or its edge.
    VertexId vertex_of(Letter x) const {
      return _vertex_of[x];
    }
    Letter local_letter(Letter x) const {
      return _local[x];
    }
    EdgeId edge_of(Letter x) const {
      return _edge_of[x];
    }
    Letter vertex_letter(VertexId v, Letter local) const {
      return _vertex_letters[v][local];
    }
    Letter stable_letter(EdgeId e) const {
      return _stable[e];
    }
    // Inflated <-> deflated (none for tree stable letters).
    Letter to_deflated(Letter x) const {
      return static_cast<Letter>(_to_deflated[x]);
    }
    bool is_tree_letter(Letter x) const {
      return _to_deflated[x] == none;
    }
    Letter to_inflated(Letter x) const {
      return _to_inflated[x];
    }

    // Word over the inflated alphabet for a word over the vertex alphabet.
    Word lift(VertexId v, Word const& local) const;

   private:
    Alphabet                         _inflated, _deflated;
    std::vector<VertexId>            _vertex_of;
    std::vector<Letter>              _local;
    std::vector<EdgeId>              _edge_of;
    std::vector<std::vector<Letter>> _vertex_letters;
    std::vector<Letter>              _stable;
    std::vector<std::size_t>         _to_deflated;
    std::vector<Letter>              _to_inflated;
  };

  // Remove the tree stable letters.
  Word deflate(Pi1Alphabets const& A, Word const& w);
  // Insert tree stable letters along tree paths so that consecutive letters
  // lie in adjacent positions of an edge path starting at start. Stable
  // letters s_f^-1 are read as s_fbar.
  Word inflate(Pi1Alphabets const& A,
               GraphOfGroups const& gog,
               SpanningTree const& tree,
               Word const&         w,
               VertexId            start);

}  // namespace higgins

#endif  // HIGGINS_GRAPH_OF_GROUPS_HPP_
