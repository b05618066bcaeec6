#include "higgins/graph_of_groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "higgins/error.hpp"

namespace higgins {

  ////////////////////////////////////////////////////////////////////////
  // DirectedGraph
  ////////////////////////////////////////////////////////////////////////

  VertexId DirectedGraph::add_vertex(std::string name) {
    if (find_vertex(name)) {
      throw Error("duplicate vertex " + name);
    }
    _vertex_names.push_back(std::move(name));
    return _vertex_names.size() - 1;
  }

  EdgeId DirectedGraph::add_edge(std::string name,
                                 VertexId    from,
                                 VertexId    to,
                                 std::string reverse_name) {
    if (from >= num_vertices() || to >= num_vertices()) {
      throw Error("edge " + name + " has an unknown endpoint");
    }
    if (reverse_name.empty()) {
      reverse_name = name + "~";
    }
    if (name == reverse_name || find_edge(name) || find_edge(reverse_name)) {
      throw Error("duplicate edge " + name);
    }
    EdgeId e = _source.size();
    _edge_names.push_back(std::move(name));
    _edge_names.push_back(std::move(reverse_name));
    _source.push_back(from);
    _target.push_back(to);
    _source.push_back(to);
    _target.push_back(from);
    return e;
  }

  std::optional<VertexId> DirectedGraph::find_vertex(std::string const& name) const {
    auto it = std::find(_vertex_names.begin(), _vertex_names.end(), name);
    if (it == _vertex_names.end()) {
      return std::nullopt;
    }
    return it - _vertex_names.begin();
  }

  std::optional<EdgeId> DirectedGraph::find_edge(std::string const& name) const {
    auto it = std::find(_edge_names.begin(), _edge_names.end(), name);
    if (it == _edge_names.end()) {
      return std::nullopt;
    }
    return it - _edge_names.begin();
  }

  std::vector<EdgeId> DirectedGraph::out_edges(VertexId v) const {
    std::vector<EdgeId> result;
    for (EdgeId e = 0; e < num_edges(); ++e) {
      if (_source[e] == v) {
        result.push_back(e);
      }
    }
    return result;
  }

  bool DirectedGraph::connected() const {
    if (num_vertices() == 0) {
      return false;
    }
    std::vector<bool>     seen(num_vertices(), false);
    std::vector<VertexId> stack = {0};
    seen[0]                     = true;
    std::size_t count           = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : out_edges(v)) {
        if (!seen[_target[e]]) {
          seen[_target[e]] = true;
          ++count;
          stack.push_back(_target[e]);
        }
      }
    }
    return count == num_vertices();
  }

  ////////////////////////////////////////////////////////////////////////
  // Spanning trees
  ////////////////////////////////////////////////////////////////////////

  std::vector<EdgeId> SpanningTree::path(VertexId u, VertexId v) const {
    std::vector<EdgeId> up, down;
    while (depth[u] > depth[v]) {
      up.push_back(DirectedGraph::reverse(parent_edge[u]));
      u = parent[u];
    }
    while (depth[v] > depth[u]) {
      down.push_back(parent_edge[v]);
      v = parent[v];
    }
    while (u != v) {
      up.push_back(DirectedGraph::reverse(parent_edge[u]));
      u = parent[u];
      down.push_back(parent_edge[v]);
      v = parent[v];
    }
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
  }

  namespace {
    SpanningTree grow_tree(DirectedGraph const&     graph,
                           VertexId                 root,
                           std::vector<bool> const* allowed) {
      std::size_t  n = graph.num_vertices();
      SpanningTree T;
      T.root = root;
      T.in_tree.assign(graph.num_edges(), false);
      T.parent_edge.assign(n, 0);
      T.parent.assign(n, root);
      T.depth.assign(n, 0);
      std::vector<bool>    seen(n, false);
      std::deque<VertexId> queue = {root};
      seen[root]                 = true;
      std::size_t count          = 1;
      while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (EdgeId e : graph.out_edges(v)) {
          if (allowed != nullptr && !(*allowed)[e]) {
            continue;
          }
          VertexId w = graph.target(e);
          if (seen[w]) {
            continue;
          }
          seen[w]          = true;
          ++count;
          T.parent_edge[w] = e;
          T.parent[w]      = v;
          T.depth[w]       = T.depth[v] + 1;
          T.in_tree[e] = T.in_tree[DirectedGraph::reverse(e)] = true;
          queue.push_back(w);
        }
      }
      if (count != n) {
        throw Error("graph is not connected");
      }
      return T;
    }
  }  // namespace

  SpanningTree maximal_tree(DirectedGraph const& graph) {
    if (graph.num_vertices() == 0) {
      throw Error("graph has no vertices");
    }
    VertexId root = 0;
    for (VertexId v = 1; v < graph.num_vertices(); ++v) {
      if (graph.vertex_name(v) < graph.vertex_name(root)) {
        root = v;
      }
    }
    return grow_tree(graph, root, nullptr);
  }

  SpanningTree tree_from_edges(DirectedGraph const&       graph,
                               std::vector<EdgeId> const& edges) {
    std::vector<bool> allowed(graph.num_edges(), false);
    std::size_t       pairs = 0;
    for (EdgeId e : edges) {
      if (e >= graph.num_edges()) {
        throw Error("unknown tree edge");
      }
      if (!allowed[e]) {
        ++pairs;
      }
      allowed[e] = allowed[DirectedGraph::reverse(e)] = true;
    }
    if (pairs + 1 != graph.num_vertices()) {
      throw Error("tree edges do not form a spanning tree: "
                  + std::to_string(pairs) + " edges for "
                  + std::to_string(graph.num_vertices()) + " vertices");
    }
    VertexId root = maximal_tree(graph).root;
    try {
      return grow_tree(graph, root, &allowed);
    } catch (Error const&) {
      throw Error("tree edges do not span the graph");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // GraphOfGroups
  ////////////////////////////////////////////////////////////////////////

  GraphOfGroups::GraphOfGroups(DirectedGraph graph)
      : _graph(std::move(graph)),
        _vertex(_graph.num_vertices()),
        _edge(_graph.num_edges()),
        _iso(_graph.num_edges()),
        _iso_set(_graph.num_edges(), false) {}

  void GraphOfGroups::set_vertex_group(VertexId v, std::shared_ptr<GroupBackend const> G) {
    _vertex.at(v) = std::move(G);
  }

  void GraphOfGroups::set_edge(EdgeId                                 e,
                               std::shared_ptr<SubgroupContext const> subgroup,
                               std::vector<Word>                      iso) {
    _edge.at(e)  = std::move(subgroup);
    _iso[e]      = std::move(iso);
    _iso_set[e]  = !_iso[e].empty() || _edge[e]->generators().empty();
  }

  GroupBackend const& GraphOfGroups::vertex_group(VertexId v) const {
    if (!_vertex.at(v)) {
      throw Error("vertex " + _graph.vertex_name(v) + " has no group");
    }
    return *_vertex[v];
  }

  SubgroupContext const& GraphOfGroups::edge_group(EdgeId e) const {
    if (!_edge.at(e)) {
      throw Error("edge " + _graph.edge_name(e) + " has no subgroup");
    }
    return *_edge[e];
  }

  Word GraphOfGroups::apply_iso(EdgeId e, Word const& y_word) const {
    return substitute(edge_group(e).subgroup_alphabet(),
                      vertex_group(_graph.source(e)).alphabet(), y_word, _iso[e]);
  }

  void GraphOfGroups::derive_reverse_iso(EdgeId e, std::size_t max_length) {
    EdgeId                 r  = DirectedGraph::reverse(e);
    SubgroupContext const& Ge = edge_group(e);
    SubgroupContext const& Gr = edge_group(r);
    GroupBackend const&    S  = vertex_group(_graph.source(e));
    if (!_iso_set[e]) {
      throw Error("edge " + _graph.edge_name(e) + " has no isomorphism");
    }
    std::vector<Word> const& images = _iso[e];
    std::vector<Word> const& zs     = Gr.generators();
    std::vector<Word>        result(zs.size());

    bool direct = zs.size() == images.size();
    for (std::size_t j = 0; direct && j < zs.size(); ++j) {
      direct = S.equal(zs[j], images[j]);
    }
    if (direct) {
      _iso[r]     = Ge.generators();
      _iso_set[r] = true;
      return;
    }
    // breadth-first over words in the images, keyed by canonical form
    Alphabet const&                          Y = Ge.subgroup_alphabet();
    std::unordered_map<Word, Word, WordHash> found = {{Word{}, Word{}}};
    std::vector<std::pair<Word, Word>>       layer = {{Word{}, Word{}}};
    std::vector<Word>                        targets;
    for (auto const& z : zs) {
      targets.push_back(S.canonical(z));
    }
    auto all_found = [&] {
      return std::all_of(targets.begin(), targets.end(),
                         [&](Word const& t) { return found.count(t) > 0; });
    };
    for (std::size_t d = 1; d <= max_length && !all_found(); ++d) {
      std::vector<std::pair<Word, Word>> next;
      for (auto const& [g, p] : layer) {
        for (Letter y = 0; y < Y.size(); ++y) {
          Word image = apply_iso(e, Word{y});
          Word h     = S.canonical(concat(g, image));
          if (found.count(h) == 0) {
            Word q = concat(p, Word{y});
            found.emplace(h, q);
            next.emplace_back(std::move(h), std::move(q));
          }
        }
      }
      layer = std::move(next);
    }
    for (std::size_t j = 0; j < zs.size(); ++j) {
      auto it = found.find(targets[j]);
      if (it == found.end()) {
        throw Error("cannot invert the isomorphism of edge " + _graph.edge_name(e)
                    + " on " + Gr.subgroup_alphabet().generator_name(j));
      }
      result[j] = Ge.evaluate(it->second);
    }
    _iso[r]     = std::move(result);
    _iso_set[r] = true;
  }

  std::vector<std::string> GraphOfGroups::validate() const {
    std::vector<std::string> failures;
    if (_graph.num_vertices() == 0) {
      failures.push_back("graph has no vertices");
      return failures;
    }
    if (!_graph.connected()) {
      failures.push_back("graph is not connected");
    }
    for (VertexId v = 0; v < _graph.num_vertices(); ++v) {
      if (!_vertex[v]) {
        failures.push_back("vertex " + _graph.vertex_name(v) + ": no group");
      }
    }
    for (EdgeId e = 0; e < _graph.num_edges(); ++e) {
      std::string const& name = _graph.edge_name(e);
      if (!_edge[e]) {
        failures.push_back("edge " + name + ": no subgroup");
        continue;
      }
      auto const& T = _vertex[_graph.target(e)];
      if (T && &_edge[e]->parent() != T.get()) {
        failures.push_back("edge " + name + ": subgroup is not in the group at "
                           + _graph.vertex_name(_graph.target(e)));
      }
      if (!_iso_set[e]) {
        failures.push_back("edge " + name + ": no isomorphism");
      } else if (_iso[e].size() != _edge[e]->generators().size()) {
        failures.push_back("edge " + name + ": isomorphism has "
                           + std::to_string(_iso[e].size()) + " images for "
                           + std::to_string(_edge[e]->generators().size())
                           + " generators");
      }
    }
    if (!failures.empty()) {
      return failures;
    }
    for (EdgeId e = 0; e < _graph.num_edges(); ++e) {
      EdgeId                 r  = DirectedGraph::reverse(e);
      SubgroupContext const& Ge = *_edge[e];
      SubgroupContext const& Gr = *_edge[r];
      std::string const&     name = _graph.edge_name(e);
      GroupBackend const&    S    = *_vertex[_graph.source(e)];
      bool                   images_ok = true;
      for (std::size_t j = 0; j < _iso[e].size(); ++j) {
        Word const& image = _iso[e][j];
        std::string y     = Ge.subgroup_alphabet().generator_name(j);
        if (!S.alphabet().contains(image)) {
          failures.push_back("edge " + name + ": image of " + y
                             + " is not a word over the group at "
                             + _graph.vertex_name(_graph.source(e)));
          images_ok = false;
        } else if (!Gr.member(image)) {
          failures.push_back("edge " + name + ": image of " + y
                             + " is not in the subgroup of " + _graph.edge_name(r));
          images_ok = false;
        }
      }
      if (!images_ok) {
        continue;
      }
      // phi_ebar o phi_e must be the identity on the generators of G_e
      GroupBackend const& Tg = Ge.parent();
      for (std::size_t j = 0; j < _iso[e].size(); ++j) {
        Word back = apply_iso(r, Gr.h_express(_iso[e][j]));
        if (!Tg.equal(back, Ge.generators()[j])) {
          failures.push_back("edge " + name + ": phi(" + _graph.edge_name(r)
                             + ") o phi(" + name + ") != id on "
                             + Ge.subgroup_alphabet().generator_name(j));
        }
      }
    }
    return failures;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pi1Alphabets
  ////////////////////////////////////////////////////////////////////////

  Pi1Alphabets::Pi1Alphabets(GraphOfGroups const& gog, SpanningTree const& tree) {
    DirectedGraph const& graph = gog.graph();
    std::map<std::string, std::size_t> uses;
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
      for (auto const& g : gog.vertex_group(v).alphabet().generators()) {
        ++uses[g.name];
      }
    }
    std::vector<Alphabet::Generator> inflated, deflated;
    std::vector<std::pair<VertexId, std::size_t>> origin;  // per generator
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
      Alphabet const& X = gog.vertex_group(v).alphabet();
      for (std::size_t i = 0; i < X.num_generators(); ++i) {
        auto g = X.generators()[i];
        if (uses[g.name] > 1) {
          g.name = graph.vertex_name(v) + "." + g.name;
        }
        inflated.push_back(g);
        deflated.push_back(g);
        origin.emplace_back(v, i);
      }
    }
    std::size_t num_vertex_gens = inflated.size();
    for (EdgeId e = 0; e < graph.num_edges(); e += 2) {
      Alphabet::Generator s{"s_" + graph.edge_name(e), false};
      if (uses.count(s.name) > 0) {
        throw Error("stable letter " + s.name + " clashes with a generator name");
      }
      inflated.push_back(s);
      if (!tree.contains(e)) {
        deflated.push_back(s);
      }
    }
    _inflated = Alphabet(inflated);
    _deflated = Alphabet(deflated);

    std::size_t n = _inflated.size();
    _vertex_of.assign(n, none);
    _local.assign(n, 0);
    _edge_of.assign(n, none);
    _to_deflated.assign(n, none);
    _vertex_letters.resize(graph.num_vertices());
    _stable.assign(graph.num_edges(), 0);
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
      _vertex_letters[v].assign(gog.vertex_group(v).alphabet().size(), 0);
    }
    for (Letter x = 0; x < n; ++x) {
      std::size_t gen = _inflated.generator_of(x);
      bool        pos = _inflated.is_positive(x);
      if (gen < num_vertex_gens) {
        auto [v, i]      = origin[gen];
        Alphabet const& X = gog.vertex_group(v).alphabet();
        Letter local      = pos ? X.generator_letter(i) : X.inverse(X.generator_letter(i));
        _vertex_of[x]     = v;
        _local[x]         = local;
        _vertex_letters[v][local] = x;
      } else {
        EdgeId e   = 2 * (gen - num_vertex_gens) + (pos ? 0 : 1);
        _edge_of[x] = e;
        _stable[e]  = x;
      }
    }
    for (Letter x = 0; x < _deflated.size(); ++x) {
      Letter y = _inflated.letter(_deflated.name(x));
      _to_deflated[y] = x;
      _to_inflated.push_back(y);
    }
  }

  Word Pi1Alphabets::lift(VertexId v, Word const& local) const {
    Word result;
    result.reserve(local.size());
    for (Letter x : local) {
      result.push_back(_vertex_letters[v][x]);
    }
    return result;
  }

  Word deflate(Pi1Alphabets const& A, Word const& w) {
    Word result;
    for (Letter x : w) {
      if (!A.is_tree_letter(x)) {
        result.push_back(A.to_deflated(x));
      }
    }
    return result;
  }

  Word inflate(Pi1Alphabets const& A,
               GraphOfGroups const& gog,
               SpanningTree const& tree,
               Word const&         w,
               VertexId            start) {
    DirectedGraph const& graph = gog.graph();
    Word                 result;
    VertexId             here = start;
    auto walk_to = [&](VertexId v) {
      for (EdgeId e : tree.path(here, v)) {
        result.push_back(A.stable_letter(e));
      }
      here = v;
    };
    for (Letter d : w) {
      if (d >= A.deflated().size()) {
        throw Error("letter outside the deflated alphabet");
      }
      Letter x = A.to_inflated(d);
      if (A.vertex_of(x) != Pi1Alphabets::none) {
        walk_to(A.vertex_of(x));
        result.push_back(x);
      } else {
        EdgeId e = A.edge_of(x);
        walk_to(graph.source(e));
        result.push_back(x);
        here = graph.target(e);
      }
    }
    return result;
  }

}  // namespace higgins
