#include "higgins/cascade.hpp"

#include <sstream>

#include "higgins/error.hpp"

namespace higgins {

  namespace {
    std::string show(Alphabet const& A, Word const& w) {
      return w.empty() ? std::string(empty_word_symbol) : A.format(w);
    }
  }  // namespace

  Pi1::Pi1(std::shared_ptr<GraphOfGroups const> gog, std::optional<SpanningTree> tree)
      : _gog(std::move(gog)),
        _tree(tree ? std::move(*tree) : maximal_tree(_gog->graph())),
        _alphabets(*_gog, _tree) {
    auto failures = _gog->validate();
    if (!failures.empty()) {
      throw Error("invalid graph of groups: " + failures.front());
    }
    DirectedGraph const& graph = _gog->graph();
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
      _vertex_languages.push_back(_gog->vertex_group(v).canonical_language());
    }
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
      _edge_languages.push_back(_gog->edge_group(e).coset_language());
    }
  }

  InflatedWord Pi1::parse_alternating(Word const& inflated, VertexId start) const {
    DirectedGraph const& graph = gog().graph();
    Alphabet const&      A     = _alphabets.inflated();
    InflatedWord         result;
    result.base   = start;
    VertexId here = start;
    Word*    current = &result.base_word;
    for (Letter x : inflated) {
      if (x >= A.size()) {
        throw Error("letter outside the inflated alphabet");
      }
      VertexId v = _alphabets.vertex_of(x);
      if (v != Pi1Alphabets::none) {
        if (v != here) {
          throw Error("letter " + A.name(x) + " read at vertex "
                      + graph.vertex_name(here));
        }
        current->push_back(_alphabets.local_letter(x));
      } else {
        EdgeId e = _alphabets.edge_of(x);
        if (graph.source(e) != here) {
          throw Error("stable letter " + A.name(x) + " read at vertex "
                      + graph.vertex_name(here));
        }
        result.path.push_back({e, {}});
        current = &result.path.back().word;
        here    = graph.target(e);
      }
    }
    return result;
  }

  Word Pi1::join(InflatedWord const& w) const {
    Word result = _alphabets.lift(w.base, w.base_word);
    for (auto const& seg : w.path) {
      result.push_back(_alphabets.stable_letter(seg.edge));
      Word part = _alphabets.lift(gog().graph().target(seg.edge), seg.word);
      result.insert(result.end(), part.begin(), part.end());
    }
    return result;
  }

  InflatedWord Pi1::split(Word const& deflated, VertexId start) const {
    return parse_alternating(inflate(_alphabets, gog(), _tree, deflated, start), start);
  }

  Word Pi1::deflated(InflatedWord const& w) const {
    return deflate(_alphabets, join(w));
  }

  std::size_t Pi1::pinch_reduce(InflatedWord& w) const {
    DirectedGraph const& graph = gog().graph();
    std::size_t          count = 0;
    std::vector<Segment> stack;
    for (auto& seg : w.path) {
      stack.push_back(std::move(seg));
      while (stack.size() >= 2) {
        Segment& a = stack[stack.size() - 2];
        Segment& b = stack.back();
        if (b.edge != DirectedGraph::reverse(a.edge)) {
          break;
        }
        SubgroupContext const& G = gog().edge_group(a.edge);
        if (!G.member(a.word)) {
          break;
        }
        Word image = gog().apply_iso(a.edge, G.h_express(a.word));
        Word tail  = std::move(b.word);
        stack.pop_back();
        stack.pop_back();
        Word& prev = stack.empty() ? w.base_word : stack.back().word;
        prev = gog().vertex_group(graph.source(a.edge)).canonical(concat(prev, image, tail));
        ++count;
      }
    }
    w.path = std::move(stack);
    return count;
  }

  Word Pi1::cascade(InflatedWord& w, Pi1Base const& base, CascadeTrace* trace) const {
    DirectedGraph const& graph = gog().graph();
    Word                 carry;
    for (std::size_t j = w.path.size(); j-- > 0;) {
      Segment&               seg = w.path[j];
      SubgroupContext const& G   = gog().edge_group(seg.edge);
      Alphabet const&        X   = G.parent().alphabet();
      Word                   x   = concat(seg.word, carry);
      Word                   rep = G.coset_rep(x);
      Word h     = G.h_express(concat(x, invert(X, rep)));
      Word image = gog().vertex_group(graph.source(seg.edge))
                       .canonical(gog().apply_iso(seg.edge, h));
      if (trace != nullptr) {
        trace->steps.push_back({j + 1, seg.edge, h, image, rep});
      }
      seg.word = std::move(rep);
      carry    = std::move(image);
    }
    Word x = concat(w.base_word, carry);
    Word h;
    if (base.coset_edge) {
      SubgroupContext const& G = gog().edge_group(*base.coset_edge);
      w.base_word              = G.coset_rep(x);
      h = G.h_express(concat(x, invert(G.parent().alphabet(), w.base_word)));
    } else {
      w.base_word = gog().vertex_group(w.base).canonical(x);
    }
    if (trace != nullptr) {
      trace->steps.push_back({0, std::nullopt, h, {}, w.base_word});
    }
    while (!w.path.empty() && w.path.back().word.empty()
           && _tree.contains(w.path.back().edge)) {
      w.path.pop_back();
    }
    return h;
  }

  InflatedWord Pi1::reduce(InflatedWord   w,
                           Pi1Base const& base,
                           CascadeTrace*  trace,
                           Word*          coset_h) const {
    if (base.coset_edge && gog().graph().target(*base.coset_edge) != w.base) {
      throw Error("coset edge does not end at the base vertex");
    }
    Word        h;
    std::size_t pinched = pinch_reduce(w);
    while (true) {
      Word part = cascade(w, base, trace);
      h.insert(h.end(), part.begin(), part.end());
      std::size_t more = pinch_reduce(w);
      if (more == 0) {
        break;
      }
      pinched += more;
    }
    if (trace != nullptr) {
      trace->pinches += pinched;
    }
    if (coset_h != nullptr) {
      *coset_h = base.coset_edge
                     ? free_reduce(gog().edge_group(*base.coset_edge).subgroup_alphabet(), h)
                     : Word{};
    }
    return w;
  }

  Word Pi1::normal_form(Word const& w, VertexId base) const {
    return deflated(reduce(split(w, base), group_base(base), nullptr));
  }

  Word Pi1::coset_normal_form(Word const& w, EdgeId e, Word* h) const {
    Pi1Base base = coset_base(e);
    return deflated(reduce(split(w, base.vertex), base, nullptr, h));
  }

  Language const& Pi1::component_language(Pi1Base const& base) const {
    return base.coset_edge ? _edge_languages[*base.coset_edge]
                           : _vertex_languages[base.vertex];
  }

  bool Pi1::is_higgins(Word const& deflated_word, Pi1Base const& base) const {
    InflatedWord w = split(deflated_word, base.vertex);
    if (!component_language(base).contains(w.base_word)) {
      return false;
    }
    for (std::size_t i = 0; i < w.path.size(); ++i) {
      Segment const& seg = w.path[i];
      if (!_edge_languages[seg.edge].contains(seg.word)) {
        return false;
      }
      if (i + 1 < w.path.size()
          && w.path[i + 1].edge == DirectedGraph::reverse(seg.edge)
          && gog().edge_group(seg.edge).member(seg.word)) {
        return false;
      }
    }
    return w.path.empty() || !_tree.contains(w.path.back().edge)
           || !w.path.back().word.empty();
  }

  Dfa Pi1::higgins_automaton(Pi1Base const& base) const {
    DirectedGraph const& graph = gog().graph();
    std::size_t          E     = graph.num_edges();
    // component 0 is the base segment, component 1 + e the segments after e
    std::vector<Dfa const*> D(E + 1);
    std::vector<VertexId>   at(E + 1);
    auto                    need = [](Language const& L) -> Dfa const* {
      if (!L.has_dfa()) {
        throw Error("a component language has no automaton");
      }
      return &L.dfa();
    };
    D[0]  = need(component_language(base));
    at[0] = base.vertex;
    for (EdgeId e = 0; e < E; ++e) {
      D[e + 1]  = need(_edge_languages[e]);
      at[e + 1] = graph.target(e);
    }
    Nfa                      N(symbol_names(alphabet()));
    std::vector<std::size_t> offset(E + 2, 0);
    for (std::size_t c = 0; c <= E; ++c) {
      offset[c + 1] = offset[c] + 2 * D[c]->num_states();
    }
    auto id = [&](std::size_t c, State q, int nonempty) {
      return static_cast<State>(offset[c] + 2 * static_cast<std::size_t>(q) + nonempty);
    };
    for (std::size_t i = 0; i < offset[E + 1]; ++i) {
      N.add_state();
    }
    N.starts.push_back(id(0, D[0]->start(), 0));
    for (std::size_t c = 0; c <= E; ++c) {
      Dfa const& A       = *D[c];
      VertexId   v       = at[c];
      bool       is_edge = c > 0;
      EdgeId     e       = c - 1;
      for (State q = 0; q < static_cast<State>(A.num_states()); ++q) {
        for (int f = 0; f < 2; ++f) {
          State s = id(c, q, f);
          for (Letter x = 0; x < A.num_symbols(); ++x) {
            State t = A.next(q, x);
            if (t != no_state) {
              Letter g = _alphabets.to_deflated(_alphabets.vertex_letter(v, x));
              N.add_transition(s, g, id(c, t, 1));
            }
          }
          if (!A.is_accepting(q)) {
            continue;
          }
          bool tree_edge = is_edge && _tree.contains(e);
          N.accepting[s] = !(tree_edge && f == 0);
          for (EdgeId next : graph.out_edges(v)) {
            if (is_edge && next == DirectedGraph::reverse(e) && f == 0) {
              continue;
            }
            State t = id(next + 1, D[next + 1]->start(), 0);
            Letter stable = _alphabets.stable_letter(next);
            if (_alphabets.is_tree_letter(stable)) {
              N.add_epsilon(s, t);
            } else {
              N.add_transition(s, _alphabets.to_deflated(stable), t);
            }
          }
        }
      }
    }
    return minimize(determinize(N));
  }

  Language Pi1::higgins_language(Pi1Base const& base) const {
    try {
      return Language(alphabet(), higgins_automaton(base));
    } catch (Error const&) {
      return Language(alphabet(),
                      [this, base](Word const& w) { return is_higgins(w, base); });
    }
  }

  std::string Pi1::format_trace(CascadeTrace const& trace, Pi1Base const& base) const {
    DirectedGraph const& graph = gog().graph();
    std::ostringstream   out;
    for (auto const& step : trace.steps) {
      out << "i=" << step.index;
      if (step.edge) {
        EdgeId e = *step.edge;
        out << " h=" << show(gog().edge_group(e).subgroup_alphabet(), step.h)
            << " h'=" << show(gog().vertex_group(graph.source(e)).alphabet(), step.h_image)
            << " u'=" << show(gog().vertex_group(graph.target(e)).alphabet(), step.output);
      } else {
        Word none;
        out << " h="
            << (base.coset_edge
                    ? show(gog().edge_group(*base.coset_edge).subgroup_alphabet(), step.h)
                    : show(alphabet(), none))
            << " h'=" << show(alphabet(), none)
            << " u'=" << show(gog().vertex_group(base.vertex).alphabet(), step.output);
      }
      out << "\n";
    }
    return out.str();
  }

  bool pi1_word_problem(Pi1 const& pi, VertexId base, Word const& u, Word const& v) {
    return pi.normal_form(u, base) == pi.normal_form(v, base);
  }

  ////////////////////////////////////////////////////////////////////////
  // Backends
  ////////////////////////////////////////////////////////////////////////

  Pi1Backend::Pi1Backend(std::shared_ptr<Pi1 const> pi, VertexId base)
      : _pi(std::move(pi)), _base(base) {
    if (base >= _pi->gog().graph().num_vertices()) {
      throw Error("base vertex out of range");
    }
  }

  Language Pi1Backend::canonical_language() const {
    return _pi->higgins_language(_pi->group_base(_base));
  }

  std::string Pi1Backend::description() const {
    return "fundamental group based at " + _pi->gog().graph().vertex_name(_base);
  }

  Pi1CosetContext::Pi1CosetContext(std::shared_ptr<Pi1 const> pi, EdgeId e)
      : _pi(std::move(pi)), _edge(e) {
    VertexId v = _pi->gog().graph().target(e);
    _parent    = std::make_shared<Pi1Backend>(_pi, v);
    for (Word const& y : _pi->gog().edge_group(e).generators()) {
      Word g;
      for (Letter x : y) {
        g.push_back(_pi->alphabets().to_deflated(_pi->alphabets().vertex_letter(v, x)));
      }
      _gens.push_back(std::move(g));
    }
  }

  Word Pi1CosetContext::h_express(Word const& g) const {
    Word h;
    if (!_pi->coset_normal_form(g, _edge, &h).empty()) {
      throw Error("element is not in the edge subgroup");
    }
    return h;
  }

  Language Pi1CosetContext::coset_language() const {
    return _pi->higgins_language(_pi->coset_base(_edge));
  }

  std::size_t Pi1CosetContext::min_coset_length(Word const& g) const {
    Word                        target = coset_rep(g);
    std::lock_guard<std::mutex> lock(_mutex);
    if (_distance.empty()) {
      _distance.emplace(Word{}, 0);
      _frontier = {Word{}};
    }
    Alphabet const& A = _pi->alphabet();
    while (_distance.count(target) == 0 && !_frontier.empty()) {
      std::vector<Word> next;
      for (auto const& r : _frontier) {
        for (Letter x = 0; x < A.size(); ++x) {
          Word s = coset_rep(concat(r, Word{x}));
          if (_distance.emplace(s, _depth + 1).second) {
            next.push_back(std::move(s));
          }
        }
      }
      ++_depth;
      _frontier = std::move(next);
    }
    auto it = _distance.find(target);
    return it == _distance.end() ? g.size() : it->second;
  }

  std::string Pi1CosetContext::description() const {
    return "edge subgroup of " + _pi->gog().graph().edge_name(_edge)
           + " in the fundamental group";
  }

}  // namespace higgins
