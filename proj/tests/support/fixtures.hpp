// Graphs of groups shared by several test files.

#ifndef HIGGINS_TESTS_SUPPORT_FIXTURES_HPP_
#define HIGGINS_TESTS_SUPPORT_FIXTURES_HPP_

#include <memory>
#include <string>
#include <vector>

#include "higgins/abelian.hpp"
#include "higgins/cascade.hpp"
#include "higgins/graph_of_groups.hpp"

namespace higgins::testing {

  inline std::shared_ptr<AbelianGroup const> cyclic(std::string name) {
    return std::make_shared<AbelianGroup>(1, std::vector<std::int64_t>{},
                                          std::vector<std::string>{name});
  }

  inline std::vector<std::string> tokens(Alphabet const& A, Word const& w) {
    std::vector<std::string> out;
    for (Letter x : w) {
      out.push_back(A.name(x));
    }
    return out;
  }

  // <a> *_{a^2 = b^3} <b>: edge e from va to vb, G_e = <b^3>, G_ebar = <a^2>.
  inline std::shared_ptr<GraphOfGroups> trefoil_gog() {
    DirectedGraph g;
    VertexId      va = g.add_vertex("va"), vb = g.add_vertex("vb");
    EdgeId        e  = g.add_edge("e", va, vb);
    auto          A = cyclic("a"), B = cyclic("b");
    auto          gog = std::make_shared<GraphOfGroups>(g);
    gog->set_vertex_group(va, A);
    gog->set_vertex_group(vb, B);
    gog->set_edge(e, std::make_shared<AbelianSubgroup>(
                         B, std::vector<Word>{B->alphabet().parse("b^3")}),
                  {A->alphabet().parse("a^2")});
    gog->set_edge(DirectedGraph::reverse(e),
                  std::make_shared<AbelianSubgroup>(
                      A, std::vector<Word>{A->alphabet().parse("a^2")}),
                  {});
    gog->derive_reverse_iso(e);
    return gog;
  }

  // Z * Z = <a> * <b> over trivial edge groups.
  inline std::shared_ptr<GraphOfGroups> free_product_gog() {
    DirectedGraph g;
    VertexId      va = g.add_vertex("va"), vb = g.add_vertex("vb");
    EdgeId        e  = g.add_edge("e", va, vb);
    auto          A = cyclic("a"), B = cyclic("b");
    auto          gog = std::make_shared<GraphOfGroups>(g);
    gog->set_vertex_group(va, A);
    gog->set_vertex_group(vb, B);
    gog->set_edge(e, std::make_shared<AbelianSubgroup>(B, std::vector<Word>{}), {});
    gog->set_edge(DirectedGraph::reverse(e),
                  std::make_shared<AbelianSubgroup>(A, std::vector<Word>{}), {});
    return gog;
  }

  // Z^2 = <x1, x2> with a loop f over <x1>, identity isomorphism.
  inline std::shared_ptr<GraphOfGroups> hnn_gog() {
    DirectedGraph g;
    VertexId      v = g.add_vertex("v");
    EdgeId        f = g.add_edge("f", v, v);
    auto          Z2 = std::make_shared<AbelianGroup>(2, std::vector<std::int64_t>{});
    auto          H  = std::make_shared<AbelianSubgroup>(
        Z2, std::vector<Word>{Z2->alphabet().parse("x1")});
    auto gog = std::make_shared<GraphOfGroups>(g);
    gog->set_vertex_group(v, Z2);
    gog->set_edge(f, H, {Z2->alphabet().parse("x1")});
    gog->set_edge(DirectedGraph::reverse(f), H, {});
    gog->derive_reverse_iso(f);
    return gog;
  }

}  // namespace higgins::testing

#endif  // HIGGINS_TESTS_SUPPORT_FIXTURES_HPP_
