#include <sstream>

#include "doctest.h"
#include "higgins/config.hpp"
#include "higgins/error.hpp"

using namespace higgins;

namespace {
  ProjectConfig parse(std::string const& text) {
    std::istringstream in(text);
    return parse_config(in);
  }

  std::size_t error_line(std::string const& text) {
    try {
      parse(text);
    } catch (ParseError const& e) {
      return e.line();
    }
    FAIL("expected a parse error");
    return 0;
  }

  std::string const z2 = "[group Z2]\nkind=abelian rank=2\n";
}  // namespace

TEST_CASE("config: data files") {
  for (auto name : {"trefoil_amalgam", "free_product_zz", "hnn_z2", "abelian_pairs"}) {
    ProjectConfig cfg = load_config(std::string(HIGGINS_DATA_DIR) + "/" + name + ".gog");
    CHECK(cfg.validate().empty());
    CHECK(cfg.coset);
  }
  ProjectConfig tref = load_config(std::string(HIGGINS_DATA_DIR) + "/trefoil_amalgam.gog");
  auto          pi   = tref.pi1();
  Alphabet const& X  = pi->alphabet();
  VertexId      va   = *pi->gog().graph().find_vertex("va");
  CHECK(pi1_word_problem(*pi, va, X.parse("a a b"), X.parse("b^4")));
  CHECK(tref.param("radius", 1) == 6);
  CHECK(tref.param("missing", 3) == 3);
  CHECK(tref.coset_system().mode == Mode::asynchronous);
}

TEST_CASE("config: groups and subgroups") {
  ProjectConfig cfg = parse(
      "# comment\n"
      "[group T]\nkind=abelian rank=1 torsion=4,6 names=t,u,v\n"
      "[group F]\nkind=free rank=2\n"
      "[subgroup S in T]\ngenerators=t u;v^2 names=p,q\n"
      "[subgroup C in F]\ngenerators=a b\n"
      "[subgroup E in F]\ngenerators=\n"
      "[coset]\nsubgroup=S\n");
  CHECK(cfg.group_order == std::vector<std::string>{"T", "F"});
  auto const& S = *cfg.subgroups.at("S").context;
  CHECK(S.subgroup_alphabet().generator_name(1) == "q");
  CHECK(S.parent().alphabet().format(S.generators()[0]) == "t u");
  CHECK(cfg.subgroups.at("C").context->member(
      cfg.groups.at("F")->alphabet().parse("a b a b")));
  CHECK(cfg.subgroups.at("E").context->generators().empty());
  CHECK(cfg.coset->mode == Mode::synchronous);
  CHECK(!cfg.gog);
  CHECK_THROWS_AS(cfg.pi1(), Error);
}

TEST_CASE("config: iso maps by name") {
  ProjectConfig cfg = parse(z2
                            + "[subgroup H in Z2]\ngenerators=x1;x2\n"
                              "[subgroup K in Z2]\ngenerators=x2;x1\n"
                              "[graph]\nvertices=v:Z2\n"
                              "edge f: v -> v subgroup=H reverse_subgroup=K "
                              "iso=y2->x2;y1->x1 reverse=g\n");
  auto const& gog = *cfg.gog;
  EdgeId      f   = *gog.graph().find_edge("f");
  CHECK(gog.graph().find_edge("g") == DirectedGraph::reverse(f));
  Alphabet const& X = gog.vertex_group(0).alphabet();
  CHECK(X.format(gog.edge_iso(f)[0]) == "x1");
  CHECK(X.format(gog.edge_iso(f)[1]) == "x2");
  // the reverse iso comes from a search since K lists x2 first
  CHECK(cfg.validate().empty());
  CHECK(X.format(gog.edge_iso(DirectedGraph::reverse(f))[0]) == "x2");
}

TEST_CASE("config: line-numbered errors") {
  CHECK(error_line("kind=abelian\n") == 1);
  CHECK(error_line("[group]\n") == 1);
  CHECK(error_line("[nope x]\n") == 1);
  CHECK(error_line(z2 + "[group Z2]\nkind=free rank=1\n") == 3);
  CHECK(error_line(z2 + "colour=red\n") == 3);
  CHECK(error_line(z2 + "kind=free\n") == 3);
  CHECK(error_line("[group A]\nkind=abelian\nrank=x\n") == 3);
  CHECK(error_line("[group A]\n\nkind=cyclic\n") == 3);
  CHECK(error_line(z2 + "[subgroup H in Q]\ngenerators=x1\n") == 3);
  CHECK(error_line(z2 + "[subgroup H in Z2]\ngenerators=x1 y7\n") == 4);
  std::string const sub = z2 + "[subgroup H in Z2]\ngenerators=x1\n[graph]\n";
  CHECK(error_line(sub + "vertices=v:Z3\n") == 6);
  CHECK(error_line(sub + "vertices=v:Z2\nedge f: v -> w subgroup=H reverse_subgroup=H\n") == 7);
  CHECK(error_line(sub + "vertices=v:Z2\nedge f: v -> v subgroup=H reverse_subgroup=H\n") == 7);
  CHECK(error_line(sub + "vertices=v:Z2\nedge f: v -> v subgroup=H reverse_subgroup=H "
                         "iso=y9->x1\n") == 7);
  CHECK(error_line(sub + "vertices=v:Z2\nedge f: v -> v subgroup=G reverse_subgroup=H "
                         "iso=y1->x1\n") == 7);
  CHECK(error_line(sub + "vertices=v:Z2\nedge f: v -> v subgroup=H reverse_subgroup=H "
                         "iso=y1->x1\ntree=q\n") == 8);
  CHECK(error_line(sub + "vertices=v:Z2\ncolour=red\n") == 7);
  CHECK(error_line(z2 + "[coset]\nmode=sync\n") == 3);
  CHECK(error_line(z2 + "[coset]\nsubgroup=H\n") == 4);
  CHECK(error_line(z2 + "[params]\nr=1\n[params]\n") == 5);
  CHECK_THROWS_AS(load_config("/nonexistent/x.gog"), Error);
}

TEST_CASE("config: graph problems are reported, not thrown") {
  ProjectConfig cfg = parse(
      "[group A]\nkind=abelian rank=1 names=a\n"
      "[group B]\nkind=abelian rank=1 names=b\n"
      "[subgroup A2 in A]\ngenerators=a^2\n"
      "[subgroup B3 in B]\ngenerators=b^3\n"
      "[graph]\nvertices=va:A,vb:B,vc:A\n"
      "edge e: va -> vb subgroup=B3 reverse_subgroup=A2 iso=y1->a^4\n");
  auto problems = cfg.validate();
  REQUIRE(!problems.empty());
  CHECK(problems.front().find("edge e") != std::string::npos);
  bool disconnected = false;
  for (auto const& p : problems) {
    disconnected = disconnected || p == "graph is not connected";
  }
  CHECK(disconnected);
  CHECK(!cfg.tree);
  CHECK_THROWS_AS(cfg.pi1(), Error);
}
