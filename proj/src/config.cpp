#include "higgins/config.hpp"

#include <algorithm>
#include <fstream>
#include <regex>

#include "higgins/abelian.hpp"
#include "higgins/error.hpp"
#include "higgins/finite_group.hpp"
#include "higgins/free_group.hpp"

namespace higgins {

  namespace {
    std::string trim(std::string const& s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      if (trim(s).empty()) {
        return out;
      }
      std::size_t start = 0;
      while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string::npos) {
          return out;
        }
        start = pos + 1;
      }
    }

    std::size_t to_size(std::string const& s, std::size_t line) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
        throw ParseError("expected a natural number, got '" + s + "'", line);
      }
      return std::stoul(s);
    }

    struct Value {
      std::string text;
      std::size_t line;
    };

    struct Section {
      std::string                  kind;  // group, subgroup, graph, coset, params
      std::string                  name;
      std::string                  parent;  // subgroups only
      std::size_t                  line;
      std::map<std::string, Value> values;
      std::vector<std::pair<std::string, std::size_t>> lines;  // [graph] only
    };

    // key=value pairs; a value runs up to the next " key=".
    std::vector<std::pair<std::string, std::string>> parse_pairs(
        std::string const& text, std::size_t line) {
      static std::regex const key_re(R"((^|\s)([A-Za-z_][A-Za-z0-9_]*)=)");
      std::vector<std::pair<std::string, std::string>> out;
      std::vector<std::smatch>                         ms;
      for (auto it = std::sregex_iterator(text.begin(), text.end(), key_re);
           it != std::sregex_iterator(); ++it) {
        ms.push_back(*it);
      }
      if (ms.empty() || trim(text.substr(0, ms[0].position(0))) != "") {
        throw ParseError("expected key=value", line);
      }
      for (std::size_t i = 0; i < ms.size(); ++i) {
        std::size_t from = ms[i].position(0) + ms[i].length(0);
        std::size_t to   = i + 1 < ms.size() ? ms[i + 1].position(0) : text.size();
        out.emplace_back(ms[i][2].str(), trim(text.substr(from, to - from)));
      }
      return out;
    }

    void add_pairs(Section& s, std::string const& text, std::size_t line) {
      for (auto& [k, v] : parse_pairs(text, line)) {
        if (!s.values.emplace(k, Value{v, line}).second) {
          throw ParseError("duplicate key " + k, line);
        }
      }
    }

    Value const* find(Section const& s, std::string const& key) {
      auto it = s.values.find(key);
      return it == s.values.end() ? nullptr : &it->second;
    }

    Value const& require(Section const& s, std::string const& key) {
      auto v = find(s, key);
      if (!v) {
        throw ParseError("[" + s.kind + " " + s.name + "] needs " + key, s.line);
      }
      return *v;
    }

    void allow_only(Section const& s, std::vector<std::string> const& keys) {
      for (auto const& [k, v] : s.values) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
          throw ParseError("unknown key " + k, v.line);
        }
      }
    }

    Word parse_word(Alphabet const& A, std::string const& text, std::size_t line) {
      try {
        return A.parse(text);
      } catch (Error const& e) {
        throw ParseError(e.what(), line);
      }
    }

    std::vector<Word> parse_words(Alphabet const& A, Value const& v) {
      std::vector<Word> out;
      for (auto const& part : split(v.text, ';')) {
        out.push_back(parse_word(A, part, v.line));
      }
      return out;
    }

    std::shared_ptr<GroupBackend const> build_group(
        Section const& s, std::filesystem::path const& base_dir) {
      allow_only(s, {"kind", "rank", "torsion", "names", "table", "generators"});
      std::string const kind = require(s, "kind").text;
      std::vector<std::string> names;
      if (auto v = find(s, "names")) {
        names = split(v->text, ',');
      }
      try {
        if (kind == "abelian") {
          std::size_t rank = 0;
          if (auto v = find(s, "rank")) {
            rank = to_size(v->text, v->line);
          }
          std::vector<std::int64_t> torsion;
          if (auto v = find(s, "torsion")) {
            for (auto const& d : split(v->text, ',')) {
              torsion.push_back(static_cast<std::int64_t>(to_size(d, v->line)));
            }
          }
          return std::make_shared<AbelianGroup>(rank, torsion, names);
        }
        if (kind == "free") {
          auto const& v = require(s, "rank");
          return std::make_shared<FreeGroup>(to_size(v.text, v.line), names);
        }
        if (kind == "finite") {
          auto const& t = require(s, "table");
          auto const& g = require(s, "generators");
          std::vector<std::pair<std::string, std::size_t>> gens;
          for (auto const& item : split(g.text, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos) {
              throw ParseError("generator needs name:element", g.line);
            }
            gens.emplace_back(trim(item.substr(0, colon)),
                              to_size(trim(item.substr(colon + 1)), g.line));
          }
          std::filesystem::path p = t.text;
          if (p.is_relative()) {
            p = base_dir / p;
          }
          return std::make_shared<FiniteGroup>(FiniteGroup::from_csv(p.string(), gens));
        }
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError("group " + s.name + ": " + e.what(), s.line);
      }
      throw ParseError("unknown group kind " + kind, require(s, "kind").line);
    }

    std::shared_ptr<SubgroupContext const> build_subgroup(
        Section const& s, std::shared_ptr<GroupBackend const> const& G) {
      allow_only(s, {"generators", "names"});
      std::vector<Word> gens;
      if (auto v = find(s, "generators")) {
        gens = parse_words(G->alphabet(), *v);
      }
      std::vector<std::string> names;
      if (auto v = find(s, "names")) {
        names = split(v->text, ',');
      }
      try {
        if (auto A = std::dynamic_pointer_cast<AbelianGroup const>(G)) {
          return std::make_shared<AbelianSubgroup>(A, gens, names);
        }
        if (auto F = std::dynamic_pointer_cast<FiniteGroup const>(G)) {
          return std::make_shared<FiniteSubgroup>(F, gens, names);
        }
        if (auto F = std::dynamic_pointer_cast<FreeGroup const>(G)) {
          if (gens.empty()) {
            return std::make_shared<TrivialSubgroup>(F);
          }
          if (gens.size() != 1) {
            throw Error("free group subgroups must be cyclic");
          }
          return std::make_shared<FreeCyclicSubgroup>(
              F, gens[0], names.empty() ? "y1" : names[0]);
        }
      } catch (Error const& e) {
        throw ParseError("subgroup " + s.name + ": " + e.what(), s.line);
      }
      throw ParseError("unsupported group for subgroup " + s.name, s.line);
    }

    // y->word;... in the order of the subgroup generators
    std::vector<Word> parse_iso(Value const& v, Alphabet const& Y, Alphabet const& X) {
      std::vector<std::optional<Word>> images(Y.num_generators());
      for (auto const& item : split(v.text, ';')) {
        auto arrow = item.find("->");
        if (arrow == std::string::npos) {
          throw ParseError("iso entries are y->word", v.line);
        }
        std::string y = trim(item.substr(0, arrow));
        std::optional<std::size_t> j;
        for (std::size_t i = 0; i < Y.num_generators(); ++i) {
          if (Y.generator_name(i) == y) {
            j = i;
          }
        }
        if (!j) {
          throw ParseError("unknown subgroup generator " + y, v.line);
        }
        if (images[*j]) {
          throw ParseError("generator " + y + " mapped twice", v.line);
        }
        images[*j] = parse_word(X, item.substr(arrow + 2), v.line);
      }
      std::vector<Word> out;
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (!images[i]) {
          throw ParseError("iso misses generator " + Y.generator_name(i), v.line);
        }
        out.push_back(*images[i]);
      }
      return out;
    }

    struct EdgeLine {
      std::string name, from, to;
      Section     pairs;
    };

    void build_graph(ProjectConfig& cfg, Section const& s) {
      static std::regex const edge_re(
          R"(^edge\s+([^:\s]+)\s*:\s*(\S+)\s*->\s*(\S+)(.*)$)");
      std::vector<std::pair<std::string, std::string>> vertices;
      std::vector<EdgeLine>                             edges;
      std::optional<Value>                              tree;
      std::size_t                                       vertices_line = 0;
      for (auto const& [text, line] : s.lines) {
        std::smatch m;
        if (std::regex_match(text, m, edge_re)) {
          EdgeLine e{m[1], m[2], m[3], Section{"edge", m[1], "", line, {}, {}}};
          if (!trim(m[4]).empty()) {
            add_pairs(e.pairs, m[4], line);
          }
          allow_only(e.pairs, {"subgroup", "reverse_subgroup", "iso",
                               "reverse_iso", "reverse"});
          edges.push_back(std::move(e));
          continue;
        }
        for (auto& [k, v] : parse_pairs(text, line)) {
          if (k == "vertices" && vertices_line == 0) {
            vertices_line = line;
            for (auto const& item : split(v, ',')) {
              auto colon = item.find(':');
              if (colon == std::string::npos) {
                throw ParseError("vertices are name:group", line);
              }
              vertices.emplace_back(trim(item.substr(0, colon)),
                                    trim(item.substr(colon + 1)));
            }
          } else if (k == "tree" && !tree) {
            tree = Value{v, line};
          } else {
            throw ParseError("unexpected " + k + " in [graph]", line);
          }
        }
      }
      if (vertices.empty()) {
        throw ParseError("[graph] needs vertices", s.line);
      }

      DirectedGraph g;
      try {
        for (auto const& [v, grp] : vertices) {
          g.add_vertex(v);
        }
      } catch (Error const& e) {
        throw ParseError(e.what(), vertices_line);
      }
      for (auto const& e : edges) {
        auto u = g.find_vertex(e.from), v = g.find_vertex(e.to);
        if (!u || !v) {
          throw ParseError("edge " + e.name + " has an unknown endpoint",
                           e.pairs.line);
        }
        std::string rev = find(e.pairs, "reverse") ? find(e.pairs, "reverse")->text : "";
        try {
          g.add_edge(e.name, *u, *v, rev);
        } catch (Error const& err) {
          throw ParseError(err.what(), e.pairs.line);
        }
      }
      cfg.gog = std::make_shared<GraphOfGroups>(g);
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        auto it = cfg.groups.find(vertices[i].second);
        if (it == cfg.groups.end()) {
          throw ParseError("unknown group " + vertices[i].second, vertices_line);
        }
        cfg.gog->set_vertex_group(static_cast<VertexId>(i), it->second);
      }

      auto subgroup_at = [&](EdgeLine const& e, std::string const& key,
                             VertexId at) -> std::shared_ptr<SubgroupContext const> {
        auto const& v  = require(e.pairs, key);
        auto        it = cfg.subgroups.find(v.text);
        if (it == cfg.subgroups.end()) {
          throw ParseError("unknown subgroup " + v.text, v.line);
        }
        if (it->second.group != vertices[at].second) {
          throw ParseError("subgroup " + v.text + " is not in the group at "
                               + vertices[at].first,
                           v.line);
        }
        return it->second.context;
      };
      for (auto const& e : edges) {
        EdgeId   id  = *g.find_edge(e.name);
        EdgeId   rid = DirectedGraph::reverse(id);
        VertexId u = g.source(id), v = g.target(id);
        auto     sub  = subgroup_at(e, "subgroup", v);
        auto     rsub = subgroup_at(e, "reverse_subgroup", u);
        std::vector<Word> iso, riso;
        if (auto x = find(e.pairs, "iso")) {
          iso = parse_iso(*x, sub->subgroup_alphabet(), rsub->parent().alphabet());
        } else if (sub->generators().size() > 0) {
          throw ParseError("edge " + e.name + " needs iso", e.pairs.line);
        }
        auto rx = find(e.pairs, "reverse_iso");
        if (rx) {
          riso = parse_iso(*rx, rsub->subgroup_alphabet(), sub->parent().alphabet());
        }
        cfg.gog->set_edge(id, sub, iso);
        cfg.gog->set_edge(rid, rsub, riso);
        if (!rx && !rsub->generators().empty()) {
          try {
            cfg.gog->derive_reverse_iso(id);
          } catch (Error const& err) {
            cfg.problems.push_back(err.what());
          }
        }
      }

      if (!g.connected()) {
        return;  // reported by validate
      }
      try {
        if (tree) {
          std::vector<EdgeId> ids;
          for (auto const& name : split(tree->text, ',')) {
            auto id = g.find_edge(name);
            if (!id) {
              throw ParseError("unknown tree edge " + name, tree->line);
            }
            ids.push_back(*id);
          }
          cfg.tree = tree_from_edges(g, ids);
        } else {
          cfg.tree = maximal_tree(g);
        }
      } catch (ParseError const&) {
        throw;
      } catch (Error const& err) {
        throw ParseError(err.what(), tree ? tree->line : s.line);
      }
    }
  }  // namespace

  Mode parse_mode(std::string const& text) {
    if (text == "synchronous" || text == "sync") {
      return Mode::synchronous;
    }
    if (text == "asynchronous" || text == "async") {
      return Mode::asynchronous;
    }
    throw Error("unknown mode " + text);
  }

  ProjectConfig parse_config(std::istream& in, std::filesystem::path const& base_dir) {
    static std::regex const header_re(R"(^\[\s*(\w+)(?:\s+(\S+))?(?:\s+in\s+(\S+))?\s*\]$)");
    std::vector<Section> sections;
    std::string          raw;
    std::size_t          line = 0;
    while (std::getline(in, raw)) {
      ++line;
      std::string text = trim(raw.substr(0, raw.find('#')));
      if (text.empty()) {
        continue;
      }
      if (text.front() == '[') {
        std::smatch m;
        if (!std::regex_match(text, m, header_re)) {
          throw ParseError("malformed section header", line);
        }
        Section s{m[1], m[2], m[3], line, {}, {}};
        bool named = s.kind == "group" || s.kind == "subgroup";
        bool known = named || s.kind == "graph" || s.kind == "coset"
                     || s.kind == "params";
        if (!known) {
          throw ParseError("unknown section " + s.kind, line);
        }
        if (named == s.name.empty() || (s.kind == "subgroup") == s.parent.empty()) {
          throw ParseError("malformed [" + s.kind + "] header", line);
        }
        for (auto const& t : sections) {
          if (!named && t.kind == s.kind) {
            throw ParseError("duplicate [" + s.kind + "] section", line);
          }
          if ((s.kind == "group" || s.kind == "subgroup")
              && (t.kind == "group" || t.kind == "subgroup") && t.name == s.name) {
            throw ParseError("duplicate name " + s.name, line);
          }
        }
        sections.push_back(std::move(s));
        continue;
      }
      if (sections.empty()) {
        throw ParseError("text before the first section", line);
      }
      if (sections.back().kind == "graph") {
        sections.back().lines.emplace_back(text, line);
      } else {
        add_pairs(sections.back(), text, line);
      }
    }

    ProjectConfig cfg;
    for (auto const& s : sections) {
      if (s.kind == "group") {
        cfg.groups.emplace(s.name, build_group(s, base_dir));
        cfg.group_order.push_back(s.name);
      }
    }
    for (auto const& s : sections) {
      if (s.kind == "subgroup") {
        auto it = cfg.groups.find(s.parent);
        if (it == cfg.groups.end()) {
          throw ParseError("unknown group " + s.parent, s.line);
        }
        cfg.subgroups.emplace(s.name, SubgroupDecl{s.parent, build_subgroup(s, it->second)});
      }
    }
    for (auto const& s : sections) {
      if (s.kind == "graph") {
        build_graph(cfg, s);
      } else if (s.kind == "params") {
        for (auto const& [k, v] : s.values) {
          cfg.params[k] = v.text;
        }
      } else if (s.kind == "coset") {
        allow_only(s, {"subgroup", "edge", "mode"});
        CosetDecl c;
        if (auto v = find(s, "subgroup")) {
          if (!cfg.subgroups.count(v->text)) {
            throw ParseError("unknown subgroup " + v->text, v->line);
          }
          c.subgroup = v->text;
        }
        if (auto v = find(s, "edge")) {
          c.edge = v->text;
        }
        if (c.subgroup.has_value() == c.edge.has_value()) {
          throw ParseError("[coset] needs exactly one of subgroup= and edge=", s.line);
        }
        if (auto v = find(s, "mode")) {
          try {
            c.mode = parse_mode(v->text);
          } catch (Error const& e) {
            throw ParseError(e.what(), v->line);
          }
        }
        cfg.coset = c;
      }
    }
    if (cfg.coset && cfg.coset->edge
        && (!cfg.gog || !cfg.gog->graph().find_edge(*cfg.coset->edge))) {
      throw ParseError("[coset] names an unknown edge " + *cfg.coset->edge);
    }
    return cfg;
  }

  ProjectConfig load_config(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot read " + path.string());
    }
    return parse_config(in, path.parent_path());
  }

  std::size_t ProjectConfig::param(std::string const& key, std::size_t fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : to_size(it->second, 0);
  }

  std::vector<std::string> ProjectConfig::validate() const {
    std::vector<std::string> out = problems;
    if (gog) {
      for (auto& p : gog->validate()) {
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  std::shared_ptr<Pi1 const> ProjectConfig::pi1() const {
    if (!gog) {
      throw Error("the config has no [graph]");
    }
    auto bad = validate();
    if (!bad.empty()) {
      throw Error("invalid graph of groups: " + bad.front());
    }
    return std::make_shared<Pi1>(gog, tree);
  }

  CosetSystem ProjectConfig::coset_system() const {
    if (!coset) {
      throw Error("the config has no [coset] section");
    }
    if (coset->subgroup) {
      return make_coset_system(subgroups.at(*coset->subgroup).context, coset->mode);
    }
    auto p = pi1();
    auto e = *p->gog().graph().find_edge(*coset->edge);
    return make_coset_system(std::make_shared<Pi1CosetContext>(p, e), coset->mode);
  }

}  // namespace higgins
