// higgins: command-line front end.
//
// Exit codes: 0 pass, 1 property failure, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "higgins/certifier.hpp"
#include "higgins/config.hpp"
#include "higgins/dfa_io.hpp"
#include "higgins/error.hpp"
#include "higgins/trefoil.hpp"

using namespace higgins;

namespace {
  constexpr int exit_fail  = 1;
  constexpr int exit_usage = 2;

  struct Options {
    int         jobs = 0;
    std::string config;
    std::string out_dir;

    // nf
    std::string word;
    std::string base;
    std::string coset_edge;
    bool        trace = false;

    // enum
    std::string language = "higgins";
    std::size_t max_len  = 4;
    std::string vertex;
    std::string group;
    bool        check_unique = false;

    // certify
    std::string what = "coset";
    std::size_t radius      = 4;
    std::size_t ball_radius = 0;
    std::string mode;
    std::string theorem = "async";
    std::size_t mu_max = 3, lambda_max = 3;

    // fsa
    std::vector<std::string> files;
  };

  Execution execution(Options const& o) {
    int jobs = o.jobs > 0 ? o.jobs : default_jobs();
    return jobs > 1 ? Execution::threads(jobs) : Execution::serial();
  }

  std::string show(Alphabet const& A, Word const& w) {
    return w.empty() ? "ε" : A.format(w);
  }

  // Prints the text and writes it to <out_dir>/<name> when asked.
  void emit(Options const& o, std::string const& name, std::string const& text) {
    std::cout << text;
    if (!o.out_dir.empty()) {
      std::filesystem::create_directories(o.out_dir);
      std::ofstream f(std::filesystem::path(o.out_dir) / name);
      if (!f) {
        throw Error("cannot write " + o.out_dir + "/" + name);
      }
      f << text;
    }
  }

  VertexId vertex_named(Pi1 const& pi, std::string const& name) {
    if (name.empty()) {
      return pi.tree().root;
    }
    auto v = pi.gog().graph().find_vertex(name);
    if (!v) {
      throw Error("unknown vertex " + name);
    }
    return *v;
  }

  EdgeId edge_named(Pi1 const& pi, std::string const& name) {
    auto e = pi.gog().graph().find_edge(name);
    if (!e) {
      throw Error("unknown edge " + name);
    }
    return *e;
  }

  int cmd_validate(Options const& o) {
    ProjectConfig cfg = load_config(o.config);
    Report        rep;
    rep.property = "validate";
    rep.param("groups", std::to_string(cfg.groups.size()));
    rep.param("subgroups", std::to_string(cfg.subgroups.size()));
    if (cfg.gog) {
      rep.param("vertices", std::to_string(cfg.gog->graph().num_vertices()));
      rep.param("edges", std::to_string(cfg.gog->graph().num_edges() / 2));
    }
    for (auto const& p : cfg.validate()) {
      rep.add_witness(p);
    }
    if (rep.pass() && cfg.gog) {
      // builds the component languages as well
      auto pi = cfg.pi1();
      rep.set("alphabet", std::to_string(pi->alphabet().num_generators()));
    }
    emit(o, "validate.report", rep.str());
    return rep.pass() ? 0 : exit_fail;
  }

  int cmd_nf(Options const& o) {
    ProjectConfig   cfg = load_config(o.config);
    auto            pi  = cfg.pi1();
    Alphabet const& X   = pi->alphabet();
    Word            w   = X.parse(o.word == "ε" ? "" : o.word);
    CascadeTrace    trace;
    std::ostringstream out;
    if (!o.coset_edge.empty()) {
      EdgeId  e    = edge_named(*pi, o.coset_edge);
      Pi1Base base = pi->coset_base(e);
      Word    h;
      Word    nf = pi->deflated(pi->reduce(pi->split(w, base.vertex), base, &trace, &h));
      out << show(X, nf) << '\n';
      out << "h=" << show(pi->gog().edge_group(e).subgroup_alphabet(), h) << '\n';
      if (o.trace) {
        out << pi->format_trace(trace, base);
      }
    } else {
      Pi1Base base = pi->group_base(vertex_named(*pi, o.base));
      Word    nf   = pi->deflated(pi->reduce(pi->split(w, base.vertex), base, &trace));
      out << show(X, nf) << '\n';
      if (o.trace) {
        out << pi->format_trace(trace, base);
      }
    }
    emit(o, "nf.txt", out.str());
    return 0;
  }

  int cmd_enum(Options const& o) {
    ProjectConfig cfg = load_config(o.config);
    Language      L;
    // u ~ v when they name the same element (or coset)
    std::function<bool(Word const&, Word const&)> same;
    std::shared_ptr<Pi1 const>                    pi;
    if (o.language == "higgins") {
      pi = cfg.pi1();
      if (!o.coset_edge.empty()) {
        EdgeId e = edge_named(*pi, o.coset_edge);
        L        = pi->higgins_language(pi->coset_base(e));
        auto ctx = std::make_shared<Pi1CosetContext>(pi, e);
        same     = [ctx](Word const& u, Word const& v) { return ctx->same_coset(u, v); };
      } else {
        VertexId v = vertex_named(*pi, o.base);
        L          = pi->higgins_language(pi->group_base(v));
        same       = [pi, v](Word const& a, Word const& b) {
          return pi1_word_problem(*pi, v, a, b);
        };
      }
    } else if (o.language == "coset") {
      CosetSystem sys = cfg.coset_system();
      L               = sys.language;
      auto ctx        = sys.context;
      same = [ctx](Word const& u, Word const& v) { return ctx->same_coset(u, v); };
    } else if (o.language == "component") {
      std::shared_ptr<GroupBackend const> G;
      if (!o.vertex.empty()) {
        pi = cfg.pi1();
        G  = pi->gog().vertex_group_ptr(vertex_named(*pi, o.vertex));
      } else {
        std::string name = o.group;
        if (name.empty()) {
          if (cfg.group_order.size() != 1) {
            throw Error("component needs --vertex or --group");
          }
          name = cfg.group_order.front();
        }
        if (!cfg.groups.count(name)) {
          throw Error("unknown group " + name);
        }
        G = cfg.groups.at(name);
      }
      L    = G->canonical_language();
      same = [G](Word const& u, Word const& v) { return G->equal(u, v); };
    } else {
      throw Error("unknown language " + o.language);
    }

    std::vector<Word>  words = L.enumerate(o.max_len);
    std::ostringstream out;
    for (auto const& w : words) {
      out << show(L.alphabet(), w) << '\n';
    }
    int code = 0;
    if (o.check_unique) {
      std::size_t clashes = 0;
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
          if (same(words[i], words[j])) {
            out << "# duplicate " << show(L.alphabet(), words[i]) << " = "
                << show(L.alphabet(), words[j]) << '\n';
            ++clashes;
          }
        }
      }
      out << "# " << words.size() << " words, " << clashes << " duplicates\n";
      code = clashes == 0 ? 0 : exit_fail;
    }
    emit(o, "enum.txt", out.str());
    return code;
  }

  int cmd_certify(Options const& o) {
    ProjectConfig cfg  = load_config(o.config);
    Execution     exec = execution(o);
    std::size_t   r    = o.radius;
    if (o.what == "coset") {
      CosetSystem sys = cfg.coset_system();
      if (!o.mode.empty()) {
        sys.mode = parse_mode(o.mode);
      }
      auto cert = certify_coset_system(sys, r, exec, o.ball_radius);
      emit(o, "coset.certificate", cert.str());
      return cert.bounded() ? 0 : exit_fail;
    }
    if (o.what == "automatic") {
      Mode mode = o.mode.empty() ? Mode::synchronous : parse_mode(o.mode);
      std::shared_ptr<GroupBackend const> G;
      Language                            L;
      if (cfg.gog && o.group.empty()) {
        auto pi = cfg.pi1();
        auto v  = vertex_named(*pi, o.base);
        G       = std::make_shared<Pi1Backend>(pi, v);
        L       = G->canonical_language();
      } else {
        std::string name = o.group.empty() ? cfg.group_order.at(0) : o.group;
        if (!cfg.groups.count(name)) {
          throw Error("unknown group " + name);
        }
        G = cfg.groups.at(name);
        L = G->canonical_language();
      }
      auto cert = certify_automatic(L, G, r, mode, exec, o.ball_radius);
      emit(o, "automatic.certificate", cert.str());
      return cert.bounded() ? 0 : exit_fail;
    }
    if (o.what == "hypotheses") {
      if (!cfg.gog) {
        throw Error("the config has no [graph]");
      }
      auto bad = cfg.validate();
      if (!bad.empty()) {
        throw Error("invalid graph of groups: " + bad.front());
      }
      HypothesisOptions opts;
      opts.radius     = r;
      opts.mu_max     = o.mu_max;
      opts.lambda_max = o.lambda_max;
      opts.theorem    = parse_mode(o.theorem);
      Report rep      = combination_hypotheses_report(*cfg.gog, opts, exec);
      emit(o, "hypotheses.report", rep.str());
      return rep.pass() ? 0 : exit_fail;
    }
    if (o.what == "sync-filter") {
      FilteredSystem f = geodesic_coset_filter(cfg.coset_system(), r);
      f.system.mode    = Mode::synchronous;
      auto cert        = certify_coset_system(f.system, r, exec, o.ball_radius);
      emit(o, "sync-filter.report", f.coverage.str() + cert.str());
      return f.coverage.pass() && cert.bounded() ? 0 : exit_fail;
    }
    throw Error("unknown --what " + o.what);
  }

  int cmd_trefoil(Options const& o) {
    Report rep = trefoil_crossover_experiment(o.radius, o.lambda_max, execution(o));
    emit(o, "trefoil.report", rep.str());
    return rep.pass() ? 0 : exit_fail;
  }

  std::string format_dfa_word(Dfa const& A, Word const& w) {
    if (w.empty()) {
      return "ε";
    }
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      s += (i ? " " : "") + A.symbols()[w[i]];
    }
    return s;
  }

  int cmd_fsa(Options const& o, std::string const& op) {
    std::vector<Dfa> in;
    for (auto const& f : o.files) {
      in.push_back(read_dfa_file(f));
    }
    auto need = [&](std::size_t n) {
      if (in.size() != n) {
        throw Error("fsa " + op + " takes " + std::to_string(n) + " file(s)");
      }
    };
    if (op == "enum") {
      need(1);
      std::ostringstream out;
      for (auto const& w : enumerate(in[0], o.max_len)) {
        out << format_dfa_word(in[0], w) << '\n';
      }
      emit(o, "enum.txt", out.str());
      return 0;
    }
    Dfa result;
    if (op == "min") {
      need(1);
      result = minimize(in[0]);
    } else if (op == "concat") {
      need(2);
      result = minimize(concat(in[0], in[1]));
    } else {
      need(2);
      result = minimize(intersect(in[0], in[1]));
    }
    emit(o, op + ".dfa", to_string(result));
    return 0;
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higgins normal forms and coset automatic structures"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-j,--jobs", o.jobs, "worker threads (default: HIGGINS_JOBS)");
  app.add_option("--out", o.out_dir, "also write the output into this directory");

  auto* validate = app.add_subcommand("validate", "check a configuration");
  validate->add_option("config", o.config)->required();

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("config", o.config)->required();
  nf->add_option("-w,--word", o.word, "word over the deflated alphabet")->required();
  nf->add_option("--base", o.base, "base vertex (default: tree root)");
  nf->add_option("--coset-edge", o.coset_edge, "coset normal form for this edge");
  nf->add_flag("--trace", o.trace, "print the cascade steps");

  auto* en = app.add_subcommand("enum", "enumerate a language");
  en->add_option("config", o.config)->required();
  en->add_option("--language", o.language)
      ->check(CLI::IsMember({"higgins", "coset", "component"}));
  en->add_option("-n,--max-len", o.max_len);
  en->add_option("--base", o.base);
  en->add_option("--coset-edge", o.coset_edge);
  en->add_option("--vertex", o.vertex);
  en->add_option("--group", o.group);
  en->add_flag("--check-unique", o.check_unique);

  auto* cert = app.add_subcommand("certify", "certify a structure or the hypotheses");
  cert->add_option("config", o.config)->required();
  cert->add_option("--what", o.what)
      ->check(CLI::IsMember({"coset", "automatic", "hypotheses", "sync-filter"}));
  cert->add_option("-r,--radius", o.radius);
  cert->add_option("--ball-radius", o.ball_radius);
  cert->add_option("--mode", o.mode)
      ->check(CLI::IsMember({"sync", "async", "synchronous", "asynchronous"}));
  cert->add_option("--theorem", o.theorem)
      ->check(CLI::IsMember({"sync", "async", "synchronous", "asynchronous"}));
  cert->add_option("--mu-max", o.mu_max);
  cert->add_option("--lambda-max", o.lambda_max);
  cert->add_option("--base", o.base);
  cert->add_option("--group", o.group);

  auto* exp = app.add_subcommand("experiment", "run an experiment");
  exp->require_subcommand(1);
  exp->fallthrough();
  auto* tre = exp->add_subcommand("trefoil", "limited crossover of <x, d> in B_3");
  o.radius     = 4;
  tre->add_option("-r,--radius", o.radius);
  tre->add_option("-m,--lambda-max", o.lambda_max);

  auto*       fsa = app.add_subcommand("fsa", "automaton operations on DFA files");
  std::string fsa_op;
  fsa->add_option("op", fsa_op)
      ->required()
      ->check(CLI::IsMember({"min", "concat", "intersect", "enum"}));
  fsa->add_option("files", o.files)->required();
  fsa->add_option("-n,--max-len", o.max_len);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*validate) {
      return cmd_validate(o);
    }
    if (*nf) {
      return cmd_nf(o);
    }
    if (*en) {
      return cmd_enum(o);
    }
    if (*cert) {
      return cmd_certify(o);
    }
    if (*tre) {
      return cmd_trefoil(o);
    }
    if (*fsa) {
      return cmd_fsa(o, fsa_op);
    }
  } catch (std::exception const& e) {
    std::cerr << "higgins: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
