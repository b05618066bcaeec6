#include "higgins/dfa_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "higgins/error.hpp"

namespace higgins {

  void write_dfa(std::ostream& out, Dfa const& A) {
    out << "dfa " << A.name() << '\n';
    out << "alphabet";
    for (auto const& s : A.symbols()) {
      out << ' ' << s;
    }
    out << '\n';
    out << "states " << A.num_states() << " start " << A.start() << '\n';
    out << "accept";
    for (State s = 0; s < static_cast<State>(A.num_states()); ++s) {
      if (A.is_accepting(s)) {
        out << ' ' << s;
      }
    }
    out << '\n';
    for (State s = 0; s < static_cast<State>(A.num_states()); ++s) {
      for (Letter a = 0; a < A.num_symbols(); ++a) {
        if (A.next(s, a) != no_state) {
          out << "trans " << s << ' ' << A.symbols()[a] << ' ' << A.next(s, a)
              << '\n';
        }
      }
    }
  }

  std::string to_string(Dfa const& A) {
    std::ostringstream out;
    write_dfa(out, A);
    return out.str();
  }

  namespace {
    long parse_int(std::string const& tok, std::size_t line) {
      try {
        std::size_t pos = 0;
        long        v   = std::stol(tok, &pos);
        if (pos != tok.size()) {
          throw ParseError("expected an integer, got \"" + tok + "\"", line);
        }
        return v;
      } catch (std::logic_error const&) {
        throw ParseError("expected an integer, got \"" + tok + "\"", line);
      }
    }
  }  // namespace

  Dfa read_dfa(std::istream& in) {
    std::string                             raw;
    std::size_t                             line_no = 0;
    int                                     stage   = 0;
    std::string                             name;
    std::vector<std::string>                symbols;
    std::unordered_map<std::string, Letter> index;
    Dfa                                     A;
    while (std::getline(in, raw)) {
      ++line_no;
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.erase(hash);
      }
      std::istringstream       ls(raw);
      std::vector<std::string> tok;
      for (std::string t; ls >> t;) {
        tok.push_back(t);
      }
      if (tok.empty()) {
        continue;
      }
      switch (stage) {
        case 0:
          if (tok[0] != "dfa") {
            throw ParseError("expected \"dfa <name>\"", line_no);
          }
          name  = tok.size() > 1 ? tok[1] : "";
          stage = 1;
          break;
        case 1:
          if (tok[0] != "alphabet") {
            throw ParseError("expected \"alphabet ...\"", line_no);
          }
          symbols.assign(tok.begin() + 1, tok.end());
          for (Letter a = 0; a < symbols.size(); ++a) {
            if (!index.emplace(symbols[a], a).second) {
              throw ParseError("duplicate symbol \"" + symbols[a] + "\"",
                               line_no);
            }
          }
          stage = 2;
          break;
        case 2: {
          if (tok.size() != 4 || tok[0] != "states" || tok[2] != "start") {
            throw ParseError("expected \"states N start S\"", line_no);
          }
          long n = parse_int(tok[1], line_no);
          long s = parse_int(tok[3], line_no);
          if (n < 0 || s < -1 || s >= n) {
            throw ParseError("state count or start state out of range",
                             line_no);
          }
          A = Dfa(symbols, static_cast<std::size_t>(n));
          A.set_name(name);
          A.set_start(static_cast<State>(s));
          stage = 3;
          break;
        }
        case 3:
          if (tok[0] != "accept") {
            throw ParseError("expected \"accept ...\"", line_no);
          }
          for (std::size_t i = 1; i < tok.size(); ++i) {
            long s = parse_int(tok[i], line_no);
            if (s < 0 || s >= static_cast<long>(A.num_states())) {
              throw ParseError("accepting state out of range", line_no);
            }
            A.set_accepting(static_cast<State>(s));
          }
          stage = 4;
          break;
        default: {
          if (tok.size() != 4 || tok[0] != "trans") {
            throw ParseError("expected \"trans <from> <symbol> <to>\"",
                             line_no);
          }
          long from = parse_int(tok[1], line_no);
          long to   = parse_int(tok[3], line_no);
          auto it   = index.find(tok[2]);
          if (it == index.end()) {
            throw ParseError("unknown symbol \"" + tok[2] + "\"", line_no);
          }
          long n = static_cast<long>(A.num_states());
          if (from < 0 || from >= n || to < 0 || to >= n) {
            throw ParseError("transition state out of range", line_no);
          }
          if (A.next(static_cast<State>(from), it->second) != no_state) {
            throw ParseError("nondeterministic transition", line_no);
          }
          A.set_transition(
              static_cast<State>(from), it->second, static_cast<State>(to));
        }
      }
    }
    if (stage < 4) {
      throw ParseError("truncated DFA file", line_no);
    }
    return A;
  }

  Dfa read_dfa_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open \"" + path + "\"");
    }
    return read_dfa(in);
  }

  void write_dfa_file(std::string const& path, Dfa const& A) {
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write \"" + path + "\"");
    }
    write_dfa(out, A);
  }

}  // namespace higgins
