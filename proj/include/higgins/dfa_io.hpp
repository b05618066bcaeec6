// Text serialization of Dfa:
//
//   dfa <name>
//   alphabet <symbol> <symbol> ...
//   states <N> start <S>
//   accept <s> <s> ...
//   trans <from> <symbol> <to>      (one line per transition)
//
// Blank lines and text after '#' are ignored when reading.

#ifndef HIGGINS_DFA_IO_HPP_
#define HIGGINS_DFA_IO_HPP_

#include <iosfwd>
#include <string>

#include "higgins/dfa.hpp"

namespace higgins {

  void        write_dfa(std::ostream& out, Dfa const& A);
  std::string to_string(Dfa const& A);

  // Throws ParseError with the offending line number.
  Dfa read_dfa(std::istream& in);
  Dfa read_dfa_file(std::string const& path);
  void write_dfa_file(std::string const& path, Dfa const& A);

}  // namespace higgins

#endif  // HIGGINS_DFA_IO_HPP_
