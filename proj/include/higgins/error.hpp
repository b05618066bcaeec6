#ifndef HIGGINS_ERROR_HPP_
#define HIGGINS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace higgins {

  // Base class for every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed text input (words, DFA files, configs). Carries the 1-based
  // line number when one is known, 0 otherwise.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line = 0)
        : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace higgins

#endif  // HIGGINS_ERROR_HPP_
