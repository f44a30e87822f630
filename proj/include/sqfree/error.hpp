#ifndef SQFREE_ERROR_HPP_
#define SQFREE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqfree {

  // Base for every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input text: a word, a morphism file, a flag value.
  class ParseError : public Error {
   public:
    explicit ParseError(std::string const& msg, std::size_t line = 0)
        : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
          _line(line) {}

    // 1-based line number, 0 when not applicable.
    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // A generator or search ran out of its step or length budget.
  class BudgetExhausted : public Error {
   public:
    using Error::Error;
  };

  // Precondition violation (wrong alphabet, k = 0, empty pattern, ...).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

}  // namespace sqfree

#endif  // SQFREE_ERROR_HPP_
