#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syncon {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Bad input or a violated precondition. The CLI maps this to exit code 1.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // Syntax or validation error in one of the text formats.
  class ParseError : public DomainError {
   public:
    ParseError(std::size_t line, std::string const& what, std::string const& path = {})
        : DomainError((path.empty() ? "" : path + ": ") + "line " + std::to_string(line) + ": "
                      + what),
          line_(line),
          message_(what) {}

    std::size_t line() const noexcept {
      return line_;
    }

    // The message without the location prefix.
    std::string const& message() const noexcept {
      return message_;
    }

   private:
    std::size_t line_;
    std::string message_;
  };

  // A mathematical invariant that must hold for every input was found broken,
  // which means there is a bug in the library. The CLI maps this to exit code 2.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

}  // namespace syncon
