#pragma once

#include <stdexcept>
#include <string>

namespace sgm {

enum class ErrorKind {
    coefficient_mismatch,
    degree_cap,
    invalid_argument,
    precondition,
    structural,
    syntax,
    grammar,
    unsupported,
    internal,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `kind` selects the CLI exit code;
/// `clause` names the construction rule that was violated, when there is one.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what, std::string clause = {})
        : std::runtime_error(what), kind_(kind), clause_(std::move(clause))
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& clause() const noexcept { return clause_; }

  private:
    ErrorKind kind_;
    std::string clause_;
};

/// Parse failure carrying the 0-based character offset.
class SyntaxError : public Error {
  public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(ErrorKind::syntax, what + " at position " + std::to_string(position)),
          position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what, std::string clause = {})
{
    throw Error(kind, what, std::move(clause));
}

}  // namespace sgm
