#pragma once

#include <stdexcept>
#include <string>

namespace treealg {

enum class ErrorKind {
  invalid_argument,
  not_found,
  resource_limit,
  precondition_violation,
};

// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(what), _kind(kind) {}

  ErrorKind kind() const noexcept { return _kind; }

 private:
  ErrorKind _kind;
};

[[noreturn]] inline void throw_invalid(std::string const& what) {
  throw Error(ErrorKind::invalid_argument, what);
}

[[noreturn]] inline void throw_not_found(std::string const& what) {
  throw Error(ErrorKind::not_found, what);
}

[[noreturn]] inline void throw_resource(std::string const& what) {
  throw Error(ErrorKind::resource_limit, what);
}

[[noreturn]] inline void throw_precondition(std::string const& what) {
  throw Error(ErrorKind::precondition_violation, what);
}

char const* to_string(ErrorKind kind) noexcept;

}  // namespace treealg
