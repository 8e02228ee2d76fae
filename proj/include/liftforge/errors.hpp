#pragma once

#include <stdexcept>
#include <string>

namespace liftforge {

// Input could not be parsed (bad spec file, bad flag value).  CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid input: a bases list failing exchange, a Cayley table
// failing the group laws, a representation whose column matroid disagrees
// with the declared matroid.  Carries a witness in the message.  Exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed the configured desk-scale limits.  Exit code 3.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A condition the construction needs was found false (e.g. constructing a
// lift whose circuit-space matroid fails the closure condition).  The message
// carries the witness.  Exit code 1 when surfaced through the CLI.
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace liftforge
