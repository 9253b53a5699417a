#pragma once

#include <stdexcept>
#include <string>

namespace pal {

// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A formula mentions an atom or agent the model (or scope) does not declare.
struct UnknownSymbol : Error {
  UnknownSymbol(const std::string& kind, const std::string& name)
      : Error("unknown " + kind + " '" + name + "'"), kind_(kind), name_(name) {}

  const std::string& kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  std::string kind_;
  std::string name_;
};

// Malformed model, relation universe mismatch, empty restriction, ...
struct ModelError : Error {
  using Error::Error;
};

// Formula and checking scope disagree, or the scope itself is malformed.
struct ScopeError : Error {
  using Error::Error;
};

}  // namespace pal
