#pragma once

#include <stdexcept>
#include <string>

namespace latgraph {

// Broad failure categories. The CLI maps these onto exit codes.
enum class ErrorKind {
  InvalidParameter,   // bad constructor argument or malformed request
  Syntax,             // group expression / file could not be parsed
  Io,                 // file could not be read
  InvalidGroup,       // table fails a group axiom
  TooLarge,           // an order or closure cap was exceeded
  Timeout,            // isomorphism search budget exhausted
  InvalidLattice,     // lattice input violates a structural invariant
  NotEnhancedPowerGraph,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::InvalidLattice: return "InvalidLattice";
    case ErrorKind::NotEnhancedPowerGraph: return "NotAnEnhancedPowerGraph";
  }
  return "Error";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

}  // namespace latgraph
