#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tamari {

// Category of a domain validation failure. Each value mirrors one of the
// documented error conditions of the library operations.
enum class ErrorCode {
  Cycle,              // antisymmetry violated in a relation closure
  AxiomViolation,     // interval-poset axiom broken (reported with its triple)
  DuplicateParent,    // a vertex would need two incomparable cover parents
  NotAnInterval,      // tree pair is not ordered, combined relations invalid
  SizeMismatch,       // operands of different sizes
  NoLeftChild,        // rotation pivot has no left child
  OutOfRange,         // index or label outside the valid range
  EmptyPoset,         // decomposition of the empty poset
  ROutOfRange,        // composition parameter r outside its statistic bound
  InputBelowMinusOne, // flow input < -1
  NegativeRate,       // flow with a negative outgoing rate
  NotClosed,          // operation requires a closed flow
  NoSource,           // leak without a source (internal consistency failure)
  NotDivisible,       // polynomial does not vanish at x = 1
  NonIntegerResult,   // exact division left a remainder
  UnknownVariable,    // substitution variable outside {x, z}
  MalformedPath,      // step sequence is not a Dyck path
  Internal,           // invariant breached; indicates a library bug
};

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the text readers; offset is a 0-based position into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tamari
