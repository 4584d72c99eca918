#pragma once
#include <stdexcept>
#include <string>

namespace unikh {

// Every failure mode the engine reports deliberately.  Anything else escaping
// a public entry point is a bug.
enum class Err {
  MalformedSyntax,          // PD text does not match the grammar
  InvalidIncidence,         // an arc label does not occur exactly twice
  OrientationInconsistent,  // arcs cannot be oriented coherently
  InvalidArc,               // named arc not present in the diagram
  StateLengthMismatch,      // state has wrong number of bits for the diagram
  SizeLimitExceeded,        // crossing count above the configured limit
  NoSignAssignment,         // odd sign system is infeasible (never for PD input)
  ParityViolation,          // unified scalar with e != o (mod 2)
  NoBasepoint,              // reduced theory requested without a basepoint
  NotAComplex,              // d^2 != 0
  NotACycle,                // coordinatize() called on a non-cycle
  InternalParity,           // integral lift not divisible by 2; internal bug
  TheoryMismatch,           // operation composed across incompatible theories
  ConventionMismatch,       // cached record from a different engine version
  FileUnreadable,           // file missing or unreadable
  CacheCorrupt,             // cache record fails its checksum
  Overflow,                 // checked integer arithmetic overflowed
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg);
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& msg);

}  // namespace unikh
