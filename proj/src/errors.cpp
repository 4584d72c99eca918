#include "unikh/errors.hpp"

namespace unikh {

const char* err_name(Err e) {
  switch (e) {
    case Err::MalformedSyntax: return "MalformedSyntax";
    case Err::InvalidIncidence: return "InvalidIncidence";
    case Err::OrientationInconsistent: return "OrientationInconsistent";
    case Err::InvalidArc: return "InvalidArc";
    case Err::StateLengthMismatch: return "StateLengthMismatch";
    case Err::SizeLimitExceeded: return "SizeLimitExceeded";
    case Err::NoSignAssignment: return "NoSignAssignment";
    case Err::ParityViolation: return "ParityViolation";
    case Err::NoBasepoint: return "NoBasepoint";
    case Err::NotAComplex: return "NotAComplex";
    case Err::NotACycle: return "NotACycle";
    case Err::InternalParity: return "InternalParity";
    case Err::TheoryMismatch: return "TheoryMismatch";
    case Err::ConventionMismatch: return "ConventionMismatch";
    case Err::FileUnreadable: return "FileUnreadable";
    case Err::CacheCorrupt: return "CacheCorrupt";
    case Err::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(Err code, const std::string& msg)
    : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace unikh
