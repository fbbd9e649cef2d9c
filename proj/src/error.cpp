#include "nsd/error.hpp"

namespace nsd {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedMatching: return "MalformedMatching";
    case ErrorKind::SlotOutOfRange: return "SlotOutOfRange";
    case ErrorKind::EmptyDiagram: return "EmptyDiagram";
    case ErrorKind::DisconnectedDiagram: return "DisconnectedDiagram";
    case ErrorKind::CrossingOutOfRange: return "CrossingOutOfRange";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::NotColourable: return "NotColourable";
    case ErrorKind::OrientableBase: return "OrientableBase";
    case ErrorKind::NotTorus: return "NotTorus";
    case ErrorKind::NonCoprimeSlope: return "NonCoprimeSlope";
    case ErrorKind::MissingMarking: return "MissingMarking";
    case ErrorKind::InvalidMarking: return "InvalidMarking";
    case ErrorKind::MalformedCurve: return "MalformedCurve";
    case ErrorKind::OddIntersectionWithColouring: return "OddIntersectionWithColouring";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::string file, int line, std::string token, const std::string& what)
    : Error(ErrorKind::Parse,
            file + ":" + std::to_string(line) + ": " + what + " (at '" + token + "')"),
      file_(std::move(file)),
      line_(line),
      token_(std::move(token)) {}

}  // namespace nsd
