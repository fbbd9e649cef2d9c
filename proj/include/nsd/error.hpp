#pragma once

#include <stdexcept>
#include <string>

namespace nsd {

enum class ErrorKind {
  MalformedMatching,
  SlotOutOfRange,
  EmptyDiagram,
  DisconnectedDiagram,
  CrossingOutOfRange,
  Parse,
  NotAlternating,
  NotColourable,
  OrientableBase,
  NotTorus,
  NonCoprimeSlope,
  MissingMarking,
  InvalidMarking,
  MalformedCurve,
  OddIntersectionWithColouring,
  BoundTooLarge,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Input-format error carrying the location of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::string file, int line, std::string token, const std::string& what);

  const std::string& file() const noexcept { return file_; }
  int line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::string file_;
  int line_;
  std::string token_;
};

}  // namespace nsd
