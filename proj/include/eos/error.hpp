#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eos {

enum class ErrorCode {
  InvalidSequence,
  UnsupportedSize,
  WrongLength,
  NegativeMass,
  MassNotOne,
  EpsilonOutOfRange,
  TooFewMoments,
  NonSymmetric,
  NotRepresentable,
  RankDetectionAmbiguous,
  RecoveryFailed,
  IntegrationFailure,
  DegenerateInput,
  SyntaxError,
  SchemaVersionMismatch,
  InvariantViolation,
  UnsupportedFormat,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type. The code is
// what callers branch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  // Located variants used by the document parser.
  Error(ErrorCode code, const std::string& what, std::string path)
      : std::runtime_error(std::string(to_string(code)) + " at " + path + ": " + what),
        code_(code),
        path_(std::move(path)) {}
  Error(ErrorCode code, const std::string& what, int line, int column)
      : std::runtime_error(std::string(to_string(code)) + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        code_(code),
        line_(line),
        column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& path() const noexcept { return path_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  std::string path_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace eos
