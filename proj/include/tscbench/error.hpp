#pragma once

#include <stdexcept>
#include <string>

namespace tscbench {

enum class ErrorCode {
  MissingDataSection,
  RaggedSeries,
  UnknownLabel,
  BadValue,
  MissingClassLabels,
  UnsupportedFormat,
  EmptyClassNames,
  ClassMismatch,
  InvalidArgument,
  DimensionMismatch,
  SeriesTooShort,
  SingleClass,
  UnknownClassifier,
  MissingResults,
  Io,
};

const char* to_string(ErrorCode code);

// Every recoverable failure in the library is reported with this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingDataSection: return "MissingDataSection";
    case ErrorCode::RaggedSeries: return "RaggedSeries";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::BadValue: return "BadValue";
    case ErrorCode::MissingClassLabels: return "MissingClassLabels";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::EmptyClassNames: return "EmptyClassNames";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::UnknownClassifier: return "UnknownClassifier";
    case ErrorCode::MissingResults: return "MissingResults";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace tscbench
