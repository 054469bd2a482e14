#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperwiener {

enum class ErrorCode {
  EmptyEdge,
  OutOfRangeVertex,
  DuplicateEdge,
  EdgeTooSmall,
  UnknownEdgeId,
  Disconnected,
  NotASubhypergraph,
  NotEdgeGated,
  ThetaNotTransitive,
  NotACut,
  NotPartialCube,
  NotAHypertree,
  NotAPartition,
  CutEdgesIntersect,
  InvalidCutPartition,
  ValidationTooLarge,
  BadParameter,
  SyntaxError,
  MethodDisagreement,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::OutOfRangeVertex: return "OutOfRangeVertex";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EdgeTooSmall: return "EdgeTooSmall";
    case ErrorCode::UnknownEdgeId: return "UnknownEdgeId";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotASubhypergraph: return "NotASubhypergraph";
    case ErrorCode::NotEdgeGated: return "NotEdgeGated";
    case ErrorCode::ThetaNotTransitive: return "ThetaNotTransitive";
    case ErrorCode::NotACut: return "NotACut";
    case ErrorCode::NotPartialCube: return "NotPartialCube";
    case ErrorCode::NotAHypertree: return "NotAHypertree";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::CutEdgesIntersect: return "CutEdgesIntersect";
    case ErrorCode::InvalidCutPartition: return "InvalidCutPartition";
    case ErrorCode::ValidationTooLarge: return "ValidationTooLarge";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MethodDisagreement: return "MethodDisagreement";
  }
  return "Unknown";
}

/// Base of every exception thrown by the library. Payload-carrying errors
/// (witnesses, reports) derive from it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Errors raised while reading text formats; `line()` is 1-based, 0 when the
/// problem is not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hyperwiener
