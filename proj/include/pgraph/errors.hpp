#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pgraph {

enum class Errc {
  DuplicateId,
  DanglingEndpoint,
  KindMismatch,
  TypeMismatch,
  MissingName,
  DuplicateName,
  NameNotFound,
  ParseError,
  PointOutOfWorld,
  DataError,
};

const char* errc_name(Errc code) noexcept;

/// Base error type for all data-level failures in this library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Text-format parse failure with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(Errc::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::DanglingEndpoint: return "DanglingEndpoint";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::MissingName: return "MissingName";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::NameNotFound: return "NameNotFound";
    case Errc::ParseError: return "ParseError";
    case Errc::PointOutOfWorld: return "PointOutOfWorld";
    case Errc::DataError: return "DataError";
  }
  return "Error";
}

}  // namespace pgraph
