#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nashres {

enum class ErrorKind {
  Validation,
  Parse,
  InsufficientPrecision,
  ExtensionRequired,
  IdentityViolation,
};

/// Base of every error raised by the toolkit. The kind decides the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorKind::Parse, what + " at line " + std::to_string(line) + ", column " +
                                    std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what)
      : Error(ErrorKind::InsufficientPrecision, "insufficient precision: " + what) {}
};

class ExtensionError : public Error {
 public:
  explicit ExtensionError(const std::string& what)
      : Error(ErrorKind::ExtensionRequired, "requires algebraic extension: " + what) {}
};

class IdentityError : public Error {
 public:
  explicit IdentityError(const std::string& what) : Error(ErrorKind::IdentityViolation, what) {}
};

}  // namespace nashres
