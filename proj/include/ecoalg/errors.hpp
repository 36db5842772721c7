#pragma once

#include <stdexcept>
#include <string>

namespace ecoalg {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used in CLI error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("ParseError", "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("ValidationError", what) {}
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error("ShapeMismatch", what) {}
};

class TorsionPresent : public Error {
 public:
  TorsionPresent(int degree, const std::string& coefficient)
      : Error("TorsionPresent",
              "homology in degree " + std::to_string(degree) + " has torsion coefficient " + coefficient),
        degree_(degree),
        coefficient_(coefficient) {}
  int degree() const { return degree_; }
  const std::string& coefficient() const { return coefficient_; }

 private:
  int degree_;
  std::string coefficient_;
};

class MultipleVertices : public Error {
 public:
  explicit MultipleVertices(int count)
      : Error("MultipleVertices", "expected a single vertex, found " + std::to_string(count)), count_(count) {}
  int count() const { return count_; }

 private:
  int count_;
};

class UntabulatedDifferential : public Error {
 public:
  explicit UntabulatedDifferential(const std::string& generator)
      : Error("UntabulatedDifferential", "no tabulated differential for generator " + generator) {}
};

class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(const std::string& what) : Error("VerificationFailed", what) {}
};

class NotNormalizable : public Error {
 public:
  explicit NotNormalizable(const std::string& generator)
      : Error("NotNormalizable",
              "triple component on " + generator + " does not lie in the Lie lattice modulo [H1, m(H2)]"),
        generator_(generator) {}
  const std::string& generator() const { return generator_; }

 private:
  std::string generator_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("InvalidArgument", what) {}
};

}  // namespace ecoalg
