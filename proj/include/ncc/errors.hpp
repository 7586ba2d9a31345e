#ifndef NCC_ERRORS_HPP
#define NCC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch(const std::string& lhs, const std::string& rhs)
      : Error("field mismatch: " + lhs + " vs " + rhs) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An algebraic law failed (associativity, unit, ideal closure, multiplicativity,
/// functoriality, naturality). The message names the law and a witness.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::string witness)
      : Error(axiom + " violated: " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

/// d_out * d_in != 0 at the given degree.
class NotAComplex : public Error {
 public:
  explicit NotAComplex(std::size_t degree)
      : Error("not a complex: nonzero composite of differentials at degree " +
              std::to_string(degree)),
        degree_(degree) {}

  std::size_t degree() const { return degree_; }

 private:
  std::size_t degree_;
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(std::size_t degree, std::size_t estimated, std::size_t cap)
      : Error("dimension cap exceeded at degree " + std::to_string(degree) + ": " +
              std::to_string(estimated) + " > " + std::to_string(cap)),
        degree_(degree),
        estimated_(estimated),
        cap_(cap) {}

  std::size_t degree() const { return degree_; }
  std::size_t estimated() const { return estimated_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t degree_;
  std::size_t estimated_;
  std::size_t cap_;
};

/// Malformed problem description. `where` is a JSON-pointer-like location.
class InputError : public Error {
 public:
  InputError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace ncc

#endif  // NCC_ERRORS_HPP
