#pragma once

#include <stdexcept>
#include <string>

namespace morava {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto stable exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands from different rings (prime, modulus, truncation mismatch), or
// malformed input that cannot describe a valid object.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  NotAUnit(int valuation, const std::string& what)
      : Error(what + " (valuation " + std::to_string(valuation) + ")"), valuation_(valuation) {}
  int valuation() const noexcept { return valuation_; }

 private:
  int valuation_;
};

class HenselFailure : public Error {
 public:
  using Error::Error;
};

class ZeroSeries : public Error {
 public:
  ZeroSeries() : Error("series vanishes at the working truncation") {}
};

class TruncationTooCoarse : public Error {
 public:
  TruncationTooCoarse(int weierstrass_degree, int truncation)
      : Error("Weierstrass degree " + std::to_string(weierstrass_degree) +
              " does not fit below truncation " + std::to_string(truncation) +
              "; rerun with a larger truncation"),
        degree_(weierstrass_degree),
        truncation_(truncation) {}
  int weierstrass_degree() const noexcept { return degree_; }
  int truncation() const noexcept { return truncation_; }

 private:
  int degree_;
  int truncation_;
};

class DivergentEvaluation : public Error {
 public:
  using Error::Error;
};

class NotInS2 : public Error {
 public:
  using Error::Error;
};

class DenominatorNotUnit : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  InsufficientPrecision(int required, const std::string& what)
      : Error(what + " (requires precision >= " + std::to_string(required) + ")"),
        required_(required) {}
  int required() const noexcept { return required_; }

 private:
  int required_;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class MissingCertificate : public Error {
 public:
  using Error::Error;
};

class NotT0 : public Error {
 public:
  NotT0() : Error("space is not T0; apply kolmogorov_quotient first") {}
};

}  // namespace morava
