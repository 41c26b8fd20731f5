#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dehn {

/// Arbitrary-precision integer used for every exact quantity in the library.
using Integer = mpz_class;

inline Integer abs_value(const Integer& v) {
  Integer r;
  mpz_abs(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Nonnegative residue of a modulo m (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Inverse of a modulo m, or 0 when it does not exist.
inline Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return 0;
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text rejected by one of the parsers; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dehn
