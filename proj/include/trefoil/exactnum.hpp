/* exactnum.hpp -- exact rational and cyclotomic arithmetic.
 *
 * Rationals are boost::multiprecision::cpp_rational (arbitrary precision,
 * always normalized: gcd(num, den) = 1 and den >= 1).  Cyclotomic values are
 * elements of Q(zeta_n) stored as dense rational coefficient vectors of
 * length phi(n) on the power basis 1, zeta_n, ..., zeta_n^{phi(n)-1}, reduced
 * modulo the n-th cyclotomic polynomial.  Every constructor and arithmetic
 * operator re-minimizes the conductor, so equal field elements always have
 * identical representations and operator== is structural.  A value with
 * conductor 1 is a plain rational.
 */

#ifndef TREFOIL_EXACTNUM_HPP_
#define TREFOIL_EXACTNUM_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trefoil {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/* Base class for all domain errors thrown by the toolkit. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/* Malformed textual input; the message contains the byte position. */
struct ParseError : Error {
  using Error::Error;
};
/* Arithmetic misuse: division by zero, non-coprime Galois index, ... */
struct DomainError : Error {
  using Error::Error;
};

/* Euler phi and friends on machine integers (inputs are small conductors). */
long gcd_long(long a, long b);
long euler_phi(long n);
/* Coefficients of the n-th cyclotomic polynomial (monic, degree phi(n)),
 * index i = coefficient of x^i.  Cached internally. */
const std::vector<Int>& cyclotomic_polynomial(long n);

std::string rat_to_string(const Rat& r);  // "p" or "p/q", q > 1
/* Parse "p" or "p/q" with optional leading '-'.  Throws ParseError. */
Rat rat_from_string(std::string_view text);

class Cyclotomic {
 public:
  /* Zero, as a rational. */
  Cyclotomic();
  /* A rational value (conductor 1). */
  Cyclotomic(const Rat& r);
  Cyclotomic(long n);  // integer literal convenience

  /* The primitive n-th root of unity zeta_n, n >= 1. */
  static Cyclotomic zeta(long n);
  /* Element of Q(zeta_n) with the given coefficients on powers
   * 1, zeta_n, ..., zeta_n^{k-1}; any length <= n accepted, reduced and
   * conductor-minimized. */
  static Cyclotomic from_coeffs(long n, std::vector<Rat> coeffs);

  long conductor() const { return conductor_; }
  /* Coefficient vector on the power basis of Q(zeta_conductor), length
   * phi(conductor). */
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  /* Value as a rational; throws DomainError if the conductor exceeds 1. */
  Rat to_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  /* Multiplicative inverse; throws DomainError on zero. */
  Cyclotomic inverse() const;
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

  /* Galois conjugate zeta_n -> zeta_n^k; k may be negative and is taken mod
   * the conductor; throws DomainError unless gcd(k, conductor) = 1. */
  Cyclotomic galois(long k) const;
  /* Complex conjugate (k = -1). */
  Cyclotomic conj() const { return galois(-1); }

  bool operator==(const Cyclotomic& o) const {
    return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  /* Total order for deterministic sorting: by conductor, then by coefficient
   * vector, lexicographically. */
  bool operator<(const Cyclotomic& o) const;

  /* "p/q" for rationals, otherwise "cyc(n)[c0,c1,...]" with phi(n) entries. */
  std::string to_string() const;
  /* Inverse of to_string; also accepts non-canonical coefficient vectors
   * (they are reduced).  Throws ParseError. */
  static Cyclotomic from_string(std::string_view text);

  std::size_t hash() const;

 private:
  Cyclotomic(long conductor, std::vector<Rat> coeffs, bool trusted);
  long conductor_;
  std::vector<Rat> coeffs_;
};

}  // namespace trefoil

#endif  // TREFOIL_EXACTNUM_HPP_
