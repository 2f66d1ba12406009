#pragma once

/**
 * @file exactpoly.hpp
 * @brief Exact dense polynomials over the integers and rationals, with
 *        Sturm-chain real-root counting.
 *
 * Coefficients are stored in ascending degree order: coeffs()[k] multiplies
 * x^k. The zero polynomial has no coefficients and degree -1.
 */

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "domroots/mpreal.hpp"

namespace domroots {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  /// c * x^k
  static IntPolynomial monomial(unsigned k, const mpz_class& c = 1);

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k; zero past the degree.
  mpz_class operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }
  const mpz_class& leading() const;

  /// Multiplicity of x = 0 as a root (number of trailing zero coefficients).
  unsigned zero_multiplicity() const;
  /// p / x^k; requires k <= zero_multiplicity().
  IntPolynomial divided_by_x_power(unsigned k) const;

  std::string to_string(char var = 'x') const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

 private:
  void canonicalize();
  std::vector<mpz_class> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial scale(const IntPolynomial& p, const mpz_class& c);
IntPolynomial pow(const IntPolynomial& p, unsigned e);
IntPolynomial derivative(const IntPolynomial& p);

inline IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) { return add(p, q); }
inline IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) { return sub(p, q); }
inline IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) { return mul(p, q); }
inline IntPolynomial operator-(const IntPolynomial& p) { return scale(p, -1); }

mpq_class eval_exact(const IntPolynomial& p, const mpq_class& x);
mpz_class eval_exact(const IntPolynomial& p, const mpz_class& x);
/// Sign of p(x) computed exactly.
int sign_at(const IntPolynomial& p, const mpq_class& x);

/// Horner evaluation at the precision of z (at least 53 bits).
Complex eval_complex(const IntPolynomial& p, const Complex& z);
Real eval_real(const IntPolynomial& p, const Real& x);

/// gcd of the coefficients, non-negative.
mpz_class content(const IntPolynomial& p);
/// p / content(p) with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);
/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q);
/// Exact quotient p / q over Z. Throws if q does not divide p.
IntPolynomial divide_exact(const IntPolynomial& p, const IntPolynomial& q);
/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);
/// 1 + max|c_i| / |lead|, rounded up; every root lies strictly inside.
mpz_class cauchy_bound(const IntPolynomial& p);

class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<mpq_class> coeffs);
  explicit RatPolynomial(const IntPolynomial& p);

  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  RatPolynomial monic() const;
  /// Integer polynomial with the same roots: cleared denominators, primitive,
  /// positive leading coefficient.
  IntPolynomial to_primitive() const;

  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void canonicalize();
  std::vector<mpq_class> coeffs_;
};

struct RatDivision {
  RatPolynomial quotient;
  RatPolynomial remainder;
};

RatDivision divmod(const RatPolynomial& a, const RatPolynomial& b);
/// Monic Euclidean gcd over Q.
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

/// An interval endpoint: a rational or one of the two infinities.
struct Bound {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  mpq_class value;

  static Bound neg_inf() { return {Kind::NegInf, 0}; }
  static Bound pos_inf() { return {Kind::PosInf, 0}; }
  static Bound at(const mpq_class& v) { return {Kind::Finite, v}; }
};

/**
 * Sturm sequence of a squarefree polynomial.
 *
 * Entries are p, p', then successive negated remainders. Each entry is kept
 * as a primitive integer polynomial obtained by a positive rescaling of the
 * rational remainder, which leaves every sign (and therefore every variation
 * count) unchanged.
 */
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& squarefree);

  const std::vector<IntPolynomial>& polys() const { return polys_; }
  /// Sign variations of the chain at x, zeros dropped.
  int variations(const Bound& x) const;
  /// Distinct roots in (a, b].
  int count(const Bound& a, const Bound& b) const;

 private:
  std::vector<IntPolynomial> polys_;
};

/// Exact count of distinct real roots of p in (a, b].
int count_real_roots(const IntPolynomial& p, const Bound& a = Bound::neg_inf(),
                     const Bound& b = Bound::pos_inf());

/// (lo, hi] containing exactly one distinct real root.
struct RootInterval {
  mpq_class lo;
  mpq_class hi;
};

/**
 * Isolates every distinct real root of p in (a, b] into disjoint intervals of
 * width at most max_width, sorted ascending.
 */
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p, const Bound& a = Bound::neg_inf(),
                                             const Bound& b = Bound::pos_inf(),
                                             const mpq_class& max_width = mpq_class(1, 1024));

}  // namespace domroots
