#pragma once

/**
 * @file realroots.hpp
 * @brief Real roots of friendship and book domination polynomials.
 *
 * For even n the two nonzero real roots of D(F_n, x) are obtained from the
 * strictly increasing auxiliary functions
 *
 *   phi_n(t) = 2n log t - (n-1) log(1-t) - n log(1+t),   x+ = t - 1,
 *   psi_n(s) = 2n log s - n log(1-s) - (n-1) log(1+s),   x- = -1 - s,
 *
 * each having a single zero on (0, 1). Counts are certified exactly with
 * Sturm chains; roots are isolated exactly and then polished numerically.
 */

#include <string>
#include <vector>

#include "domroots/exactpoly.hpp"
#include "domroots/mpreal.hpp"

namespace domroots {

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr mpfr_prec_t kDefaultWorkingPrecision = 256;

Real phi(int n, const Real& t);
Real phi_prime(int n, const Real& t);
Real psi(int n, const Real& s);
Real psi_prime(int n, const Real& s);

struct FriendshipRealRoots {
  int n = 0;
  Real x_minus;
  Real x_plus;
  Real residual_minus;  ///< |D(F_n, x_minus)|
  Real residual_plus;
  Real derivative_minus;  ///< D'(F_n, x_minus); nonzero certifies a simple root
  Real derivative_plus;
  int certified_count = 0;  ///< distinct real roots by Sturm

  /// t_n = x_plus + 1, s_n = -(x_minus + 1)
  Real t() const;
  Real s() const;
};

/**
 * Solves phi_n and psi_n by bisection to 1e-3, then safeguarded Newton at
 * `precision` bits; the returned roots are bracketed to width <= tol.
 */
FriendshipRealRoots solve_friendship_real_roots(int n, double tol = kDefaultRootTol,
                                                mpfr_prec_t precision = kDefaultWorkingPrecision);

struct MonotoneRow {
  int n = 0;
  double x_minus = 0;
  double x_plus = 0;
  double gap_minus = 0;  ///< |x_minus - (-1 - 1/sqrt 2)|
  double gap_plus = 0;   ///< |x_plus - (-1 + 1/sqrt 2)|
};

struct MonotoneReport {
  std::vector<MonotoneRow> rows;
  std::vector<std::string> failures;  ///< empty when every comparison holds
  bool ok() const { return failures.empty(); }
};

/// Checks strict decrease of both roots and of both gaps, plus t_n > 1/sqrt 2
/// and s_n < 1/sqrt 2, over consecutive entries of rows.
MonotoneReport assess_monotone(std::vector<MonotoneRow> rows);
MonotoneReport monotone_convergence_report(const std::vector<int>& even_ns, double tol = kDefaultRootTol,
                                           mpfr_prec_t precision = kDefaultWorkingPrecision);

/// A polished real root of an integer polynomial.
struct RealRoot {
  Real value;
  Real residual;  ///< |p(value)| at working precision
  RootInterval bracket;
};

/**
 * Every distinct real root of p in (a, b]: isolated exactly by Sturm bisection,
 * refined by safeguarded Newton at `precision` bits to width <= tol.
 */
std::vector<RealRoot> real_roots(const IntPolynomial& p, const Bound& a = Bound::neg_inf(),
                                 const Bound& b = Bound::pos_inf(), double tol = kDefaultRootTol,
                                 mpfr_prec_t precision = kDefaultWorkingPrecision);

struct BookRealRoots {
  int n = 0;
  std::vector<RealRoot> roots;  ///< distinct nonzero real roots, ascending
  unsigned zero_multiplicity = 0;
  int below_minus_two = 0;    ///< roots in (-inf, -2]
  int middle = 0;             ///< roots in (-2, -1/2]
  int near_zero = 0;          ///< roots in (-1/2, 0)
  int positive = 0;           ///< roots in (0, inf)
  /// Even n only: both (-inf, -2) and (-1/2, 0) hold a root.
  bool existence_holds = true;
};

BookRealRoots book_real_roots(int n, double tol = kDefaultRootTol,
                              mpfr_prec_t precision = kDefaultWorkingPrecision);

enum class ConjectureStatus { Consistent, Inconsistent, Separate };
std::string to_string(ConjectureStatus s);

struct ConjectureRow {
  int n = 0;
  ConjectureStatus status = ConjectureStatus::Consistent;
  std::string pattern;  ///< "even", "odd" or "n=1"
  BookRealRoots roots;
  bool nonzero_roots_simple = true;
  int real_roots_with_multiplicity = 0;
  std::string detail;
};

/// Compares the real-root pattern of D(B_n, x), 1 <= n <= n_max, with the
/// parity-dependent four-real-roots pattern. Never throws on a mismatch.
std::vector<ConjectureRow> conjecture_book_real_check(int n_max, double tol = 1e-9,
                                                      mpfr_prec_t precision = 128);

}  // namespace domroots
