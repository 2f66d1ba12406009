#pragma once

/**
 * @file introots.hpp
 * @brief Exact integer-root scans and the value checks at -2 and below for
 *        book, friendship and corona polynomials.
 */

#include <optional>
#include <string>
#include <vector>

#include "domroots/exactpoly.hpp"
#include "domroots/families.hpp"

namespace domroots {

struct IntegerRootScan {
  std::string label;
  /// Every integer root lies in [-bound, bound] (Cauchy bound of p with its
  /// zero root stripped).
  mpz_class bound;
  /// Integers actually evaluated: the divisors of the stripped constant
  /// term that fall inside the bound, with both signs.
  std::vector<mpz_class> candidates;
  std::vector<mpz_class> roots_found;  ///< ascending, 0 included if p(0) = 0
  std::vector<mpz_class> nonzero_roots;
};

/// Throws std::invalid_argument for the zero polynomial.
IntegerRootScan integer_root_scan(const IntPolynomial& p, const std::string& label = "p");

/// D(B_n, -2), checked against 4 - 2(-2)^n. Throws std::logic_error on a mismatch.
mpz_class book_minus2_identity(int n);

struct NegativeValue {
  int m;
  mpz_class value;  ///< D(B_n, -m)
};

struct NegativePositivityReport {
  int n = 0;
  std::vector<NegativeValue> values;  ///< m = 3..m_max
  bool all_positive = true;
};

NegativePositivityReport book_negative_positivity(int n, int m_max);

/// Sturm exclusivity is attempted only up to this degree.
inline constexpr int kSturmDegreeBudget = 200;

struct CoronaMinus2Report {
  FamilyId id;
  int degree = 0;
  int order = 0;
  mpz_class value_at_minus2;
  bool minus2_is_root = false;
  bool zero_is_root = false;
  /// Distinct real roots over the whole line, when within budget.
  std::optional<int> distinct_real_roots;
  bool exclusivity_checked = false;
  bool exclusive = false;  ///< 0 and -2 are the only real roots
  std::optional<bool> oracle_match;  ///< only for B1∘F1
  std::string note;

  bool ok() const {
    return minus2_is_root && zero_is_root && (!exclusivity_checked || exclusive) && oracle_match.value_or(true);
  }
};

CoronaMinus2Report corona_minus2_check(CoronaVariant variant, int m);

}  // namespace domroots
