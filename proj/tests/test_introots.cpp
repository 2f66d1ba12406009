#include <doctest.h>

#include "domroots/families.hpp"
#include "domroots/introots.hpp"
#include "oracles.hpp"

using namespace domroots;

namespace {

std::vector<mpz_class> z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Every integer in [-bound, bound], evaluated directly. Only usable when the
// bound is small.
std::vector<mpz_class> exhaustive_integer_roots(const IntPolynomial& p, long bound) {
  std::vector<mpz_class> out;
  for (long r = -bound; r <= bound; ++r)
    if (oracle::eval_powers(p, mpq_class(r)) == 0) out.emplace_back(r);
  return out;
}

}  // namespace

TEST_CASE("integer root scan examples") {
  const IntegerRootScan s = integer_root_scan(IntPolynomial{-4, 0, 1}, "x^2-4");
  CHECK(s.roots_found == z({-2, 2}));
  CHECK(s.nonzero_roots == z({-2, 2}));
  CHECK(s.bound >= 2);

  CHECK(integer_root_scan(friendship_poly(4)).roots_found == z({0}));
  CHECK(integer_root_scan(book_poly(4)).roots_found == z({0}));
  CHECK(integer_root_scan(book_poly(4)).nonzero_roots.empty());

  CHECK(integer_root_scan(IntPolynomial{0, 0, 0, 1}).roots_found == z({0}));
  CHECK(integer_root_scan(IntPolynomial{7}).roots_found.empty());
  CHECK_THROWS_AS(integer_root_scan(IntPolynomial{}), std::invalid_argument);
}

TEST_CASE("divisor scan agrees with an exhaustive scan on random polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    IntPolynomial p = oracle::random_poly(rng, 5, 6);
    if (p.is_zero()) continue;
    // Plant an integer root now and then.
    if (i % 3 == 0) p = p * IntPolynomial{-(i % 7 - 3), 1};
    if (p.is_zero() || p.degree() < 1) continue;
    const IntegerRootScan s = integer_root_scan(p);
    CHECK(s.roots_found == exhaustive_integer_roots(p, s.bound.get_si()));
    for (const auto& r : s.roots_found) CHECK(eval_exact(p, r) == 0);
  }
}

TEST_CASE("family polynomials have no nonzero integer roots for n <= 20") {
  for (int n = 1; n <= 20; ++n) {
    CHECK(integer_root_scan(friendship_poly(n)).roots_found == z({0}));
    CHECK(integer_root_scan(book_poly(n)).roots_found == z({0}));
  }
}

TEST_CASE("book value at -2") {
  CHECK(book_minus2_identity(4) == -28);
  CHECK(book_minus2_identity(1) == 8);
  CHECK(book_minus2_identity(3) == 20);
  for (int n = 1; n <= 20; ++n) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), mpz_class(-2).get_mpz_t(), static_cast<unsigned long>(n));
    CHECK(book_minus2_identity(n) == 4 - 2 * pw);
    CHECK(book_minus2_identity(n) != 0);
  }
}

TEST_CASE("book and friendship values at small negative integers") {
  for (int n = 1; n <= 20; ++n) {
    CHECK(eval_exact(friendship_poly(n), mpz_class(-2)) == -2);
    // Only (2x+1)(x^2+2x)^n and -2x^n survive at x = -1.
    CHECK(eval_exact(book_poly(n), mpz_class(-1)) == (n % 2 == 0 ? -3 : 3));
  }
}

TEST_CASE("book values below -2 are positive") {
  const NegativePositivityReport r4 = book_negative_positivity(4, 3);
  REQUIRE(r4.values.size() == 1);
  CHECK(r4.values[0].m == 3);
  CHECK(r4.values[0].value == 1737);
  CHECK(r4.all_positive);
  CHECK(book_negative_positivity(2, 3).all_positive);
  const NegativePositivityReport r7 = book_negative_positivity(7, 5);
  CHECK(r7.values.back().value == eval_exact(book_poly(7), mpz_class(-5)));
  CHECK(r7.values.back().value > 0);
  for (int n = 1; n <= 20; ++n) CHECK(book_negative_positivity(n, 10).all_positive);
  CHECK_THROWS(book_negative_positivity(3, 2));
}

TEST_CASE("values at positive integers are positive") {
  for (int n = 1; n <= 10; ++n)
    for (long m = 1; m <= 10; ++m) {
      CHECK(eval_exact(book_poly(n), mpz_class(m)) > 0);
      CHECK(eval_exact(friendship_poly(n), mpz_class(m)) > 0);
    }
}

TEST_CASE("corona -2 reports") {
  const CoronaMinus2Report b1f1 = corona_minus2_check(CoronaVariant::OddOdd, 1);
  CHECK(b1f1.id.name() == "B1∘F1");
  CHECK(b1f1.order == 16);
  CHECK(b1f1.minus2_is_root);
  CHECK(b1f1.zero_is_root);
  CHECK(b1f1.oracle_match == true);
  CHECK(b1f1.exclusivity_checked);
  CHECK(b1f1.exclusive);
  CHECK(b1f1.distinct_real_roots == 2);
  CHECK(b1f1.ok());

  const CoronaMinus2Report eo = corona_minus2_check(CoronaVariant::EvenOdd, 1);
  CHECK(eo.value_at_minus2 == 0);
  CHECK(eo.exclusive);
  CHECK_FALSE(eo.oracle_match.has_value());

  // The corona factor x(1+x)^{2k+1} + D(F_k) picks up two extra real roots
  // when k is even.
  const CoronaMinus2Report oe = corona_minus2_check(CoronaVariant::OddEven, 1);
  CHECK(oe.minus2_is_root);
  CHECK(oe.distinct_real_roots == 4);
  CHECK_FALSE(oe.exclusive);
  CHECK_FALSE(oe.ok());

  for (auto v : {CoronaVariant::OddOdd, CoronaVariant::EvenOdd, CoronaVariant::OddEven}) {
    const CoronaMinus2Report r = corona_minus2_check(v, 3);
    CHECK(r.minus2_is_root);
    // B5∘F5 has 144 vertices; the other two m = 3 members have 224.
    CHECK(r.degree == (v == CoronaVariant::OddOdd ? 144 : 224));
    CHECK(r.exclusivity_checked == (r.degree <= kSturmDegreeBudget));
    if (!r.exclusivity_checked) CHECK_FALSE(r.note.empty());
  }
}
