#include <doctest.h>

#include <cmath>

#include "domroots/families.hpp"
#include "domroots/realroots.hpp"
#include "domroots/report.hpp"

using namespace domroots;

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

// Exact sign of D at the rational nearest to x +- h: an oracle for "x is within h of a root".
bool brackets_root(const IntPolynomial& p, double x, double h) {
  return sign_at(p, mpq_class(x - h)) * sign_at(p, mpq_class(x + h)) < 0;
}

}  // namespace

TEST_CASE("phi and psi values and monotonicity") {
  CHECK(phi(2, Real(0.5, 128)).to_double() == doctest::Approx(3 * std::log(0.5) - 2 * std::log(1.5)).epsilon(1e-14));
  CHECK(phi(2, Real(0.5, 128)).to_double() == doctest::Approx(-2.8904).epsilon(1e-4));
  CHECK(psi(2, Real(1e-6, 128)).to_double() < -50);
  for (int n = 2; n <= 40; n += 2) {
    int phi_sign_changes = 0;
    int prev = phi(n, Real(0.001, 128)).sign();
    for (int k = 1; k < 1000; ++k) {
      const Real t(k / 1000.0, 128);
      CHECK(phi_prime(n, t).sign() > 0);
      CHECK(psi_prime(n, t).sign() > 0);
      const int s = phi(n, t).sign();
      if (s != prev) ++phi_sign_changes;
      prev = s;
    }
    CHECK(phi_sign_changes == 1);
  }
}

TEST_CASE("phi and psi reject bad arguments") {
  CHECK_THROWS_AS(phi(3, Real(0.5, 128)), std::invalid_argument);
  CHECK_THROWS_AS(phi(0, Real(0.5, 128)), std::invalid_argument);
  CHECK_THROWS_AS(psi(2, Real(1.0, 128)), std::domain_error);
  CHECK_THROWS_AS(psi(2, Real(0.0, 128)), std::domain_error);
  CHECK_THROWS_AS(phi_prime(2, Real(-0.1, 128)), std::domain_error);
}

TEST_CASE("friendship real roots: named rows") {
  struct Row {
    int n;
    double minus, plus;
  };
  for (const Row& r : {Row{2, -1.660992532, -0.151625104}, Row{10, -1.697690028, -0.270155995},
                       Row{20, -1.702388772, -0.281788907}}) {
    const FriendshipRealRoots fr = solve_friendship_real_roots(r.n);
    CHECK(std::abs(fr.x_minus.to_double() - r.minus) < 1e-6);
    CHECK(std::abs(fr.x_plus.to_double() - r.plus) < 1e-6);
  }
}

TEST_CASE("friendship real roots: invariants for even n up to 40") {
  for (int n = 2; n <= 40; n += 2) {
    const FriendshipRealRoots fr = solve_friendship_real_roots(n);
    const double xm = fr.x_minus.to_double(), xp = fr.x_plus.to_double();
    CHECK(-2 < xm);
    CHECK(xm < -1);
    CHECK(-1 < xp);
    CHECK(xp < 0);
    CHECK(fr.certified_count == 3);
    CHECK(fr.residual_minus.to_double() < 1e-12);
    CHECK(fr.residual_plus.to_double() < 1e-12);
    CHECK(!fr.derivative_minus.is_zero());
    CHECK(!fr.derivative_plus.is_zero());
    CHECK(fr.t().to_double() > kInvSqrt2);
    CHECK(fr.s().to_double() < kInvSqrt2);
    // Exact sign changes straddle both roots.
    CHECK(brackets_root(friendship_poly(n), xm, 1e-12));
    CHECK(brackets_root(friendship_poly(n), xp, 1e-12));

    // Defining identities (1-t)^(n-1)(1+t)^n = t^(2n) and (1-s)^n(1+s)^(n-1) = s^(2n).
    const Real t = fr.t(), s = fr.s(), one(1.0, 256);
    const Real lhs_t = pow(one - t, n - 1) * pow(one + t, n), rhs_t = pow(t, 2 * n);
    const Real lhs_s = pow(one - s, n) * pow(one + s, n - 1), rhs_s = pow(s, 2 * n);
    CHECK(abs((lhs_t - rhs_t) / rhs_t).to_double() < 1e-10);
    CHECK(abs((lhs_s - rhs_s) / rhs_s).to_double() < 1e-10);
  }
}

TEST_CASE("phi/psi roots agree with Sturm bisection roots") {
  for (int n : {2, 8, 16}) {
    const FriendshipRealRoots fr = solve_friendship_real_roots(n);
    const auto rr = real_roots(friendship_poly(n));
    REQUIRE(rr.size() == 3);
    CHECK(std::abs(rr[0].value.to_double() - fr.x_minus.to_double()) < 1e-12);
    CHECK(std::abs(rr[1].value.to_double() - fr.x_plus.to_double()) < 1e-12);
    CHECK(rr[2].value.is_zero());
  }
}

TEST_CASE("Table 1 reference values") {
  const CsvTable ref = load_reference(kTable1File);
  REQUIRE(ref.rows.size() == 10);
  for (std::size_t i = 0; i < ref.rows.size(); ++i) {
    const int n = static_cast<int>(ref.number(i, "n"));
    const FriendshipRealRoots fr = solve_friendship_real_roots(n);
    CHECK(std::abs(fr.x_minus.to_double() - ref.number(i, "x_minus")) < 1e-6);
    CHECK(std::abs(fr.x_plus.to_double() - ref.number(i, "x_plus")) < 1e-6);
  }
}

TEST_CASE("monotone convergence report") {
  std::vector<int> ns;
  for (int n = 2; n <= 40; n += 2) ns.push_back(n);
  const MonotoneReport rep = monotone_convergence_report(ns);
  CHECK(rep.ok());
  REQUIRE(rep.rows.size() == 20);
  CHECK(rep.rows.front().gap_plus / rep.rows.back().gap_plus > 10);
  CHECK(rep.rows.front().gap_minus / rep.rows.back().gap_minus > 10);
  CHECK(rep.rows.back().x_plus > -1 + kInvSqrt2);
  CHECK(rep.rows.back().x_minus > -1 - kInvSqrt2);

  MonotoneRow a{2, -1.6, -0.2, 0, 0};
  a.gap_minus = std::abs(a.x_minus + 1 + kInvSqrt2);
  a.gap_plus = std::abs(a.x_plus + 1 - kInvSqrt2);
  const MonotoneReport flat = assess_monotone({a, MonotoneRow{4, a.x_minus, a.x_plus, a.gap_minus, a.gap_plus}});
  CHECK_FALSE(flat.ok());
  CHECK(flat.failures.front().find("n=2") != std::string::npos);

  CHECK_THROWS_AS(monotone_convergence_report({2}), std::invalid_argument);
  CHECK_THROWS_AS(monotone_convergence_report({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(monotone_convergence_report({4, 2}), std::invalid_argument);
}

TEST_CASE("book real roots against Table 3") {
  const CsvTable ref = load_reference(kTable3File);
  REQUIRE(ref.rows.size() == 8);
  for (std::size_t i = 0; i < ref.rows.size(); ++i) {
    const int n = static_cast<int>(ref.number(i, "n"));
    const BookRealRoots b = book_real_roots(n);
    REQUIRE(b.roots.size() == 2);
    CHECK(std::abs(b.roots[0].value.to_double() - ref.number(i, "root_1")) < 5e-4);
    CHECK(std::abs(b.roots[1].value.to_double() - ref.number(i, "root_2")) < 5e-4);
    CHECK(b.zero_multiplicity == 2);
    for (const auto& r : b.roots) {
      CHECK(r.residual.to_double() < 1e-10);
      CHECK(brackets_root(book_poly(n), r.value.to_double(), 1e-10));
    }
  }
}

TEST_CASE("book real roots: parity intervals") {
  for (int n = 2; n <= 30; n += 2) {
    const BookRealRoots b = book_real_roots(n, 1e-9, 128);
    CHECK(b.existence_holds);
    CHECK(b.below_minus_two >= 1);
    CHECK(b.near_zero >= 1);
    CHECK(eval_exact(book_poly(n), mpz_class(-2)) < 0);
  }
  const BookRealRoots b1 = book_real_roots(1);
  CHECK(b1.roots.empty());
  CHECK(b1.zero_multiplicity == 2);
}

TEST_CASE("four real roots pattern is reported, not asserted") {
  const auto rows = conjecture_book_real_check(30);
  REQUIRE(rows.size() == 30);
  CHECK(rows[0].status == ConjectureStatus::Separate);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].status == ConjectureStatus::Consistent);
    CHECK(rows[i].nonzero_roots_simple);
    CHECK(rows[i].real_roots_with_multiplicity == 4);
  }
  CHECK(rows[3].pattern == "even");
  CHECK(rows[8].pattern == "odd");
  CHECK(to_string(ConjectureStatus::Consistent) == "CONSISTENT");
  CHECK_THROWS_AS(conjecture_book_real_check(1), std::invalid_argument);
}

TEST_CASE("real roots of a generic polynomial") {
  const IntPolynomial p = IntPolynomial{-2, 0, 1} * IntPolynomial{1, 3};  // roots +-sqrt2, -1/3
  const auto rr = real_roots(p);
  REQUIRE(rr.size() == 3);
  CHECK(rr[0].value.to_double() == doctest::Approx(-std::sqrt(2.0)));
  CHECK(rr[1].value.to_double() == doctest::Approx(-1.0 / 3));
  CHECK(rr[2].value.to_double() == doctest::Approx(std::sqrt(2.0)));
  CHECK(real_roots(p, Bound::at(0), Bound::pos_inf()).size() == 1);
}
