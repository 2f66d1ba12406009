#include <doctest.h>

#include "domroots/families.hpp"
#include "domroots/graphs.hpp"
#include "oracles.hpp"

using namespace domroots;

TEST_CASE("closed forms equal the brute-force oracle") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(friendship_poly(n) == brute_force_dompoly(friendship(n)));
    CHECK(friendship_poly(n) == oracle::naive_dompoly(friendship(n)));
  }
  for (int n = 1; n <= 6; ++n) CHECK(book_poly(n) == brute_force_dompoly(book(n)));
  CHECK(book_poly(3) == oracle::naive_dompoly(book(3)));
}

TEST_CASE("named small polynomials") {
  CHECK(friendship_poly(1) == IntPolynomial{0, 3, 3, 1});
  CHECK(book_poly(1) == IntPolynomial{0, 0, 6, 4, 1});
  CHECK(friendship_poly(2) == IntPolynomial{0, 1, 8, 10, 5, 1});
  CHECK(eval_exact(friendship_poly(4), mpz_class(-3)) == -687);
  CHECK(eval_exact(brute_force_dompoly(friendship(4)), mpz_class(-3)) == -687);
}

TEST_CASE("structure of friendship and book polynomials") {
  for (int n = 1; n <= 40; ++n) {
    const IntPolynomial& f = family_poly(FamilyId::friendship(n));
    CHECK(f.degree() == 2 * n + 1);
    CHECK(f.leading() == 1);
    CHECK(f[0] == 0);
    // (2x + x^2)^n adds 2x to the linear term only when n = 1.
    CHECK(f[1] == (n == 1 ? 3 : 1));
    const IntPolynomial& b = family_poly(FamilyId::book(n));
    CHECK(b.degree() == 2 * n + 2);
    CHECK(b.leading() == 1);
    CHECK(b.zero_multiplicity() == 2);
  }
}

TEST_CASE("join and union rules") {
  const IntPolynomial k1{0, 1};
  const IntPolynomial k2 = brute_force_dompoly(complete(2));
  IntPolynomial matching{1};
  for (int n = 1; n <= 5; ++n) {
    matching = union_poly(matching, k2);
    CHECK(join_poly(k1, 1, matching, 2 * n) == friendship_poly(n));
  }
  CHECK_THROWS_AS(join_poly(k1, -1, k1, 1), std::invalid_argument);
}

TEST_CASE("corona closed form against the oracle") {
  const IntPolynomial k3 = brute_force_dompoly(complete(3));
  CHECK(corona_poly(k3, 3, 1) == brute_force_dompoly(corona(complete(1), complete(3))));
  CHECK(corona_poly(friendship_poly(1), 3, 4) == brute_force_dompoly(corona(book(1), friendship(1))));
  // Only |G| matters: a path and a cycle of the same order give the same corona polynomial.
  CHECK(brute_force_dompoly(corona(path(4), complete(2))) == brute_force_dompoly(corona(cycle(4), complete(2))));
  CHECK(corona_poly(IntPolynomial{0, 1}, 1, 3) == brute_force_dompoly(corona(path(3), complete(1))));
  CHECK_THROWS_AS(corona_poly(k3, -1, 2), std::invalid_argument);
}

TEST_CASE("corona polynomials vanish at -2") {
  for (int k = 1; k <= 6; ++k)
    for (int nG = 1; nG <= 5; ++nG)
      CHECK(eval_exact(corona_poly(friendship_poly(k), 2 * k + 1, nG), mpz_class(-2)) == 0);
}

TEST_CASE("family ids and the cache") {
  CHECK(FamilyId::friendship(10).name() == "F10");
  CHECK(FamilyId::book(4).name() == "B4");
  CHECK(FamilyId::corona(CoronaVariant::OddOdd, 1).name() == "B1∘F1");
  CHECK(FamilyId::corona(CoronaVariant::EvenOdd, 1).name() == "B2∘F3");
  CHECK(FamilyId::corona(CoronaVariant::OddEven, 1).name() == "B3∘F2");
  CHECK(corona_shape(CoronaVariant::OddOdd, 3).book_n == 5);
  CHECK(corona_shape(CoronaVariant::OddEven, 2).friendship_n == 4);
  CHECK(family_order(FamilyId::corona(CoronaVariant::OddOdd, 1)) == 16);
  CHECK(family_order(FamilyId::book(4)) == 10);
  const IntPolynomial* a = &family_poly(FamilyId::book(7));
  const IntPolynomial* b = &family_poly(FamilyId::book(7));
  CHECK(a == b);
  CHECK(*a == book_poly(7));
  CHECK_THROWS_AS(friendship_poly(0), std::invalid_argument);
  CHECK_THROWS_AS(book_poly(-1), std::invalid_argument);
}
