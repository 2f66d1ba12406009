#include <doctest.h>

#include <cmath>

#include "domroots/complexroots.hpp"
#include "domroots/families.hpp"
#include "domroots/report.hpp"
#include "oracles.hpp"

using namespace domroots;

namespace {

std::vector<std::complex<double>> values(const RootSet& rs) {
  std::vector<std::complex<double>> v;
  for (const auto& r : rs.roots) v.push_back(r.value.to_std());
  return v;
}

}  // namespace

TEST_CASE("simple known roots") {
  const RootSet rs = all_roots(IntPolynomial{1, 0, 1});
  REQUIRE(rs.size() == 2);
  CHECK(std::abs(rs.roots[0].value.to_std() - std::complex<double>(0, -1)) < 1e-30);
  CHECK(std::abs(rs.roots[1].value.to_std() - std::complex<double>(0, 1)) < 1e-30);

  const IntPolynomial p = IntPolynomial{-1, 1} * IntPolynomial{-2, 1} * IntPolynomial{5, 2, 1};
  const RootSet q = all_roots(p);
  CHECK(oracle::match_distance(values(q), {{1, 0}, {2, 0}, {-1, 2}, {-1, -2}}) < 1e-30);
  CHECK(q.max_residual() < 1e-60);
}

TEST_CASE("zero roots are stripped exactly and multiple roots form clusters") {
  const RootSet b1 = all_roots(book_poly(1));
  CHECK(b1.zero_multiplicity == 2);
  REQUIRE(b1.size() == 4);
  CHECK(b1.roots[0].value.re.to_double() == doctest::Approx(-2));
  CHECK(std::abs(b1.roots[0].value.im.to_double()) == doctest::Approx(std::sqrt(2.0)));
  CHECK(b1.roots[2].value.re.is_zero());
  CHECK(b1.roots[3].value.im.is_zero());

  const IntPolynomial p = pow(IntPolynomial{1, 1}, 3) * IntPolynomial{-2, 1};
  const RootSet rs = all_roots(p);
  REQUIRE(rs.size() == 4);
  int in_cluster = 0;
  for (const auto& r : rs.roots)
    if (std::abs(r.value.to_std() + 1.0) < 1e-6) {
      ++in_cluster;
      CHECK(r.multiplicity == 3);
    }
  CHECK(in_cluster == 3);
  CHECK_FALSE(rs.anomalies.empty());
}

TEST_CASE("roots agree with companion-matrix eigenvalues") {
  for (int n : {2, 5, 8}) {
    for (const IntPolynomial& p : {friendship_poly(n), book_poly(n)}) {
      const RootSet rs = all_roots(p);
      CHECK(static_cast<int>(rs.size()) == p.degree());
      // Eigen sees the zero roots as eigenvalues too; compare whole multisets.
      CHECK(oracle::match_distance(values(rs), oracle::companion_roots(p)) < 1e-6);
    }
  }
}

TEST_CASE("friendship roots: Table 1 real roots and Table 2 modulus") {
  const RootSet f2 = all_roots(friendship_poly(2));
  REQUIRE(f2.size() == 5);
  int real_hits = 0;
  for (const auto& z : values(f2))
    for (double r : {-1.660992532, -0.151625104})
      if (std::abs(z - std::complex<double>(r, 0)) < 1e-6) ++real_hits;
  CHECK(real_hits == 2);
  int on_axis = 0;
  for (const auto& r : f2.roots)
    if (r.value.im.is_zero()) ++on_axis;
  CHECK(on_axis == 3);  // the two real roots and 0, placed exactly on the axis
  CHECK(all_roots(friendship_poly(10)).max_modulus() == doctest::Approx(3.065002825).epsilon(1e-9));
}

TEST_CASE("hygiene on family polynomials of degree up to 50") {
  for (int n = 1; n <= 24; n += 3) {
    for (const IntPolynomial& p : {friendship_poly(n), book_poly(n)}) {
      const RootSet rs = all_roots(p);
      CHECK(static_cast<int>(rs.size()) == p.degree());
      CHECK(conjugate_symmetry_error(rs) < 1e-10);
      CHECK(reconstruction_error(rs, p) < 1e-8);
      CHECK(rs.max_residual() < 1e-10);
      CHECK(rs.precision_bits == 256);
    }
  }
}

TEST_CASE("solver options and failures") {
  SolverOptions tight;
  tight.max_sweeps = 2;
  CHECK_THROWS_AS(all_roots(friendship_poly(12), tight), RootSolveError);
  CHECK_THROWS(all_roots(IntPolynomial{}));
  CHECK_THROWS(all_roots(IntPolynomial{5}));
  CHECK(all_roots(IntPolynomial{0, 0, 3}).zero_multiplicity == 2);
}

TEST_CASE("modulus bound check") {
  CHECK(modulus_bound_check(std::complex<double>(1, 0), 5).ok);
  CHECK(modulus_bound_check(std::complex<double>(0, 1), 5).slack == 5);
  for (int n = 3; n <= 12; ++n) {
    const double r = 1 + std::sqrt(2.0 * n);
    const ModulusCheck c = modulus_bound_check(std::complex<double>(r, 0), n);
    CHECK_FALSE(c.ok);
    CHECK(c.slack < 0);
  }
}

TEST_CASE("explicit bound and implicit radius") {
  for (int n : {2, 4, 8, 10, 20}) {
    const double expected = 1 + std::sqrt(n / std::log(2.0));
    CHECK(explicit_bound(n).to_double() == doctest::Approx(expected).epsilon(1e-14));
  }
  CHECK(std::abs(explicit_bound(4).to_double() - 3.402245) < 1e-5);
  CHECK(std::abs(explicit_bound(10).to_double() - 4.798283) < 1e-6);
  for (int n = 1; n <= 100; ++n) {
    const Real r = implicit_radius(n);
    const double rd = r.to_double();
    CHECK((rd - 1) * (rd - 1) * std::log(rd) == doctest::Approx(n).epsilon(1e-9));
    CHECK(rd <= explicit_bound(n).to_double());
  }
}

TEST_CASE("modulus reports for even n up to 40") {
  std::vector<int> ns;
  for (int n = 2; n <= 40; n += 2) ns.push_back(n);
  const auto table = modulus_table(ns);
  REQUIRE(table.size() == ns.size());
  for (const auto& m : table) {
    CHECK(m.implicit_ok);
    CHECK(m.within_explicit);
    CHECK(m.within_implicit);
    CHECK(m.min_slack > 0);
    CHECK(m.max_modulus <= m.implicit_radius);
  }
  const CsvTable ref = load_reference(kTable2File);
  for (std::size_t i = 0; i < ref.rows.size(); ++i) {
    const int n = static_cast<int>(ref.number(i, "n"));
    CHECK(std::abs(table[static_cast<std::size_t>(n / 2 - 1)].max_modulus - ref.number(i, "max_modulus")) < 1e-6);
  }
}

TEST_CASE("book roots stay inside the plotting radius") {
  for (int n = 2; n <= 30; n += 4) {
    const double radius = 1.5 * std::max(3.0, 1 + std::sqrt(n / std::log(2.0)));
    CHECK(all_roots(book_poly(n)).max_modulus() < radius);
  }
}
