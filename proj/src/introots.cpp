#include "domroots/introots.hpp"

#include <algorithm>
#include <stdexcept>

#include "domroots/graphs.hpp"

namespace domroots {

namespace {

// Positive divisors of c (c > 0) not exceeding limit.
std::vector<mpz_class> divisors_up_to(const mpz_class& c, const mpz_class& limit) {
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= c; ++d) {
    if (c % d != 0) continue;
    small.push_back(d);
    const mpz_class e = c / d;
    if (e != d) large.push_back(e);
  }
  std::vector<mpz_class> out;
  for (const auto& d : small)
    if (d <= limit) out.push_back(d);
  for (auto it = large.rbegin(); it != large.rend(); ++it)
    if (*it <= limit) out.push_back(*it);
  return out;
}

}  // namespace

IntegerRootScan integer_root_scan(const IntPolynomial& p, const std::string& label) {
  if (p.is_zero()) throw std::invalid_argument("integer_root_scan: zero polynomial");
  IntegerRootScan scan;
  scan.label = label;
  const unsigned zeros = p.zero_multiplicity();
  const IntPolynomial q = p.divided_by_x_power(zeros);
  if (q.degree() == 0) {
    scan.bound = 0;
    if (zeros > 0) scan.roots_found.push_back(0);
    return scan;
  }
  scan.bound = cauchy_bound(q);
  // An integer root r of q divides q(0), which is nonzero after stripping.
  const mpz_class c0 = abs(q.coeffs()[0]);
  if (c0 > mpz_class("1000000000000000000"))
    throw std::runtime_error("integer_root_scan: constant term too large to factor by trial division");
  for (const auto& d : divisors_up_to(c0, scan.bound)) {
    scan.candidates.push_back(-d);
    scan.candidates.push_back(d);
  }
  std::sort(scan.candidates.begin(), scan.candidates.end());
  for (const auto& r : scan.candidates)
    if (eval_exact(q, r) == 0) scan.nonzero_roots.push_back(r);
  scan.roots_found = scan.nonzero_roots;
  if (zeros > 0) scan.roots_found.push_back(0);
  std::sort(scan.roots_found.begin(), scan.roots_found.end());
  return scan;
}

mpz_class book_minus2_identity(int n) {
  if (n < 1) throw std::invalid_argument("book_minus2_identity: n must be at least 1");
  const mpz_class v = eval_exact(book_poly(n), mpz_class(-2));
  mpz_class p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n));
  const mpz_class expected = 4 - 2 * (n % 2 == 0 ? p2 : mpz_class(-p2));
  if (v != expected)
    throw std::logic_error("D(B_" + std::to_string(n) + ", -2) = " + v.get_str() + ", expected " + expected.get_str());
  if (v == 0) throw std::logic_error("D(B_" + std::to_string(n) + ", -2) vanished");
  return v;
}

NegativePositivityReport book_negative_positivity(int n, int m_max) {
  if (n < 1) throw std::invalid_argument("book_negative_positivity: n must be at least 1");
  if (m_max < 3) throw std::invalid_argument("book_negative_positivity: m_max must be at least 3");
  NegativePositivityReport rep;
  rep.n = n;
  const IntPolynomial& p = family_poly(FamilyId::book(n));
  for (int m = 3; m <= m_max; ++m) {
    NegativeValue nv{m, eval_exact(p, mpz_class(-m))};
    rep.all_positive = rep.all_positive && nv.value > 0;
    rep.values.push_back(std::move(nv));
  }
  return rep;
}

CoronaMinus2Report corona_minus2_check(CoronaVariant variant, int m) {
  if (m < 1) throw std::invalid_argument("corona_minus2_check: m must be at least 1");
  CoronaMinus2Report rep;
  rep.id = FamilyId::corona(variant, m);
  const IntPolynomial& p = family_poly(rep.id);
  rep.degree = p.degree();
  rep.order = family_order(rep.id);
  rep.value_at_minus2 = eval_exact(p, mpz_class(-2));
  rep.minus2_is_root = rep.value_at_minus2 == 0;
  rep.zero_is_root = p.zero_multiplicity() > 0;
  if (rep.degree <= kSturmDegreeBudget) {
    rep.distinct_real_roots = count_real_roots(p);
    rep.exclusivity_checked = true;
    rep.exclusive = rep.minus2_is_root && rep.zero_is_root && *rep.distinct_real_roots == 2;
  } else {
    rep.note = "degree " + std::to_string(rep.degree) + " exceeds the Sturm budget of " +
               std::to_string(kSturmDegreeBudget) + "; exclusivity not checked";
  }
  if (variant == CoronaVariant::OddOdd && m == 1) {
    const CoronaShape s = corona_shape(variant, m);
    const Graph g = corona(book(s.book_n), friendship(s.friendship_n));
    rep.oracle_match = brute_force_dompoly(g) == p;
  }
  return rep;
}

}  // namespace domroots
