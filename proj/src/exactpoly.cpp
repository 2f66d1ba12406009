#include "domroots/exactpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace domroots {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(unsigned k, const mpz_class& c) {
  std::vector<mpz_class> v(k + 1, 0);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

unsigned IntPolynomial::zero_multiplicity() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial vanishes everywhere");
  unsigned k = 0;
  while (coeffs_[k] == 0) ++k;
  return k;
}

IntPolynomial IntPolynomial::divided_by_x_power(unsigned k) const {
  if (k > 0 && (is_zero() || k > zero_multiplicity())) throw std::domain_error("x^k does not divide polynomial");
  if (is_zero()) return {};
  return IntPolynomial(std::vector<mpz_class>(coeffs_.begin() + k, coeffs_.end()));
}

std::string IntPolynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.get_str();
      if (k > 0) os << '*';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<mpz_class> r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<mpz_class> r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial scale(const IntPolynomial& p, const mpz_class& c) {
  std::vector<mpz_class> r(p.coeffs());
  for (auto& v : r) v *= c;
  return IntPolynomial(std::move(r));
}

IntPolynomial pow(const IntPolynomial& p, unsigned e) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<mpz_class> r(p.coeffs().size() - 1);
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) r[k - 1] = p.coeffs()[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(r));
}

mpq_class eval_exact(const IntPolynomial& p, const mpq_class& x) {
  mpq_class acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

mpz_class eval_exact(const IntPolynomial& p, const mpz_class& x) {
  mpz_class acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

// sign(p(u/v)) for v > 0, via the homogenized integer value p(u/v) * v^deg.
int sign_homogeneous(const IntPolynomial& p, const mpz_class& u, const mpz_class& v) {
  const auto& c = p.coeffs();
  if (c.empty()) return 0;
  mpz_class acc = c.back();
  mpz_class vp = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    vp *= v;
    acc *= u;
    if (c[i] != 0) mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), vp.get_mpz_t());
  }
  return sgn(acc);
}

int sign_at_bound(const IntPolynomial& p, const Bound& x) {
  if (p.is_zero()) return 0;
  switch (x.kind) {
    case Bound::Kind::PosInf:
      return sgn(p.leading());
    case Bound::Kind::NegInf:
      return (p.degree() % 2 == 0) ? sgn(p.leading()) : -sgn(p.leading());
    case Bound::Kind::Finite:
      break;
  }
  return sign_homogeneous(p, x.value.get_num(), x.value.get_den());
}

// p / content(p), keeping the sign of every value.
IntPolynomial divide_by_content(const IntPolynomial& p) {
  mpz_class g = content(p);
  if (g == 0 || g == 1) return p;
  std::vector<mpz_class> r(p.coeffs());
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(r));
}

// A positive multiple of (a mod b).
IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const mpz_class lb = b.leading();
  const mpz_class lb_abs = abs(lb);
  const int lb_sign = sgn(lb);
  std::vector<mpz_class> r(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  auto trim = [&r] {
    while (!r.empty() && r.back() == 0) r.pop_back();
  };
  trim();
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    mpz_class lr = r.back();
    if (lb_sign < 0) lr = -lr;
    for (auto& v : r) v *= lb_abs;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), bc[j].get_mpz_t());
    trim();
    if (r.size() > 1) {
      mpz_class g = 0;
      for (const auto& v : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
      }
      if (g > 1)
        for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

int sign_at(const IntPolynomial& p, const mpq_class& x) { return sign_homogeneous(p, x.get_num(), x.get_den()); }

Complex eval_complex(const IntPolynomial& p, const Complex& z) {
  const mpfr_prec_t prec = z.precision();
  if (prec < 53) throw std::invalid_argument("eval_complex requires at least 53 bits of precision");
  Complex acc(prec);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z;
    acc.re += Real(*it, prec);
  }
  return acc;
}

Real eval_real(const IntPolynomial& p, const Real& x) {
  Real acc(x.precision());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += Real(*it, x.precision());
  }
  return acc;
}

mpz_class content(const IntPolynomial& p) {
  mpz_class g = 0;
  for (const auto& v : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  IntPolynomial q = divide_by_content(p);
  return q.leading() < 0 ? scale(q, -1) : q;
}

IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial a = primitive_part(p);
  IntPolynomial b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = positive_pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

IntPolynomial divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) throw std::domain_error("divide_exact: divisor does not divide dividend");
  std::vector<mpz_class> r(p.coeffs());
  const auto& qc = q.coeffs();
  const std::size_t dq = qc.size() - 1;
  std::vector<mpz_class> quot(r.size() - dq, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = r[k + dq];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), q.leading().get_mpz_t()))
      throw std::domain_error("divide_exact: divisor does not divide dividend");
    mpz_class c = top / q.leading();
    quot[k] = c;
    for (std::size_t j = 0; j <= dq; ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), qc[j].get_mpz_t());
  }
  for (const auto& v : r)
    if (v != 0) throw std::domain_error("divide_exact: divisor does not divide dividend");
  return IntPolynomial(std::move(quot));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part of the zero polynomial");
  if (p.degree() == 0) return IntPolynomial::constant(1);
  IntPolynomial g = gcd(p, derivative(p));
  return primitive_part(divide_exact(primitive_part(p), g));
}

mpz_class cauchy_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("cauchy_bound of the zero polynomial");
  mpz_class m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, mpz_class(abs(p.coeffs()[static_cast<std::size_t>(k)])));
  mpz_class q;
  mpz_class lead = abs(p.leading());
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

// ---------------------------------------------------------------------------
// RatPolynomial

RatPolynomial::RatPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RatPolynomial::canonicalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPolynomial RatPolynomial::monic() const {
  if (coeffs_.empty()) return {};
  std::vector<mpq_class> r(coeffs_);
  const mpq_class lead = r.back();
  for (auto& c : r) c /= lead;
  return RatPolynomial(std::move(r));
}

IntPolynomial RatPolynomial::to_primitive() const {
  mpz_class l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> r;
  r.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.emplace_back(c.get_num() * (l / c.get_den()));
  return primitive_part(IntPolynomial(std::move(r)));
}

RatDivision divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<mpq_class> r(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) return {RatPolynomial{}, a};
  std::vector<mpq_class> q(r.size() - db, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpq_class c = r[k + db] / bc.back();
    q[k] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * bc[j];
  }
  r.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a;
  RatPolynomial y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// Sturm chains

SturmChain::SturmChain(const IntPolynomial& squarefree) {
  if (squarefree.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  polys_.push_back(divide_by_content(squarefree));
  IntPolynomial d = derivative(squarefree);
  if (d.is_zero()) return;
  polys_.push_back(divide_by_content(d));
  while (polys_.back().degree() > 0) {
    const IntPolynomial& a = polys_[polys_.size() - 2];
    const IntPolynomial& b = polys_.back();
    IntPolynomial r = positive_pseudo_remainder(a, b);
    if (r.is_zero()) break;
    polys_.push_back(divide_by_content(scale(r, -1)));
  }
}

int SturmChain::variations(const Bound& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : polys_) {
    int s = sign_at_bound(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count(const Bound& a, const Bound& b) const { return variations(a) - variations(b); }

int count_real_roots(const IntPolynomial& p, const Bound& a, const Bound& b) {
  if (p.is_zero()) throw std::domain_error("count_real_roots of the zero polynomial");
  if (p.degree() == 0) return 0;
  return SturmChain(squarefree_part(p)).count(a, b);
}

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p, const Bound& a, const Bound& b,
                                             const mpq_class& max_width) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  const IntPolynomial sf = squarefree_part(p);
  const SturmChain chain(sf);
  const mpq_class m(cauchy_bound(sf));
  mpq_class lo = a.kind == Bound::Kind::Finite ? a.value : mpq_class(-m);
  mpq_class hi = b.kind == Bound::Kind::Finite ? b.value : m;
  if (a.kind == Bound::Kind::PosInf || b.kind == Bound::Kind::NegInf || lo >= hi) return out;
  lo = std::max(lo, mpq_class(-m));
  hi = std::min(hi, m);
  if (lo >= hi) return out;

  struct Pending {
    mpq_class lo, hi;
    int count;
  };
  // Depth-first, left half first, so output is ascending.
  std::vector<Pending> stack{{lo, hi, chain.count(Bound::at(lo), Bound::at(hi))}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1 && cur.hi - cur.lo <= max_width) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    mpq_class mid = (cur.lo + cur.hi) / 2;
    int left = chain.count(Bound::at(cur.lo), Bound::at(mid));
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
  return out;
}

}  // namespace domroots
