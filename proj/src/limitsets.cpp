#include "domroots/limitsets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "domroots/complexroots.hpp"

namespace domroots {

namespace {

using cd = std::complex<double>;

cd eval_d(const IntPolynomial& p, cd z) {
  cd acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

std::vector<cd> roots_of(const IntPolynomial& p) {
  std::vector<cd> out;
  if (p.degree() < 1) return out;
  SolverOptions opt;
  opt.precision_bits = 128;
  const RootSet rs = all_roots(squarefree_part(p), opt, "aux");
  for (const auto& r : rs.roots) out.push_back(r.value.to_std());
  return out;
}

}  // namespace

bool unimodular_multiple(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree() || a.is_zero()) return false;
  if (abs(a.leading()) != abs(b.leading())) return false;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (a.coeffs()[i] * b.leading() != b.coeffs()[i] * a.leading()) return false;
  return true;
}

ExpPolyFamily::ExpPolyFamily(std::vector<ExpPolyTerm> terms, std::string name)
    : terms_(std::move(terms)), name_(std::move(name)) {
  if (terms_.empty()) throw std::invalid_argument("exponential polynomial family needs at least one term");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].alpha.is_zero() || terms_[i].lambda.is_zero())
      throw std::invalid_argument("term " + std::to_string(i) + " has a zero alpha or lambda");
    for (std::size_t j = 0; j < i; ++j)
      if (unimodular_multiple(terms_[i].lambda, terms_[j].lambda))
        throw std::invalid_argument("lambda_" + std::to_string(j) + " and lambda_" + std::to_string(i) +
                                    " differ by a unimodular constant");
  }
  // f_n(z) obeys a linear recurrence of order k in n, so vanishing for
  // n = 1..k+1 means vanishing for every n >= 1.
  IntPolynomial g;
  for (unsigned n = 1; n <= terms_.size() + 1; ++n) g = gcd(g, member(n));
  if (g.degree() >= 1) persistent_ = roots_of(g);
}

IntPolynomial ExpPolyFamily::member(unsigned n) const {
  IntPolynomial f;
  for (const auto& t : terms_) f = f + t.alpha * pow(t.lambda, n);
  return f;
}

ExpPolyFamily book_family() {
  return ExpPolyFamily({{IntPolynomial{1, 2}, IntPolynomial{0, 2, 1}},
                        {IntPolynomial{0, 0, 1}, IntPolynomial{1, 2, 1}},
                        {IntPolynomial{-2}, IntPolynomial{0, 1}}},
                       "book");
}

ExpPolyFamily friendship_family() {
  return ExpPolyFamily({{IntPolynomial{1}, IntPolynomial{0, 2, 1}}, {IntPolynomial{0, 1}, IntPolynomial{1, 2, 1}}},
                       "friendship");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::TiedDominantPair:
      return "on limit set (tied dominant pair)";
    case Verdict::VanishingDominantAlpha:
      return "on limit set (dominant term with vanishing coefficient)";
    case Verdict::SpecialPoint:
      return "special point (root of every member)";
    case Verdict::BoundaryTie:
      return "boundary (three-way tie at the top)";
    case Verdict::NotOnLimitSet:
      return "not on limit set";
  }
  return "?";
}

LimitClassification classify_point(const ExpPolyFamily& fam, cd z, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("classify_point: eps must be positive");
  LimitClassification c;
  c.point = z;
  const auto& terms = fam.terms();
  for (std::size_t j = 0; j < terms.size(); ++j)
    c.moduli.emplace_back(std::abs(eval_d(terms[j].lambda, z)), static_cast<int>(j));
  std::stable_sort(c.moduli.begin(), c.moduli.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

  for (const cd& r : fam.persistent_roots())
    if (std::abs(z - r) <= eps) {
      c.verdict = Verdict::SpecialPoint;
      return c;
    }

  const double m1 = c.moduli[0].first;
  const double m2 = c.moduli.size() > 1 ? c.moduli[1].first : -INFINITY;
  const double m3 = c.moduli.size() > 2 ? c.moduli[2].first : -INFINITY;
  if (c.moduli.size() > 1 && m1 - m2 <= eps) {
    if (c.moduli.size() > 2 && m2 - m3 <= eps) {
      c.verdict = Verdict::BoundaryTie;
      c.margin = m2 - m3;
      return c;
    }
    const int i = std::min(c.moduli[0].second, c.moduli[1].second);
    const int j = std::max(c.moduli[0].second, c.moduli[1].second);
    c.tied = std::make_pair(i, j);
    c.margin = c.moduli.size() > 2 ? m2 - m3 : m2;
    c.verdict = Verdict::TiedDominantPair;
    return c;
  }
  c.dominant = c.moduli[0].second;
  c.margin = c.moduli.size() > 1 ? m1 - m2 : m1;
  c.dominant_alpha = std::abs(eval_d(terms[static_cast<std::size_t>(*c.dominant)].alpha, z));
  c.verdict = c.dominant_alpha < eps ? Verdict::VanishingDominantAlpha : Verdict::NotOnLimitSet;
  return c;
}

double hyperbola_residual(cd z) {
  const double a = z.real(), b = z.imag();
  return (a + 1) * (a + 1) - b * b - 0.5;
}

double circle_residual(cd z) {
  const double a = z.real(), b = z.imag();
  return (a + 2) * (a + 2) + b * b - 1;
}

double quartic_residual(cd z) {
  const double a = z.real(), b = z.imag();
  const double u = (a + 1) * (a + 1) + b * b;
  return u * u - (a * a + b * b);
}

std::vector<LimitPolyline> book_limit_polylines(int resolution, double b_max, double eps) {
  if (resolution < 2) throw std::invalid_argument("book limit curves: resolution must be at least 2");
  const ExpPolyFamily fam = book_family();
  std::vector<LimitPolyline> out;
  LimitPolyline cur;
  auto flush = [&] {
    if (!cur.points.empty()) out.push_back(cur);
    cur.points.clear();
  };
  auto visit = [&](const char* name, cd z, double dominance, std::pair<int, int> pair) {
    if (cur.component != name) {
      flush();
      cur.component = name;
    }
    if (!(dominance > eps)) {
      flush();
      return;
    }
    const LimitClassification c = classify_point(fam, z, eps);
    if (c.verdict != Verdict::TiedDominantPair || c.tied != pair) {
      std::ostringstream os;
      os << name << " sample " << z << " classified as " << to_string(c.verdict);
      throw std::logic_error(os.str());
    }
    cur.points.push_back(z);
  };
  auto c12 = [&](cd z) { visit("C12", z, std::norm(z + 1.0) - std::abs(z), {0, 1}); };
  auto c13 = [&](cd z) { visit("C13", z, std::abs(z) - std::norm(z + 1.0), {0, 2}); };
  auto c23 = [&](cd z) { visit("C23", z, 1 - std::abs(z + 2.0), {1, 2}); };
  const double two_pi = 2 * std::numbers::pi;

  // Hyperbola (a+1)^2 - b^2 = 1/2, parametrised by b, one branch at a time.
  for (double sign : {-1.0, 1.0}) {
    for (int k = 0; k < resolution; ++k) {
      const double b = -b_max + 2 * b_max * k / (resolution - 1);
      c12(cd(-1 + sign * std::sqrt(0.5 + b * b), b));
    }
    flush();
  }
  // Circle |x + 2| = 1 by angle.
  for (int k = 0; k <= resolution; ++k) c13(cd(-2, 0) + std::polar(1.0, two_pi * k / resolution));
  flush();
  // Quartic |x+1|^2 = |x|. With x = r e^{i theta} this reads
  // r^2 + (2 cos theta - 1) r + 1 = 0, real exactly when cos theta <= -1/2.
  // The outer root is traced forward in theta, the inner one backward, which
  // walks once around the closed curve.
  auto quartic_point = [](double theta, int branch) {
    const double p = 1 - 2 * std::cos(theta);
    const double disc = std::sqrt(std::max(0.0, p * p - 4));
    return std::polar((p + branch * disc) / 2, theta);
  };
  for (int k = 0; k < resolution; ++k) c23(quartic_point(two_pi / 3 + (two_pi / 3) * k / (resolution - 1), 1));
  for (int k = resolution - 1; k >= 0; --k)
    c23(quartic_point(two_pi / 3 + (two_pi / 3) * k / (resolution - 1), -1));
  flush();
  return out;
}

std::vector<LimitPolyline> friendship_limit_polylines(int resolution, double b_max, double eps) {
  if (resolution < 2) throw std::invalid_argument("friendship limit curve: resolution must be at least 2");
  const ExpPolyFamily fam = friendship_family();
  std::vector<LimitPolyline> out;
  for (double sign : {-1.0, 1.0}) {
    LimitPolyline line{"hyperbola", {}};
    for (int k = 0; k < resolution; ++k) {
      const double b = -b_max + 2 * b_max * k / (resolution - 1);
      const cd z(-1 + sign * std::sqrt(0.5 + b * b), b);
      const LimitClassification c = classify_point(fam, z, eps);
      if (c.verdict != Verdict::TiedDominantPair) {
        std::ostringstream os;
        os << "hyperbola sample " << z << " classified as " << to_string(c.verdict);
        throw std::logic_error(os.str());
      }
      line.points.push_back(z);
    }
    out.push_back(std::move(line));
  }
  return out;
}

BookComponents book_limit_components(int resolution, double b_max, double eps) {
  BookComponents out;
  for (const LimitPolyline& line : book_limit_polylines(resolution, b_max, eps)) {
    auto& dst = line.component == "C12" ? out.c12 : line.component == "C13" ? out.c13 : out.c23;
    dst.insert(dst.end(), line.points.begin(), line.points.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quadratic surds

QuadraticSurd::QuadraticSurd(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ == 0) d_ = 1;
  if (d_ < 1) throw std::invalid_argument("QuadraticSurd: radicand must be positive");
}

int QuadraticSurd::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0 || d_ == 1) return sgn(mpq_class(a_ + b_ * d_));
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b sqrt(d) have opposite signs: compare squares.
  const mpq_class diff = a_ * a_ - b_ * b_ * d_;
  return sgn(diff) * sa;
}

double QuadraticSurd::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_)); }

std::string QuadraticSurd::to_string() const {
  std::ostringstream os;
  if (b_ == 0 || d_ == 1) {
    os << mpq_class(a_ + b_ * d_).get_str();
    return os.str();
  }
  if (a_ != 0) os << a_.get_str() << (b_ < 0 ? " - " : " + ");
  else if (b_ < 0) os << "-";
  const mpq_class mag = abs(b_);
  if (mag != 1) os << mag.get_str() << "*";
  os << "sqrt(" << d_ << ")";
  return os.str();
}

namespace {

long common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  const long dx = x.radicand(), dy = y.radicand();
  if (dx == 1) return dy;
  if (dy == 1 || dx == dy) return dx;
  throw std::invalid_argument("QuadraticSurd: mixed radicands");
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y)};
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
  return {x.a_ - y.a_, x.b_ - y.b_, common_radicand(x, y)};
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  const long d = common_radicand(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadraticSurd abs(const QuadraticSurd& x) { return x.sign() < 0 ? QuadraticSurd(-x.a_, -x.b_, x.d_) : x; }

// ---------------------------------------------------------------------------
// Real-axis intersections of the book limit set

namespace {

using Q = QuadraticSurd;

Q rat(long num, long den = 1) { return Q(mpq_class(num, den), 0, 1); }

// For real x the three moduli are |x(x+2)|, (x+1)^2 and |x|.
struct RealModuli {
  Q l1, l2, l3;
};

RealModuli real_moduli(const Q& x) {
  return {abs(x * (x + rat(2))), (x + rat(1)) * (x + rat(1)), abs(x)};
}

RealIntersection make(const std::string& label, const std::string& component, const Q& x) {
  const ExpPolyFamily fam = book_family();
  RealIntersection r;
  r.label = label;
  r.component = component;
  r.value = x;
  const RealModuli m = real_moduli(x);
  if (component == "C12") {
    r.equation = "(a+1)^2 - 1/2 = 0";
    r.equation_holds = ((x + rat(1)) * (x + rat(1)) - rat(1, 2)).sign() == 0;
    r.dominance = "|x+1|^2 >= |x|";
    r.dominance_margin = m.l2 - m.l3;
  } else if (component == "C13") {
    r.equation = "(a+2)^2 - 1 = 0";
    r.equation_holds = ((x + rat(2)) * (x + rat(2)) - rat(1)).sign() == 0;
    r.dominance = "|x| >= |x+1|^2";
    r.dominance_margin = m.l3 - m.l2;
  } else if (component == "C23") {
    r.equation = "x^2 + 3x + 1 = 0";
    r.equation_holds = (x * x + rat(3) * x + rat(1)).sign() == 0 && (m.l2 * m.l2 - x * x).sign() == 0;
    r.dominance = "|x+2| <= 1";
    r.dominance_margin = rat(1) - abs(x + rat(2));
  } else if (label == "0") {
    r.equation = "D(B_n, 0) = 0 for every n";
    r.equation_holds = x.sign() == 0;
    r.dominance = "root of every member";
    r.dominance_margin = rat(0);
  } else {
    r.equation = "2x + 1 = 0";
    r.equation_holds = (rat(2) * x + rat(1)).sign() == 0;
    r.dominance = "|x(x+2)| > max(|x|, |x+1|^2)";
    const Q other = (m.l3 - m.l2).sign() >= 0 ? m.l3 : m.l2;
    r.dominance_margin = m.l1 - other;
  }
  r.dominance_holds = label == "0" ? true : (label == "-1/2" ? r.dominance_margin.sign() > 0
                                                           : r.dominance_margin.sign() >= 0);
  r.classification = classify_point(fam, cd(x.to_double(), 0.0), kAnalyticEps);
  return r;
}

}  // namespace

std::vector<RealIntersection> book_real_intersections() {
  return {
      make("0", "special", rat(0)),
      make("-1/2", "special", rat(-1, 2)),
      make("-1+1/sqrt2", "C12", Q(-1, mpq_class(1, 2), 2)),
      make("-1-1/sqrt2", "C12", Q(-1, mpq_class(-1, 2), 2)),
      make("-1", "C13", rat(-1)),
      make("-3", "C13", rat(-3)),
      make("(-3-sqrt5)/2", "C23", Q(mpq_class(-3, 2), mpq_class(-1, 2), 5)),
  };
}

RealIntersection book_c23_excluded_candidate() {
  return make("(-3+sqrt5)/2", "C23", Q(mpq_class(-3, 2), mpq_class(1, 2), 5));
}

// ---------------------------------------------------------------------------
// Generic sampling and root-cloud distance

std::vector<cd> sample_limit_set(const ExpPolyFamily& fam, cd lower_left, cd upper_right, int lines, double eps) {
  if (lines < 2) throw std::invalid_argument("sample_limit_set: need at least two grid lines");
  const auto& terms = fam.terms();
  const std::size_t k = terms.size();
  auto moduli = [&](cd z) {
    std::vector<double> m(k);
    for (std::size_t j = 0; j < k; ++j) m[j] = std::abs(eval_d(terms[j].lambda, z));
    return m;
  };
  std::vector<cd> out;
  auto dominates = [&](cd z, std::size_t i, std::size_t j) {
    const auto m = moduli(z);
    const double top = std::min(m[i], m[j]);
    for (std::size_t o = 0; o < k; ++o)
      if (o != i && o != j && !(top - m[o] > eps)) return false;
    return true;
  };
  auto scan = [&](cd from, cd to, std::size_t i, std::size_t j) {
    auto g = [&](cd z) { return std::abs(eval_d(terms[i].lambda, z)) - std::abs(eval_d(terms[j].lambda, z)); };
    cd prev = from;
    double gprev = g(prev);
    for (int s = 1; s < lines; ++s) {
      const cd cur = from + (to - from) * (static_cast<double>(s) / (lines - 1));
      const double gcur = g(cur);
      if (gprev == 0) {
        if (dominates(prev, i, j)) out.push_back(prev);
      } else if ((gprev < 0) != (gcur < 0) && gcur != 0) {
        cd lo = prev, hi = cur;
        const bool lo_neg = gprev < 0;
        for (int it = 0; it < 60; ++it) {
          const cd mid = (lo + hi) * 0.5;
          if ((g(mid) < 0) == lo_neg)
            lo = mid;
          else
            hi = mid;
        }
        const cd root = (lo + hi) * 0.5;
        if (dominates(root, i, j)) out.push_back(root);
      }
      prev = cur;
      gprev = gcur;
    }
  };
  const double x0 = lower_left.real(), y0 = lower_left.imag();
  const double x1 = upper_right.real(), y1 = upper_right.imag();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (int l = 0; l < lines; ++l) {
        const double t = static_cast<double>(l) / (lines - 1);
        const double y = y0 + (y1 - y0) * t;
        const double x = x0 + (x1 - x0) * t;
        scan(cd(x0, y), cd(x1, y), i, j);
        scan(cd(x, y0), cd(x, y1), i, j);
      }

  for (const auto& t : terms)
    for (const cd& r : roots_of(t.alpha)) {
      const LimitClassification c = classify_point(fam, r, kAnalyticEps);
      if (c.verdict == Verdict::VanishingDominantAlpha) out.push_back(r);
    }
  for (const cd& r : fam.persistent_roots()) out.push_back(r);
  return out;
}

RootCloudDistance root_cloud_distance(const ExpPolyFamily& fam, int n, int lines, double compact_radius) {
  if (n < 1) throw std::invalid_argument("root_cloud_distance: n must be at least 1");
  const IntPolynomial f = fam.member(static_cast<unsigned>(n));
  const RootSet rs = all_roots(f, SolverOptions{}, fam.name() + " n=" + std::to_string(n));
  std::vector<cd> measured;
  for (const auto& r : rs.roots) {
    if (r.value.re.is_zero() && r.value.im.is_zero()) continue;
    const cd z = r.value.to_std();
    bool persistent = false;
    for (const cd& p : fam.persistent_roots()) persistent = persistent || std::abs(z - p) < 1e-8;
    if (!persistent) measured.push_back(z);
  }
  RootCloudDistance out;
  out.n = n;
  out.compact_radius = compact_radius;
  if (measured.empty()) return out;
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const cd& z : measured) {
    x0 = std::min(x0, z.real());
    x1 = std::max(x1, z.real());
    y0 = std::min(y0, z.imag());
    y1 = std::max(y1, z.imag());
  }
  const double margin = 0.5;
  const std::vector<cd> samples = sample_limit_set(fam, cd(x0 - margin, y0 - margin), cd(x1 + margin, y1 + margin),
                                                   lines, kSampleEps);
  out.limit_samples = samples.size();
  double sum = 0;
  for (const cd& z : measured) {
    double best = INFINITY;
    for (const cd& s : samples) best = std::min(best, std::abs(z - s));
    out.max_distance = std::max(out.max_distance, best);
    if (std::abs(z) <= compact_radius) out.max_distance_compact = std::max(out.max_distance_compact, best);
    sum += best;
  }
  out.roots_measured = measured.size();
  out.mean_distance = sum / static_cast<double>(measured.size());
  return out;
}

}  // namespace domroots
