#include "domroots/families.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace domroots {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be at least 1, got " + std::to_string(n));
}

const IntPolynomial kX{0, 1};
const IntPolynomial kOnePlusX{1, 1};
const IntPolynomial kTwoXPlusXSquared{0, 2, 1};

}  // namespace

FamilyId FamilyId::friendship(int n) {
  require_positive(n, "friendship");
  return {FamilyKind::Friendship, n, CoronaVariant::OddOdd};
}

FamilyId FamilyId::book(int n) {
  require_positive(n, "book");
  return {FamilyKind::Book, n, CoronaVariant::OddOdd};
}

FamilyId FamilyId::corona(CoronaVariant v, int m) {
  require_positive(m, "corona");
  return {FamilyKind::CoronaBF, m, v};
}

CoronaShape corona_shape(CoronaVariant v, int m) {
  require_positive(m, "corona");
  switch (v) {
    case CoronaVariant::OddOdd:
      return {2 * m - 1, 2 * m - 1};
    case CoronaVariant::EvenOdd:
      return {2 * m, 2 * m + 1};
    case CoronaVariant::OddEven:
      return {2 * m + 1, 2 * m};
  }
  throw std::invalid_argument("unknown corona variant");
}

std::string corona_variant_name(CoronaVariant v) {
  switch (v) {
    case CoronaVariant::OddOdd:
      return "B(2m-1)∘F(2m-1)";
    case CoronaVariant::EvenOdd:
      return "B(2m)∘F(2m+1)";
    case CoronaVariant::OddEven:
      return "B(2m+1)∘F(2m)";
  }
  return "?";
}

std::string FamilyId::name() const {
  switch (kind) {
    case FamilyKind::Friendship:
      return "F" + std::to_string(n);
    case FamilyKind::Book:
      return "B" + std::to_string(n);
    case FamilyKind::CoronaBF: {
      auto s = corona_shape(variant, n);
      return "B" + std::to_string(s.book_n) + "∘F" + std::to_string(s.friendship_n);
    }
  }
  return "?";
}

IntPolynomial friendship_poly(int n) {
  require_positive(n, "friendship_poly");
  const auto un = static_cast<unsigned>(n);
  return pow(kTwoXPlusXSquared, un) + kX * pow(kOnePlusX, 2 * un);
}

IntPolynomial book_poly(int n) {
  require_positive(n, "book_poly");
  const auto un = static_cast<unsigned>(n);
  return pow(kTwoXPlusXSquared, un) * IntPolynomial{1, 2} + IntPolynomial::monomial(2) * pow(kOnePlusX, 2 * un) -
         IntPolynomial::monomial(un, 2);
}

IntPolynomial union_poly(const IntPolynomial& dG, const IntPolynomial& dH) { return dG * dH; }

IntPolynomial join_poly(const IntPolynomial& dG, int nG, const IntPolynomial& dH, int nH) {
  if (nG < 0 || nH < 0) throw std::invalid_argument("join_poly: negative vertex count");
  const IntPolynomial one = IntPolynomial::constant(1);
  return (pow(kOnePlusX, static_cast<unsigned>(nG)) - one) * (pow(kOnePlusX, static_cast<unsigned>(nH)) - one) + dG +
         dH;
}

IntPolynomial corona_poly(const IntPolynomial& dH, int nH, int nG) {
  if (nH < 0) throw std::invalid_argument("corona_poly: negative vertex count");
  require_positive(nG, "corona_poly");
  const IntPolynomial unit = kX * pow(kOnePlusX, static_cast<unsigned>(nH)) + dH;
  return pow(unit, static_cast<unsigned>(nG));
}

int family_order(const FamilyId& id) {
  switch (id.kind) {
    case FamilyKind::Friendship:
      return 2 * id.n + 1;
    case FamilyKind::Book:
      return 2 * id.n + 2;
    case FamilyKind::CoronaBF: {
      auto s = corona_shape(id.variant, id.n);
      const int g = 2 * s.book_n + 2;
      return g * (1 + 2 * s.friendship_n + 1);
    }
  }
  return 0;
}

namespace {

IntPolynomial build(const FamilyId& id) {
  switch (id.kind) {
    case FamilyKind::Friendship:
      return friendship_poly(id.n);
    case FamilyKind::Book:
      return book_poly(id.n);
    case FamilyKind::CoronaBF: {
      auto s = corona_shape(id.variant, id.n);
      return corona_poly(family_poly(FamilyId::friendship(s.friendship_n)), 2 * s.friendship_n + 1,
                         2 * s.book_n + 2);
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

const IntPolynomial& family_poly(const FamilyId& id) {
  using Key = std::tuple<int, int, int>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const IntPolynomial>> cache;
  const Key key{static_cast<int>(id.kind), id.n, static_cast<int>(id.variant)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_shared<const IntPolynomial>(build(id));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(value));
  return *it->second;
}

}  // namespace domroots
