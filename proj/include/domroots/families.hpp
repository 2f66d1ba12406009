#pragma once

/**
 * @file families.hpp
 * @brief Closed-form domination polynomials of friendship and book graphs,
 *        the union/join/corona composition rules, and the three corona
 *        families B∘F built from them.
 */

#include <string>

#include "domroots/exactpoly.hpp"

namespace domroots {

enum class FamilyKind { Friendship, Book, CoronaBF };

/// The three corona families, indexed by m >= 1.
enum class CoronaVariant {
  OddOdd,   ///< B_{2m-1} ∘ F_{2m-1}
  EvenOdd,  ///< B_{2m} ∘ F_{2m+1}
  OddEven,  ///< B_{2m+1} ∘ F_{2m}
};

struct FamilyId {
  FamilyKind kind = FamilyKind::Friendship;
  int n = 1;  ///< family index, or m for CoronaBF
  CoronaVariant variant = CoronaVariant::OddOdd;

  static FamilyId friendship(int n);
  static FamilyId book(int n);
  static FamilyId corona(CoronaVariant v, int m);

  std::string name() const;  // e.g. "F10", "B4", "B1∘F1"
  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Book index and friendship index of a corona family member.
struct CoronaShape {
  int book_n;
  int friendship_n;
};
CoronaShape corona_shape(CoronaVariant v, int m);
std::string corona_variant_name(CoronaVariant v);

/// (2x + x^2)^n + x(1 + x)^{2n}
IntPolynomial friendship_poly(int n);
/// (x^2 + 2x)^n (2x + 1) + x^2 (1 + x)^{2n} - 2x^n
IntPolynomial book_poly(int n);
/// D(G ∪ H) = D(G) D(H)
IntPolynomial union_poly(const IntPolynomial& dG, const IntPolynomial& dH);
/// D(G + H) = ((1+x)^{|G|} - 1)((1+x)^{|H|} - 1) + D(G) + D(H)
IntPolynomial join_poly(const IntPolynomial& dG, int nG, const IntPolynomial& dH, int nH);
/// D(G ∘ H) = (x(1+x)^{|H|} + D(H))^{|G|}; independent of the edges of G.
IntPolynomial corona_poly(const IntPolynomial& dH, int nH, int nG);

/// Closed form for any family member, expanded once and cached.
const IntPolynomial& family_poly(const FamilyId& id);
/// Vertex count of the family member.
int family_order(const FamilyId& id);

}  // namespace domroots
