#pragma once

#include <map>

#include "qtchar/halft.hpp"
#include "qtchar/monomial.hpp"

namespace qtchar {

// Element of the quantum torus Y_t: a finite Z[t^{+-1/2}]-combination of
// Laurent monomials, in canonical form (no zero coefficients, terms iterated
// in the monomial key order).
class TorusElement {
 public:
  TorusElement() : ck_{Family::A, 1} {}
  explicit TorusElement(CartanKey ck) : ck_(ck) {}

  static TorusElement monomial(const Monomial& m, HalfT c = HalfT::one());

  const CartanKey& cartan() const { return ck_; }
  const std::map<Monomial, HalfT>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  HalfT coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const HalfT& c);

  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement scaled(const HalfT& c) const;
  bool operator==(const TorusElement& o) const { return ck_ == o.ck_ && terms_ == o.terms_; }

  // t-exponent negation on every coefficient; fixes monomials.  This is the
  // restriction of the bar anti-involution to the additive structure; the
  // anti-automorphism law bar(x*y) = bar(y)*bar(x) is a tested property.
  TorusElement bar() const;

  // Specialization t^{1/2} -> 1: collapses each coefficient to its sum.
  TorusElement ev_t1() const;
  bool t_free() const;  // all coefficients constant

 private:
  std::map<Monomial, HalfT> terms_;
  CartanKey ck_;
};

// Deformed product: bilinear extension of m * m' = t^{gamma(m,m')/2} m m'.
TorusElement star_product(const GammaTable& g, const TorusElement& x, const TorusElement& y);

// An element with designated top monomial occurring with coefficient exactly
// 1 and all other monomials strictly below it in the Nakajima ordering; the
// invariant is verified at construction (NotPointed otherwise).
class Pointed {
 public:
  Pointed(const CartanData& cd, Monomial top, TorusElement body);

  const Monomial& top() const { return top_; }
  const TorusElement& body() const { return body_; }
  bool operator==(const Pointed& o) const { return top_ == o.top_ && body_ == o.body_; }

 private:
  Monomial top_;
  TorusElement body_;
};

}  // namespace qtchar
