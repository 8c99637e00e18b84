#pragma once

#include <map>

#include "qtchar/engine.hpp"
#include "qtchar/freeze.hpp"

namespace qtchar {

// Order-2 diagram automorphism of a simply-laced classical diagram (type A:
// the flip i -> n+1-i; type D: swap of the fork nodes 1 and 2) together with
// its Cartan data.  The formal sign omega is handled structurally via the
// Z/2 grading of unfolded spectral parameters, never numerically.
struct FoldingDatum {
  CartanData cartan;
  std::vector<int> sigma;  // sigma[i-1]

  // Throws UnsupportedFolding outside (A_n, n>=2) and (D_n, n>=4).
  static FoldingDatum standard(LieType type);

  int apply(int node) const { return sigma[node - 1]; }
};

// Signed node labels for type A foldings: A_{2l+1} uses -l..l, A_{2l} uses
// -l..-1, 1..l, both in path order.  Type D keeps 1..n.
int signed_to_internal(const CartanData& cd, int signed_label);
int internal_to_signed(const CartanData& cd, int node);

// Element of the twisted skeletal ring Y^sigma: an integer combination of
// monomials in the orbit variables Y_[i,p].  The skeletal orbit map is
// injective on I x Z, so the exponent tables coincide with untwisted ones;
// the interpretation differs.
class TwistedElement {
 public:
  TwistedElement() : ck_{Family::A, 1} {}
  explicit TwistedElement(CartanKey ck) : ck_(ck) {}

  const CartanKey& cartan() const { return ck_; }
  const std::map<Monomial, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coeff(const Monomial& m) const;
  void add_term(const Monomial& m, long long c);
  long long coeff_sum() const;
  bool operator==(const TwistedElement& o) const { return ck_ == o.ck_ && terms_ == o.terms_; }

 private:
  std::map<Monomial, long long> terms_;
  CartanKey ck_;
};

// Twisted pointed element: top orbit monomial with coefficient 1, all other
// monomials strictly below in the <=^sigma ordering.
struct TwistedPointed {
  Monomial top;
  TwistedElement body;

  TwistedPointed(const FoldingDatum& fd, Monomial top_m, TwistedElement body_el);
  bool operator==(const TwistedPointed& o) const { return top == o.top && body == o.body; }
};

// Folding homomorphism phi^sigma on the skeletal rings: relabels Y_{i,p} to
// Y_[i,p].  Requires t-free coefficients (NonConstantCoefficient otherwise).
TwistedElement fold_phi(const FoldingDatum& fd, const TorusElement& x);

// Twisted q-character of the simple with twisted highest weight phi(m):
// phi^sigma(chi_q(L(m))), which the folding theorem identifies with
// chi_q^sigma(L^sigma(phi(m))) for these foldings.
TwistedPointed chi_q_twisted(const FoldingDatum& fd, Engine& engine, const Monomial& m);

// Unfolded monomials carry spectral parameters (-1)^eps q^p; sigma acts by
// (i, p, eps) -> (sigma(i), p, eps+1).
struct UnfoldedMonomial {
  struct Entry {
    int node;
    int p;
    int eps;  // 0 or 1
    int exp;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;  // sorted by (node, p, eps)

  void mul_var(int node, int p, int eps, int exp);
  friend auto operator<=>(const UnfoldedMonomial&, const UnfoldedMonomial&) = default;
};

using UnfoldedElement = std::map<UnfoldedMonomial, long long>;

// Substitutes Y_[i,p] -> Y_{(i,p,0)} Y_{(sigma(i),p,1)} per the orbit-product
// definition of the twisted variables with r = 2.
UnfoldedElement unfold_expand(const FoldingDatum& fd, const TwistedElement& x);

UnfoldedElement sigma_apply(const FoldingDatum& fd, const UnfoldedElement& x);
bool sigma_invariant(const FoldingDatum& fd, const UnfoldedElement& x);

// Inclusion of folding data: the diagram inclusion must intertwine the two
// automorphisms.  For type A this forces equal parities and the centered
// embedding of signed labels; for type D it is the identity labeling.
struct TwistedInclusion {
  FoldingDatum small;
  FoldingDatum big;
  DiagramInclusion inc;

  TwistedInclusion(FoldingDatum small_fd, FoldingDatum big_fd);
};

// Twisted freezing: discard terms not <=^sigma_I below the top, then apply
// the twisted restriction res^sigma_I.
TwistedPointed twisted_freeze(const TwistedInclusion& tinc, const TwistedPointed& y);

}  // namespace qtchar
