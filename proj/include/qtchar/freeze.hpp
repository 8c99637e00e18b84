#pragma once

#include <optional>

#include "qtchar/torus.hpp"

namespace qtchar {

// Inclusion of Dynkin diagrams I in I~ within one classical family:
// embed[i-1] is the node of the big diagram carrying small node i.  The
// constructor verifies the compatibility condition on restricted Cartan
// entries and symmetrizers.
struct DiagramInclusion {
  CartanData small;
  CartanData big;
  std::vector<int> embed;

  DiagramInclusion(CartanData small_cd, CartanData big_cd, std::vector<int> embedding);

  // The labeling of Example-style inclusions: identity on 1..n.
  static DiagramInclusion standard(Family family, int small_rank, int big_rank);

  std::optional<int> preimage(int big_node) const;
};

// Ring homomorphism sending Y_{embed(i),p} to Y_{i,p} and the other variables
// to 1; linear on coefficients.  It does not intertwine the deformed
// products in general -- only the normalized compatibility of the freezing
// lemma holds, which check_lemma_frz exercises.
Monomial res_monomial(const DiagramInclusion& inc, const Monomial& m);
TorusElement res_I(const DiagramInclusion& inc, const TorusElement& x);

// Freezing operator: keep exactly the terms m' <=_I top (A-factorization
// through embedded nodes only), then apply res_I.  The result is
// res_I(top)-pointed.
Pointed freeze(const DiagramInclusion& inc, const Pointed& y);

// Lemma-style compatibility: freeze(t^{-gamma~(m1,m2)/2} y1 * y2) equals
// t^{-gamma(res m1, res m2)/2} freeze(y1) * freeze(y2).
bool check_lemma_frz(const DiagramInclusion& inc, const GammaTable& g_small,
                     const GammaTable& g_big, const Pointed& y1, const Pointed& y2);

}  // namespace qtchar
