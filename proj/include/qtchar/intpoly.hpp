#pragma once

#include <cstdint>
#include <vector>

namespace qtchar::poly {

// Dense univariate polynomial over Z, coeffs[k] = coefficient of z^k.
// The zero polynomial is the empty vector; nonzero polynomials carry a
// nonzero leading coefficient.
using Poly = std::vector<long long>;

Poly make(std::initializer_list<long long> cs);
void normalize(Poly& p);
bool is_zero(const Poly& p);
int degree(const Poly& p);  // -1 for zero
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly shift(const Poly& a, int k);  // multiply by z^k, k >= 0
// Exact quotient a / b; aborts the computation (Internal error) if b does not
// divide a in Z[z].  Used by the fraction-free elimination where divisions
// are exact by construction.
Poly div_exact(const Poly& a, const Poly& b);
int valuation(const Poly& p);  // lowest nonzero power, -1 for zero

using PolyMatrix = std::vector<std::vector<Poly>>;

// Fraction-free (Bareiss) determinant of a square polynomial matrix.
Poly det(PolyMatrix m);

// Adjugate matrix: adj(m)[i][j] = (-1)^{i+j} * det(minor_{j,i}); satisfies
// m * adj(m) = det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);

}  // namespace qtchar::poly
