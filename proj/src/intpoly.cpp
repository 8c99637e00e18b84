#include "qtchar/intpoly.hpp"

#include "qtchar/errors.hpp"

namespace qtchar::poly {

Poly make(std::initializer_list<long long> cs) {
  Poly p(cs);
  normalize(p);
  return p;
}

void normalize(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) { return p.empty(); }

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  normalize(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  normalize(r);
  return r;
}

Poly neg(const Poly& a) {
  Poly r = a;
  for (auto& c : r) c = -c;
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (is_zero(a) || is_zero(b)) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  normalize(r);
  return r;
}

Poly shift(const Poly& a, int k) {
  if (is_zero(a)) return {};
  Poly r(a.size() + k, 0);
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

Poly div_exact(const Poly& a, const Poly& b) {
  require(!is_zero(b), ErrorKind::Internal, "polynomial division by zero");
  if (is_zero(a)) return {};
  require(a.size() >= b.size(), ErrorKind::Internal, "inexact polynomial division");
  Poly rem = a;
  Poly q(a.size() - b.size() + 1, 0);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    const long long num = rem[k + b.size() - 1];
    if (num == 0) continue;
    require(num % b.back() == 0, ErrorKind::Internal, "inexact polynomial division");
    const long long coef = num / b.back();
    q[k] = coef;
    for (size_t j = 0; j < b.size(); ++j) rem[k + j] -= coef * b[j];
  }
  normalize(rem);
  require(is_zero(rem), ErrorKind::Internal, "inexact polynomial division");
  normalize(q);
  return q;
}

int valuation(const Poly& p) {
  for (size_t k = 0; k < p.size(); ++k)
    if (p[k] != 0) return static_cast<int>(k);
  return -1;
}

Poly det(PolyMatrix m) {
  const size_t n = m.size();
  if (n == 0) return make({1});
  int sign = 1;
  Poly prev = make({1});
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      size_t piv = k + 1;
      while (piv < n && is_zero(m[piv][k])) ++piv;
      if (piv == n) return {};  // singular column
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]));
        m[i][j] = div_exact(num, prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  Poly result = m[n - 1][n - 1];
  if (sign < 0) result = neg(result);
  return result;
}

PolyMatrix adjugate(const PolyMatrix& m) {
  const size_t n = m.size();
  PolyMatrix adj(n, std::vector<Poly>(n));
  if (n == 1) {
    adj[0][0] = make({1});
    return adj;
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      // Cofactor C_{j,i}: delete row j, column i.
      PolyMatrix minor(n - 1, std::vector<Poly>(n - 1));
      for (size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      Poly cof = det(std::move(minor));
      if ((i + j) % 2 == 1) cof = neg(cof);
      adj[i][j] = cof;
    }
  }
  return adj;
}

}  // namespace qtchar::poly
