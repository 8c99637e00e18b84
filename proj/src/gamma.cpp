#include "qtchar/gamma.hpp"

#include <cstdlib>
#include <mutex>

namespace qtchar {

namespace {

// Entry of z^M * C(z) as an integer polynomial.  Off-diagonal entries of C(z)
// are (z^{c_ij} - z^{-c_ij})/(z - z^{-1}) = -(z^{|c_ij|-1} + z^{|c_ij|-3} + ...).
poly::Poly cleared_entry(const CartanData& cd, int i, int j, int M) {
  poly::Poly p;
  auto bump = [&](int deg, long long v) {
    if (deg + 1 > static_cast<int>(p.size())) p.resize(deg + 1, 0);
    p[deg] += v;
  };
  if (i == j) {
    bump(M + cd.di(i), 1);
    bump(M - cd.di(i), 1);
  } else {
    const int c = cd.cij(i, j);
    for (int k = -c - 1; k >= -(-c - 1); k -= 2) bump(M + k, -1);
  }
  poly::normalize(p);
  return p;
}

}  // namespace

GammaTable::GammaTable(CartanData cd, int initial_horizon) : cd_(std::move(cd)) {
  const int n = cd_.rank;
  const int M = cd_.max_d();

  poly::PolyMatrix B(n, std::vector<poly::Poly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) B[i - 1][j - 1] = cleared_entry(cd_, i, j, M);

  poly::Poly det = poly::det(B);
  require(!poly::is_zero(det), ErrorKind::Internal, "deformed Cartan matrix is singular");
  const int v = poly::valuation(det);
  denom_.assign(det.begin() + v, det.end());
  require(std::abs(denom_[0]) == 1, ErrorKind::NonUnitConstant,
          "normalized denominator has non-unit constant term");

  poly::PolyMatrix adj = poly::adjugate(B);
  numer_.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) numer_[i * n + j] = adj[i][j];

  if (denom_[0] == -1) {
    denom_ = poly::neg(denom_);
    for (auto& p : numer_) p = poly::neg(p);
  }

  shift_ = M - v;
  series_.assign(n * n, {});
  std::unique_lock lock(mu_);
  extend_locked(initial_horizon);
}

void GammaTable::extend_locked(int upto) const {
  if (upto <= horizon_) return;
  const int n = cd_.rank;
  for (int e = 0; e < n * n; ++e) {
    auto& a = series_[e];
    const auto& num = numer_[e];
    a.reserve(upto + 1);
    for (int k = static_cast<int>(a.size()); k <= upto; ++k) {
      long long v = (k < static_cast<int>(num.size())) ? num[k] : 0;
      const int dmax = std::min<int>(k, poly::degree(denom_));
      for (int l = 1; l <= dmax; ++l) v -= denom_[l] * a[k - l];
      a.push_back(v);
    }
  }
  horizon_ = upto;
}

long long GammaTable::series_at(int i, int j, int idx) const {
  if (idx < 0) return 0;
  {
    std::shared_lock lock(mu_);
    if (idx <= horizon_) return series_[(i - 1) * cd_.rank + (j - 1)][idx];
  }
  std::unique_lock lock(mu_);
  extend_locked(std::max(idx + 2 * cd_.max_d(), 2 * horizon_));
  return series_[(i - 1) * cd_.rank + (j - 1)][idx];
}

long long GammaTable::cprime(int i, int j, int u) const {
  require(1 <= i && i <= cd_.rank && 1 <= j && j <= cd_.rank, ErrorKind::Mismatch,
          "node index out of range");
  return series_at(i, j, u - shift_);
}

long long GammaTable::gamma_ij(int i, int j, int u) const {
  const int d = cd_.di(i);
  return cprime(i, j, u - d) - cprime(i, j, u + d) - cprime(i, j, -u - d) + cprime(i, j, -u + d);
}

}  // namespace qtchar
