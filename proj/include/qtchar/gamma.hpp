#pragma once

#include <memory>
#include <shared_mutex>
#include <vector>

#include "qtchar/cartan.hpp"
#include "qtchar/intpoly.hpp"

namespace qtchar {

// Exact series data for the inverse deformed Cartan matrix C(z)^{-1} and the
// induced pairing gamma.
//
// Entries of C(z) are cleared of denominators by multiplying through with
// z^M (M = max d_i); the resulting integer-polynomial matrix is inverted by
// fraction-free elimination as adjugate/determinant, and each entry is
// expanded as a power series by long division.  The normalized denominator
// must have constant term +-1 (NonUnitConstant otherwise).
//
// Logically immutable after construction; the lazily extended coefficient
// tables are guarded by a shared mutex so concurrent readers are safe.
class GammaTable {
 public:
  explicit GammaTable(CartanData cd, int initial_horizon = 160);

  const CartanData& cartan() const { return cd_; }

  // Taylor coefficient c'_{ij}(u) of the (i,j)-entry of C(z)^{-1} at z=0.
  long long cprime(int i, int j, int u) const;

  // gamma_{ij}(u) = c'(u-d_i) - c'(u+d_i) - c'(-u-d_i) + c'(-u+d_i).
  long long gamma_ij(int i, int j, int u) const;

 private:
  CartanData cd_;
  poly::Poly denom_;  // constant term normalized to +1
  int shift_ = 0;     // c'_{ij}(u) = series(adj_ij/denom) at index u - shift_
  std::vector<poly::Poly> numer_;  // adjugate entries, row-major
  mutable std::vector<std::vector<long long>> series_;  // per entry, index = exponent
  mutable std::shared_mutex mu_;
  mutable int horizon_ = -1;  // series filled for indices [0, horizon_]

  void extend_locked(int upto) const;
  long long series_at(int i, int j, int idx) const;
};

}  // namespace qtchar
