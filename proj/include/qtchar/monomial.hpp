#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qtchar/cartan.hpp"
#include "qtchar/gamma.hpp"

namespace qtchar {

// Identifies the variable ring a monomial lives in.
struct CartanKey {
  Family family;
  int rank;
  friend bool operator==(const CartanKey&, const CartanKey&) = default;
};
inline CartanKey key_of(const CartanData& cd) { return {cd.family, cd.rank}; }

// Sparse Laurent monomial in the variables Y_{i,p}: a table of nonzero
// exponents keyed by (node, spectral index), kept sorted by (node, p).
class Monomial {
 public:
  struct Entry {
    int node;
    int p;
    int exp;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Monomial() : ck_{Family::A, 1} {}
  explicit Monomial(CartanKey ck) : ck_(ck) {}

  static Monomial one(CartanKey ck) { return Monomial(ck); }
  static Monomial y(CartanKey ck, int node, int p, int exp = 1);

  const CartanKey& cartan() const { return ck_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }

  int exp_at(int node, int p) const;
  void set_exp(int node, int p, int exp);            // overwrite, erase if 0
  void mul_var(int node, int p, int exp);            // multiply by Y_{node,p}^exp

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int k) const;

  bool dominant() const;
  bool i_dominant(int node) const;

  // Spectral index span over all nodes; {0,0} for the empty monomial.
  std::pair<int, int> p_range() const;

  // Total strict ordering used for map keys and canonical iteration:
  // lexicographic over the sorted (node, p, exp) entry list.
  bool operator<(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return ck_ == o.ck_ && entries_ == o.entries_; }

 private:
  std::vector<Entry> entries_;
  CartanKey ck_;
};

// A_{i,p}: the simple-root analog, with Y_{i,p +- d_i} and the inverse
// neighbor factors dictated by the column entries c_{ji}.
Monomial a_monomial(const CartanData& cd, int node, int p);

// One A-factor slot of a Nakajima factorization.
struct AFactor {
  int node;
  int p;
  int exp;  // > 0
};

// Decides m <= m' in the Nakajima ordering, i.e. whether m' * m^{-1} is a
// product of nonnegative powers of A_{i,p}.  When restrict_nodes is given,
// only factors A_{i,p} with i in that set are allowed (the <=_I variant).
// Returns the exponent multiset on success (unique: the A_{i,p} are
// algebraically independent), nullopt otherwise.
//
// Decision procedure: scan spectral indices descending; within one index
// process nodes by descending d_i (a long-node factor A_{j,p} contributes
// Y_{i,p+1}^{-1} at an adjacent short node i, so it must be divided out
// before the short slot at p is read); the exponent of Y_{i,p+d_i} in the
// residual then forces the slot exponent exactly.
std::optional<std::vector<AFactor>> nakajima_factorize(
    const CartanData& cd, const Monomial& m, const Monomial& m_prime,
    const std::vector<int>* restrict_nodes = nullptr);

bool nakajima_leq(const CartanData& cd, const Monomial& m, const Monomial& m_prime,
                  const std::vector<int>* restrict_nodes = nullptr);

// Bilinear extension of gamma(Y_{i,p}, Y_{j,s}) = gamma_{ij}(p-s).
long long gamma_pair(const GammaTable& g, const Monomial& m1, const Monomial& m2);

}  // namespace qtchar
