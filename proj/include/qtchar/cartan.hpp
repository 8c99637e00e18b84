#pragma once

#include <string>
#include <vector>

#include "qtchar/errors.hpp"

namespace qtchar {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Family family_from_char(char c);

struct LieType {
  Family family;
  int rank;
};

// Dynkin data for one classical simple Lie algebra: Cartan matrix, minimal
// symmetrizer, lacing number and dual Coxeter number.  Nodes are 1..rank with
// node 1 the short end of B and the long end of C; D forks at node 3.
struct CartanData {
  Family family;
  int rank;
  std::vector<std::vector<int>> c;  // c[i-1][j-1]
  std::vector<int> d;               // d[i-1]
  int lacing;                       // r_vee
  int dual_coxeter;                 // h_vee

  int cij(int i, int j) const { return c[i - 1][j - 1]; }
  int di(int i) const { return d[i - 1]; }
  int max_d() const;
  bool same_as(const CartanData& o) const { return family == o.family && rank == o.rank; }
  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

// Builds the Cartan data for a classical type; throws InvalidRank when the
// rank is outside the family bounds (A: >=1, B/C: >=2, D: >=4).
CartanData cartan_data(LieType type);

}  // namespace qtchar
