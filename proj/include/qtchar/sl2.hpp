#pragma once

#include <vector>

#include "qtchar/monomial.hpp"

namespace qtchar {

// Maximal arithmetic string Y_{i,start} Y_{i,start+2d_i} ... of length len at
// one node.  Blocks produced by string_decompose are pairwise in general
// position or equal; interacting configurations are resolved later by the
// correction step of the rank-one expansion.
struct StringBlock {
  int node;
  int start;
  int len;
  friend bool operator==(const StringBlock&, const StringBlock&) = default;
};

// Unique multiset of maximal strings covering the i-part of an i-dominant
// monomial: greedily extract, from the highest occupied index downward, the
// longest string of step 2d_i using available multiplicity.  Blocks are
// returned in extraction order (descending top index).
std::vector<StringBlock> string_decompose(const CartanData& cd, const Monomial& m, int node);

}  // namespace qtchar
