#include "qtchar/cartan.hpp"

#include <algorithm>

namespace qtchar {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::NotIDominant: return "NotIDominant";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::WellDefinednessViolation: return "WellDefinednessViolation";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NonPolynomialQ: return "NonPolynomialQ";
    case ErrorKind::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::IncompatibleInclusion: return "IncompatibleInclusion";
    case ErrorKind::UnsupportedFolding: return "UnsupportedFolding";
    case ErrorKind::NonConstantCoefficient: return "NonConstantCoefficient";
    case ErrorKind::NonUnitConstant: return "NonUnitConstant";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
  }
  fail(ErrorKind::ParseError, std::string("unknown family '") + c + "'");
}

int CartanData::max_d() const { return *std::max_element(d.begin(), d.end()); }

namespace {

bool adjacent(Family f, int i, int j) {
  if (i > j) std::swap(i, j);
  switch (f) {
    case Family::A:
    case Family::B:
    case Family::C:
      return j == i + 1;
    case Family::D:
      // Fork: nodes 1 and 2 both attach to node 3; then a chain 3-4-...-n.
      if (i == 1 && j == 2) return false;
      if (j == 3) return i == 1 || i == 2;
      return i >= 3 && j == i + 1;
  }
  return false;
}

}  // namespace

CartanData cartan_data(LieType type) {
  const int n = type.rank;
  switch (type.family) {
    case Family::A:
      require(n >= 1, ErrorKind::InvalidRank, "type A requires rank >= 1");
      break;
    case Family::B:
    case Family::C:
      require(n >= 2, ErrorKind::InvalidRank, "types B and C require rank >= 2");
      break;
    case Family::D:
      require(n >= 4, ErrorKind::InvalidRank, "type D requires rank >= 4");
      break;
  }

  CartanData cd;
  cd.family = type.family;
  cd.rank = n;

  cd.d.assign(n, 1);
  switch (type.family) {
    case Family::A:
    case Family::D:
      cd.lacing = 1;
      break;
    case Family::B:
      cd.lacing = 2;
      for (int i = 1; i < n; ++i) cd.d[i] = 2;
      break;
    case Family::C:
      cd.lacing = 2;
      cd.d[0] = 2;
      break;
  }

  switch (type.family) {
    case Family::A: cd.dual_coxeter = n + 1; break;
    case Family::B: cd.dual_coxeter = 2 * n - 1; break;
    case Family::C: cd.dual_coxeter = n + 1; break;
    case Family::D: cd.dual_coxeter = 2 * n - 2; break;
  }

  cd.c.assign(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) {
        cd.c[i - 1][j - 1] = 2;
      } else if (adjacent(type.family, i, j)) {
        // -ceil(d_j / d_i)
        const int di = cd.d[i - 1], dj = cd.d[j - 1];
        cd.c[i - 1][j - 1] = -((dj + di - 1) / di);
      }
    }
  }
  return cd;
}

}  // namespace qtchar
