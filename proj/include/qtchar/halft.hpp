#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qtchar {

// Laurent polynomial in t^{1/2} with integer coefficients.  Exponents are
// stored as integers counting half-units, so t^{1/2} has exponent 1 and t
// has exponent 2; no rational arithmetic is ever needed.
class HalfT {
 public:
  HalfT() = default;

  static HalfT zero() { return HalfT(); }
  static HalfT one() { return t_pow_half(0); }
  static HalfT t_pow_half(int half_exp, long long coeff = 1);

  const std::vector<std::pair<int, long long>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0] == std::pair(0, 1LL); }

  long long coeff(int half_exp) const;
  void add_term(int half_exp, long long coeff);

  HalfT operator+(const HalfT& o) const;
  HalfT operator-(const HalfT& o) const;
  HalfT operator-() const;
  HalfT operator*(const HalfT& o) const;
  bool operator==(const HalfT& o) const { return terms_ == o.terms_; }

  HalfT shifted(int half_exp) const;  // multiply by t^{half_exp/2}
  HalfT bar() const;                  // t^{1/2} -> t^{-1/2}
  long long ev1() const;              // specialize t^{1/2} -> 1

  bool bar_invariant() const { return *this == bar(); }
  // All exponents are even: the value lies in Z[t^{+-1}].
  bool integral_t_powers() const;
  // Lies in t^{-1} Z[t^{-1}] (negative even half-exponents only).
  bool in_tm1_ztm1() const;
  // Terms with negative exponent only.
  HalfT negative_part() const;

  std::string str() const;  // e.g. "t + t^-1", "t^(1/2)", "2"

 private:
  // Sorted by exponent, no zero coefficients.
  std::vector<std::pair<int, long long>> terms_;
};

}  // namespace qtchar
