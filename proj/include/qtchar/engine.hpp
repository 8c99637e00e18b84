#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "qtchar/sl2.hpp"
#include "qtchar/torus.hpp"

namespace qtchar {

// Character engine for one classical quantum loop algebra.  Holds the Cartan
// data, the gamma pairing and the memo caches shared between all character
// computations.  Computations are pure; the caches are internally
// synchronized so distinct calls may run concurrently.
class Engine {
 public:
  explicit Engine(LieType type, long long cap = 200000);

  const CartanData& cartan() const { return cd_; }
  const GammaTable& gamma() const { return gamma_; }
  CartanKey key() const { return key_of(cd_); }

  long long cap() const { return cap_; }
  void set_cap(long long cap) { cap_ = cap; }

  Monomial y(int node, int p, int exp = 1) const { return Monomial::y(key(), node, p, exp); }

  // Rank-one block F_{i,t}(m) for an i-dominant m: the unique m-pointed
  // element supported on m * (A_{i,.}^{-1}-monoid) in which m is the only
  // i-dominant monomial.  Built from the string decomposition of the i-part
  // by normalized star products, then corrected by subtracting c * F_{i,t}(m')
  // for any further i-dominant m' the product produced; the characterizing
  // properties are asserted on every call.
  Pointed f_it(const Monomial& m, int node);

  struct ClosureSet {
    Monomial seed;
    std::vector<Monomial> members;  // members[0] == seed; order extends Nakajima descending
  };

  // Secondary sort key for the total order on closure members (the primary
  // key is the A-degree distance from the seed).  Results of the recursion
  // are independent of this choice; both variants exist so that independence
  // is testable.
  enum class MemberOrder { LexAsc, LexDesc };

  // Reachability closure of a dominant monomial under the supports of the
  // rank-one blocks of its i-dominant members.  Throws CapExceeded when the
  // member count passes the cap.
  ClosureSet dominance_closure(const Monomial& m, MemberOrder order = MemberOrder::LexAsc);

  // F_t(m) by the t-deformed Frenkel-Mukhin recursion over the closure.
  Pointed f_t(const Monomial& m, MemberOrder order = MemberOrder::LexAsc);

  // The same recursion at t = 1 with plain integer coefficients and an
  // independent commutative expansion path; used as an oracle for
  // fundamentals and the ev_t1 consistency checks, not as a general chi_q.
  TorusElement f_classical(const Monomial& m);

  // Standard basis element: normalized star product of fundamental F_t's in
  // an ordered factorization with weakly decreasing spectral index.
  Pointed e_t(const Monomial& m);
  // Explicit factor sequence (for the order-independence tests); factors are
  // (node, p) pairs whose product must be m.
  Pointed e_t_ordered(const std::vector<std::pair<int, int>>& factors);

  struct KLResult {
    Pointed chi;                                  // chi_{q,t}(L(m)) in the monomial basis
    std::vector<std::pair<Monomial, HalfT>> q;    // Q_{m,m'} against E_t(m'), m' < m
    size_t dominant_set_size = 0;
  };

  // Canonical basis element via the Kazhdan-Lusztig triangular bar-invariance
  // solve over the standard basis.
  KLResult chi_qt(const Monomial& m);

  // ev_t1 of chi_qt; coefficients are checked positive.
  TorusElement chi_q(const Monomial& m);

  long long dim_simple(const Monomial& m);

 private:
  CartanData cd_;
  GammaTable gamma_;
  long long cap_;

  std::map<std::pair<int, Monomial>, Pointed> fit_cache_;
  std::map<Monomial, Pointed> ft_cache_;
  std::map<Monomial, Pointed> et_cache_;
  std::map<Monomial, KLResult> chiqt_cache_;
  std::map<std::pair<int, Monomial>, std::map<Monomial, long long>> cl_fit_cache_;
  std::map<Monomial, std::map<Monomial, long long>> cl_ft_cache_;
  std::mutex cache_mu_;

  KLResult chi_qt_impl(const Monomial& m);
  TorusElement block_expansion(const StringBlock& b) const;
  std::map<Monomial, long long> classical_f_i(const Monomial& m, int node);
  std::vector<Monomial> closure_members(const Monomial& m, bool classical);
  void sort_members(const Monomial& seed, std::vector<Monomial>& members, MemberOrder order);
  long long a_degree_from(const Monomial& top, const Monomial& below) const;
};

}  // namespace qtchar
