#include <algorithm>
#include <deque>
#include <set>

#include "qtchar/engine.hpp"

namespace qtchar {

Pointed Engine::e_t_ordered(const std::vector<std::pair<int, int>>& factors) {
  Monomial m(key());
  for (const auto& [i, p] : factors) m.mul_var(i, p, 1);

  long long gsum = 0;
  for (size_t a = 0; a + 1 < factors.size(); ++a)
    for (size_t b = a + 1; b < factors.size(); ++b)
      gsum += gamma_.gamma_ij(factors[a].first, factors[b].first,
                              factors[a].second - factors[b].second);

  // t^{gamma(m)} with gamma(m) = -(1/2) sum gamma: a shift of -gsum half-units.
  TorusElement acc = TorusElement::monomial(Monomial::one(key()), HalfT::t_pow_half(-(int)gsum));
  for (const auto& [i, p] : factors) acc = star_product(gamma_, acc, f_t(y(i, p)).body());
  for (const auto& [mm, c] : acc.terms())
    require(c.integral_t_powers(), ErrorKind::Internal, "E_t coefficient outside Z[t^{+-1}]");
  return Pointed(cd_, m, acc);
}

Pointed Engine::e_t(const Monomial& m) {
  require(m.cartan() == key(), ErrorKind::Mismatch, "monomial over different Cartan data");
  require(m.dominant(), ErrorKind::NotIDominant, "monomial is not dominant");
  {
    std::lock_guard lock(cache_mu_);
    auto it = et_cache_.find(m);
    if (it != et_cache_.end()) return it->second;
  }

  std::vector<std::pair<int, int>> factors;
  for (const auto& e : m.entries())
    for (int k = 0; k < e.exp; ++k) factors.emplace_back(e.node, e.p);
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  Pointed result = e_t_ordered(factors);
  std::lock_guard lock(cache_mu_);
  et_cache_.try_emplace(m, result);
  return result;
}

Engine::KLResult Engine::chi_qt(const Monomial& m) {
  require(m.cartan() == key(), ErrorKind::Mismatch, "monomial over different Cartan data");
  require(m.dominant(), ErrorKind::NotIDominant, "monomial is not dominant");
  try {
    return chi_qt_impl(m);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoSolution || e.kind() == ErrorKind::NonPolynomialQ)
      throw Error(e.kind(), std::string(e.what()) + " [" + cd_.name() + ", seed with " +
                                std::to_string(m.entries().size()) + " variables]");
    throw;
  }
}

Engine::KLResult Engine::chi_qt_impl(const Monomial& m) {
  {
    std::lock_guard lock(cache_mu_);
    auto it = chiqt_cache_.find(m);
    if (it != chiqt_cache_.end()) return it->second;
  }

  // Dominant monomials reachable through iterated standard-basis expansions;
  // triangularity keeps every one of them below m.
  std::set<Monomial> seen{m};
  std::deque<Monomial> queue{m};
  while (!queue.empty()) {
    const Monomial cur = queue.front();
    queue.pop_front();
    const Pointed ecur = e_t(cur);
    for (const auto& [mm, c] : ecur.body().terms()) {
      if (!mm.dominant() || seen.count(mm)) continue;
      require(nakajima_leq(cd_, mm, m), ErrorKind::Internal,
              "dominant set escapes the cone below m");
      seen.insert(mm);
      queue.push_back(mm);
    }
  }

  std::vector<Monomial> S(seen.begin(), seen.end());
  sort_members(m, S, MemberOrder::LexAsc);  // descending: A-degree from m ascending
  const size_t n = S.size();

  // Bar matrix in the standard basis: bar(E_t(S[u])) = sum_v B[u][v] E_t(S[v]),
  // unitriangular by construction; computed by stripping top dominant terms.
  std::vector<std::vector<HalfT>> B(n, std::vector<HalfT>(n));
  for (size_t u = 0; u < n; ++u) {
    TorusElement r = e_t(S[u]).body().bar();
    for (size_t v = u; v < n; ++v) {
      const HalfT b = r.coeff(S[v]);
      if (b.is_zero()) continue;
      B[u][v] = b;
      r = r - e_t(S[v]).body().scaled(b);
    }
    require(r.is_zero(), ErrorKind::NoSolution,
            "bar image does not lie in the standard-basis span");
    require(B[u][u].is_one(), ErrorKind::NoSolution, "bar matrix is not unitriangular");
  }

  // Descending induction for the bar-invariant combination
  // chi = E_t(m) + sum Q_v E_t(S[v]) with Q_v in t^{-1} Z[t^{-1}]:
  // Q_v - bar(Q_v) = sum_{u < v} bar(Q_u) B[u][v], solved from the t^{-1} side.
  std::vector<HalfT> Q(n);
  Q[0] = HalfT::one();
  for (size_t v = 1; v < n; ++v) {
    HalfT g;
    for (size_t u = 0; u < v; ++u) {
      if (B[u][v].is_zero() || Q[u].is_zero()) continue;
      g = g + Q[u].bar() * B[u][v];
    }
    require(g + g.bar() == HalfT::zero(), ErrorKind::NoSolution,
            "bar-invariance system is inconsistent");
    Q[v] = g.negative_part();
    require(Q[v].in_tm1_ztm1(), ErrorKind::NonPolynomialQ,
            "KL coefficient outside t^{-1} Z[t^{-1}]");
  }

  TorusElement chi(key());
  for (size_t v = 0; v < n; ++v) {
    if (Q[v].is_zero()) continue;
    chi = chi + e_t(S[v]).body().scaled(Q[v]);
  }
  require(chi.bar() == chi, ErrorKind::NoSolution, "canonical basis element is not bar-invariant");

  KLResult result{Pointed(cd_, m, chi), {}, n};
  for (size_t v = 1; v < n; ++v)
    if (!Q[v].is_zero()) result.q.emplace_back(S[v], Q[v]);

  std::lock_guard lock(cache_mu_);
  chiqt_cache_.try_emplace(m, result);
  return result;
}

TorusElement Engine::chi_q(const Monomial& m) {
  const TorusElement x = chi_qt(m).chi.body().ev_t1();
  for (const auto& [mm, c] : x.terms())
    require(c.ev1() > 0, ErrorKind::NonPositiveCoefficient,
            "q-character coefficient is not positive");
  return x;
}

long long Engine::dim_simple(const Monomial& m) {
  long long dim = 0;
  const TorusElement x = chi_q(m);
  for (const auto& [mm, c] : x.terms()) dim += c.ev1();
  return dim;
}

}  // namespace qtchar
