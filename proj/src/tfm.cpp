#include <algorithm>
#include <deque>
#include <set>

#include "qtchar/engine.hpp"

namespace qtchar {

Engine::Engine(LieType type, long long cap)
    : cd_(cartan_data(type)), gamma_(cd_), cap_(cap) {}

std::vector<Monomial> Engine::closure_members(const Monomial& m, bool classical) {
  std::set<Monomial> seen{m};
  std::deque<Monomial> queue{m};
  while (!queue.empty()) {
    const Monomial cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= cd_.rank; ++i) {
      if (!cur.i_dominant(i)) continue;
      std::vector<Monomial> support;
      if (classical) {
        for (const auto& [mm, c] : classical_f_i(cur, i)) support.push_back(mm);
      } else {
        const Pointed block = f_it(cur, i);
        for (const auto& [mm, c] : block.body().terms()) support.push_back(mm);
      }
      for (const auto& mm : support) {
        if (seen.insert(mm).second) {
          require(static_cast<long long>(seen.size()) <= cap_, ErrorKind::CapExceeded,
                  "monomial closure exceeded cap " + std::to_string(cap_));
          queue.push_back(mm);
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

void Engine::sort_members(const Monomial& seed, std::vector<Monomial>& members,
                          MemberOrder order) {
  std::vector<std::pair<long long, Monomial>> keyed;
  keyed.reserve(members.size());
  for (auto& mm : members) keyed.emplace_back(a_degree_from(seed, mm), std::move(mm));
  std::sort(keyed.begin(), keyed.end(), [order](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return order == MemberOrder::LexAsc ? a.second < b.second : b.second < a.second;
  });
  members.clear();
  for (auto& [deg, mm] : keyed) members.push_back(std::move(mm));
}

Engine::ClosureSet Engine::dominance_closure(const Monomial& m, MemberOrder order) {
  require(m.cartan() == key(), ErrorKind::Mismatch, "monomial over different Cartan data");
  require(m.dominant(), ErrorKind::NotIDominant, "monomial is not dominant");
  ClosureSet cs{m, closure_members(m, /*classical=*/false)};
  sort_members(m, cs.members, order);
  require(!cs.members.empty() && cs.members[0] == m, ErrorKind::Internal,
          "closure does not start at its seed");
  return cs;
}

// The t-deformed Frenkel-Mukhin recursion.  Contributions are pushed forward:
// once member u is finalized, (s(m_u) - s_i(m_u)) [F_{i,t}(m_u)]_{m_k} is
// accumulated into s_i(m_k) for every later member m_k, which reproduces the
// sum over u <= k-1 when m_k is reached.
Pointed Engine::f_t(const Monomial& m, MemberOrder order) {
  if (order == MemberOrder::LexAsc) {
    std::lock_guard lock(cache_mu_);
    auto it = ft_cache_.find(m);
    if (it != ft_cache_.end()) return it->second;
  }

  const ClosureSet cs = dominance_closure(m, order);
  const size_t n = cs.members.size();
  const int rank = cd_.rank;

  std::map<Monomial, size_t> index;
  for (size_t k = 0; k < n; ++k) index.emplace(cs.members[k], k);

  std::vector<HalfT> s(n);
  std::vector<std::vector<HalfT>> si(n, std::vector<HalfT>(rank));
  s[0] = HalfT::one();

  for (size_t k = 0; k < n; ++k) {
    const Monomial& mk = cs.members[k];
    if (k > 0) {
      if (mk.dominant()) {
        s[k] = HalfT::zero();
      } else {
        bool first = true;
        for (int i = 1; i <= rank; ++i) {
          if (mk.i_dominant(i)) continue;
          if (first) {
            s[k] = si[k][i - 1];
            first = false;
          } else {
            require(s[k] == si[k][i - 1], ErrorKind::WellDefinednessViolation,
                    "per-node coefficients disagree in the t-FM recursion");
          }
        }
        require(!first, ErrorKind::Internal, "member neither dominant nor expandable");
      }
    }
    for (int i = 1; i <= rank; ++i) {
      if (!mk.i_dominant(i)) continue;
      const HalfT w = s[k] - si[k][i - 1];
      if (w.is_zero()) continue;
      const Pointed block = f_it(mk, i);
      for (const auto& [mm, c] : block.body().terms()) {
        if (mm == mk) continue;
        auto it = index.find(mm);
        require(it != index.end() && it->second > k, ErrorKind::Internal,
                "rank-one support escapes the closure");
        si[it->second][i - 1] = si[it->second][i - 1] + w * c;
      }
    }
  }

  TorusElement body(key());
  for (size_t k = 0; k < n; ++k) {
    require(s[k].integral_t_powers(), ErrorKind::Internal,
            "F_t coefficient outside Z[t^{+-1}]");
    body.add_term(cs.members[k], s[k]);
  }
  Pointed result(cd_, m, body);
  if (order == MemberOrder::LexAsc) {
    std::lock_guard lock(cache_mu_);
    ft_cache_.try_emplace(m, result);
  }
  return result;
}

TorusElement Engine::f_classical(const Monomial& m) {
  require(m.cartan() == key(), ErrorKind::Mismatch, "monomial over different Cartan data");
  require(m.dominant(), ErrorKind::NotIDominant, "monomial is not dominant");
  {
    std::lock_guard lock(cache_mu_);
    auto it = cl_ft_cache_.find(m);
    if (it != cl_ft_cache_.end()) {
      TorusElement body(key());
      for (const auto& [mm, c] : it->second) body.add_term(mm, HalfT::t_pow_half(0, c));
      return body;
    }
  }

  std::vector<Monomial> members = closure_members(m, /*classical=*/true);
  sort_members(m, members, MemberOrder::LexAsc);
  const size_t n = members.size();
  const int rank = cd_.rank;

  std::map<Monomial, size_t> index;
  for (size_t k = 0; k < n; ++k) index.emplace(members[k], k);

  std::vector<long long> s(n, 0);
  std::vector<std::vector<long long>> si(n, std::vector<long long>(rank, 0));
  s[0] = 1;

  for (size_t k = 0; k < n; ++k) {
    const Monomial& mk = members[k];
    if (k > 0) {
      if (mk.dominant()) {
        s[k] = 0;
      } else {
        bool first = true;
        for (int i = 1; i <= rank; ++i) {
          if (mk.i_dominant(i)) continue;
          if (first) {
            s[k] = si[k][i - 1];
            first = false;
          } else {
            require(s[k] == si[k][i - 1], ErrorKind::WellDefinednessViolation,
                    "per-node coefficients disagree in the classical FM recursion");
          }
        }
      }
    }
    for (int i = 1; i <= rank; ++i) {
      if (!mk.i_dominant(i)) continue;
      const long long w = s[k] - si[k][i - 1];
      if (w == 0) continue;
      for (const auto& [mm, c] : classical_f_i(mk, i)) {
        if (mm == mk) continue;
        auto it = index.find(mm);
        require(it != index.end() && it->second > k, ErrorKind::Internal,
                "classical rank-one support escapes the closure");
        si[it->second][i - 1] += w * c;
      }
    }
  }

  std::map<Monomial, long long> terms;
  for (size_t k = 0; k < n; ++k)
    if (s[k] != 0) terms.emplace(members[k], s[k]);
  {
    std::lock_guard lock(cache_mu_);
    cl_ft_cache_.try_emplace(m, terms);
  }
  TorusElement body(key());
  for (const auto& [mm, c] : terms) body.add_term(mm, HalfT::t_pow_half(0, c));
  return body;
}

}  // namespace qtchar
