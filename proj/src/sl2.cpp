#include "qtchar/sl2.hpp"

#include <algorithm>
#include <map>

#include "qtchar/engine.hpp"

namespace qtchar {

std::vector<StringBlock> string_decompose(const CartanData& cd, const Monomial& m, int node) {
  require(m.cartan() == key_of(cd), ErrorKind::Mismatch, "monomial over different Cartan data");
  require(m.i_dominant(node), ErrorKind::NotIDominant,
          "monomial has a negative power at node " + std::to_string(node));
  std::map<int, int> mult;  // p -> multiplicity at this node
  for (const auto& e : m.entries())
    if (e.node == node) mult[e.p] = e.exp;

  const int step = 2 * cd.di(node);
  std::vector<StringBlock> blocks;
  while (!mult.empty()) {
    const int top = mult.rbegin()->first;
    int start = top;
    while (mult.count(start - step) && mult[start - step] > 0) start -= step;
    for (int p = start; p <= top; p += step) {
      if (--mult[p] == 0) mult.erase(p);
    }
    blocks.push_back(StringBlock{node, start, (top - start) / step + 1});
  }
  return blocks;
}

// Expansion of a single string: the KR-type character m_B, m_B A^{-1}_{top},
// m_B A^{-1}_{top} A^{-1}_{top-2d}, ... with all coefficients 1.
TorusElement Engine::block_expansion(const StringBlock& b) const {
  const int d = cd_.di(b.node);
  Monomial cur(key());
  for (int s = 0; s < b.len; ++s) cur.mul_var(b.node, b.start + 2 * s * d, 1);
  TorusElement x = TorusElement::monomial(cur);
  for (int j = 1; j <= b.len; ++j) {
    cur = cur * a_monomial(cd_, b.node, b.start + (2 * (b.len - j) + 1) * d).inverse();
    x.add_term(cur, HalfT::one());
  }
  return x;
}

Pointed Engine::f_it(const Monomial& m, int node) {
  require(1 <= node && node <= cd_.rank, ErrorKind::Mismatch, "node out of range");
  require(m.i_dominant(node), ErrorKind::NotIDominant,
          "monomial has a negative power at node " + std::to_string(node));
  {
    std::lock_guard lock(cache_mu_);
    auto it = fit_cache_.find({node, m});
    if (it != fit_cache_.end()) return it->second;
  }

  Monomial ipart(key()), spectator(key());
  for (const auto& e : m.entries())
    (e.node == node ? ipart : spectator).mul_var(e.node, e.p, e.exp);

  auto blocks = string_decompose(cd_, ipart, node);
  std::stable_sort(blocks.begin(), blocks.end(), [](const StringBlock& a, const StringBlock& b) {
    if (a.start != b.start) return a.start > b.start;
    return a.len > b.len;
  });

  TorusElement acc = TorusElement::monomial(spectator);
  for (const auto& b : blocks) acc = star_product(gamma_, acc, block_expansion(b));

  // The top coefficient is a single power of t (the tops of the factors
  // multiply to m and nothing else reaches m); normalize it to 1.
  const HalfT ctop = acc.coeff(m);
  require(ctop.terms().size() == 1 && ctop.terms()[0].second == 1, ErrorKind::Internal,
          "unexpected top coefficient in rank-one block");
  acc = acc.scaled(HalfT::t_pow_half(-ctop.terms()[0].first));

  // Interacting strings leave further i-dominant monomials in the product;
  // subtracting c * F_{i,t}(m') for each removes them without touching the
  // A-support (each F_{i,t}(m') has m' as its only i-dominant monomial).
  std::vector<Monomial> extra;
  for (const auto& [mm, c] : acc.terms())
    if (!(mm == m) && mm.i_dominant(node)) extra.push_back(mm);
  std::sort(extra.begin(), extra.end(), [&](const Monomial& a, const Monomial& b) {
    const long long da = a_degree_from(m, a), db = a_degree_from(m, b);
    if (da != db) return da < db;
    return a < b;
  });
  for (const auto& mm : extra) {
    const HalfT c = acc.coeff(mm);
    if (c.is_zero()) continue;
    acc = acc - f_it(mm, node).body().scaled(c);
  }

  // Characterization checks: support in m * A_{i,.}^{-1} powers, unique
  // i-dominant monomial, coefficients in Z[t^{+-1}].
  const std::vector<int> only{node};
  for (const auto& [mm, c] : acc.terms()) {
    require(mm == m || !mm.i_dominant(node), ErrorKind::Internal,
            "rank-one block kept a second i-dominant monomial");
    require(nakajima_leq(cd_, mm, m, &only), ErrorKind::Internal,
            "rank-one block support escapes the A_{i}-cone");
    require(c.integral_t_powers(), ErrorKind::Internal,
            "rank-one block coefficient outside Z[t^{+-1}]");
  }

  Pointed result(cd_, m, acc);
  std::lock_guard lock(cache_mu_);
  fit_cache_.try_emplace({node, m}, result);
  return result;
}

// t=1 analog of f_it on an independent commutative path.
std::map<Monomial, long long> Engine::classical_f_i(const Monomial& m, int node) {
  require(m.i_dominant(node), ErrorKind::NotIDominant,
          "monomial has a negative power at node " + std::to_string(node));
  {
    std::lock_guard lock(cache_mu_);
    auto it = cl_fit_cache_.find({node, m});
    if (it != cl_fit_cache_.end()) return it->second;
  }

  Monomial ipart(key()), spectator(key());
  for (const auto& e : m.entries())
    (e.node == node ? ipart : spectator).mul_var(e.node, e.p, e.exp);

  std::map<Monomial, long long> acc{{spectator, 1}};
  const int d = cd_.di(node);
  for (const auto& b : string_decompose(cd_, ipart, node)) {
    std::vector<Monomial> expansion;
    Monomial cur(key());
    for (int s = 0; s < b.len; ++s) cur.mul_var(node, b.start + 2 * s * d, 1);
    expansion.push_back(cur);
    for (int j = 1; j <= b.len; ++j) {
      cur = cur * a_monomial(cd_, node, b.start + (2 * (b.len - j) + 1) * d).inverse();
      expansion.push_back(cur);
    }
    std::map<Monomial, long long> next;
    for (const auto& [mm, c] : acc)
      for (const auto& f : expansion) next[mm * f] += c;
    acc = std::move(next);
  }

  std::vector<Monomial> extra;
  for (const auto& [mm, c] : acc)
    if (!(mm == m) && mm.i_dominant(node)) extra.push_back(mm);
  std::sort(extra.begin(), extra.end(), [&](const Monomial& a, const Monomial& b) {
    const long long da = a_degree_from(m, a), db = a_degree_from(m, b);
    if (da != db) return da < db;
    return a < b;
  });
  for (const auto& mm : extra) {
    auto it = acc.find(mm);
    if (it == acc.end() || it->second == 0) continue;
    const long long c = it->second;
    for (const auto& [m2, c2] : classical_f_i(mm, node)) {
      acc[m2] -= c * c2;
      if (acc[m2] == 0) acc.erase(m2);
    }
  }

  std::lock_guard lock(cache_mu_);
  cl_fit_cache_.try_emplace({node, m}, acc);
  return acc;
}

long long Engine::a_degree_from(const Monomial& top, const Monomial& below) const {
  auto factors = nakajima_factorize(cd_, below, top);
  require(factors.has_value(), ErrorKind::Internal, "monomial not below the expected top");
  long long deg = 0;
  for (const auto& f : *factors) deg += f.exp;
  return deg;
}

}  // namespace qtchar
