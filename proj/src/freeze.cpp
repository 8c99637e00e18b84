#include "qtchar/freeze.hpp"

#include <algorithm>

namespace qtchar {

DiagramInclusion::DiagramInclusion(CartanData small_cd, CartanData big_cd,
                                   std::vector<int> embedding)
    : small(std::move(small_cd)), big(std::move(big_cd)), embed(std::move(embedding)) {
  require(static_cast<int>(embed.size()) == small.rank, ErrorKind::IncompatibleInclusion,
          "embedding size differs from the small rank");
  std::vector<int> sorted = embed;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          ErrorKind::IncompatibleInclusion, "embedding is not injective");
  for (int i = 1; i <= small.rank; ++i) {
    require(1 <= embed[i - 1] && embed[i - 1] <= big.rank, ErrorKind::IncompatibleInclusion,
            "embedded node out of range");
    require(small.di(i) == big.di(embed[i - 1]), ErrorKind::IncompatibleInclusion,
            "symmetrizer mismatch across the inclusion");
    for (int j = 1; j <= small.rank; ++j)
      require(small.cij(i, j) == big.cij(embed[i - 1], embed[j - 1]),
              ErrorKind::IncompatibleInclusion, "Cartan entry mismatch across the inclusion");
  }
}

DiagramInclusion DiagramInclusion::standard(Family family, int small_rank, int big_rank) {
  require(small_rank < big_rank, ErrorKind::IncompatibleInclusion,
          "inclusion requires a strictly larger rank");
  std::vector<int> embed(small_rank);
  for (int i = 0; i < small_rank; ++i) embed[i] = i + 1;
  return DiagramInclusion(cartan_data({family, small_rank}), cartan_data({family, big_rank}),
                          std::move(embed));
}

std::optional<int> DiagramInclusion::preimage(int big_node) const {
  for (int i = 0; i < small.rank; ++i)
    if (embed[i] == big_node) return i + 1;
  return std::nullopt;
}

Monomial res_monomial(const DiagramInclusion& inc, const Monomial& m) {
  require(m.cartan() == key_of(inc.big), ErrorKind::Mismatch,
          "monomial is not over the big Cartan data");
  Monomial r(key_of(inc.small));
  for (const auto& e : m.entries())
    if (auto i = inc.preimage(e.node)) r.mul_var(*i, e.p, e.exp);
  return r;
}

TorusElement res_I(const DiagramInclusion& inc, const TorusElement& x) {
  require(x.cartan() == key_of(inc.big), ErrorKind::Mismatch,
          "element is not over the big Cartan data");
  TorusElement r(key_of(inc.small));
  for (const auto& [m, c] : x.terms()) r.add_term(res_monomial(inc, m), c);
  return r;
}

Pointed freeze(const DiagramInclusion& inc, const Pointed& y) {
  TorusElement kept(key_of(inc.big));
  for (const auto& [m, c] : y.body().terms()) {
    if (m == y.top() || nakajima_leq(inc.big, m, y.top(), &inc.embed))
      kept.add_term(m, c);
  }
  return Pointed(inc.small, res_monomial(inc, y.top()), res_I(inc, kept));
}

bool check_lemma_frz(const DiagramInclusion& inc, const GammaTable& g_small,
                     const GammaTable& g_big, const Pointed& y1, const Pointed& y2) {
  const long long gb = gamma_pair(g_big, y1.top(), y2.top());
  TorusElement prod =
      star_product(g_big, y1.body(), y2.body()).scaled(HalfT::t_pow_half(-(int)gb));
  const Pointed lhs = freeze(inc, Pointed(inc.big, y1.top() * y2.top(), prod));

  const Pointed f1 = freeze(inc, y1), f2 = freeze(inc, y2);
  const long long gs = gamma_pair(g_small, f1.top(), f2.top());
  TorusElement rhs =
      star_product(g_small, f1.body(), f2.body()).scaled(HalfT::t_pow_half(-(int)gs));
  return lhs.body() == rhs;
}

}  // namespace qtchar
