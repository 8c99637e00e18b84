#include "qtchar/twisted.hpp"

#include <algorithm>

namespace qtchar {

FoldingDatum FoldingDatum::standard(LieType type) {
  FoldingDatum fd;
  switch (type.family) {
    case Family::A:
      require(type.rank >= 2, ErrorKind::UnsupportedFolding,
              "type A folding requires rank >= 2");
      fd.cartan = cartan_data(type);
      fd.sigma.resize(type.rank);
      for (int i = 1; i <= type.rank; ++i) fd.sigma[i - 1] = type.rank + 1 - i;
      break;
    case Family::D:
      fd.cartan = cartan_data(type);
      fd.sigma.resize(type.rank);
      for (int i = 1; i <= type.rank; ++i) fd.sigma[i - 1] = i;
      fd.sigma[0] = 2;
      fd.sigma[1] = 1;
      break;
    default:
      fail(ErrorKind::UnsupportedFolding, "order-2 foldings exist for types A and D only");
  }
  for (int i = 1; i <= fd.cartan.rank; ++i) {
    require(fd.apply(fd.apply(i)) == i, ErrorKind::Internal, "sigma is not an involution");
    for (int j = 1; j <= fd.cartan.rank; ++j)
      require(fd.cartan.cij(fd.apply(i), fd.apply(j)) == fd.cartan.cij(i, j), ErrorKind::Internal,
              "sigma is not a diagram automorphism");
  }
  return fd;
}

int signed_to_internal(const CartanData& cd, int signed_label) {
  if (cd.family == Family::D) return signed_label;
  const int n = cd.rank;
  const int l = n / 2;
  if (n % 2 == 1) {
    require(-l <= signed_label && signed_label <= l, ErrorKind::ParseError,
            "signed label out of range");
    return signed_label + l + 1;
  }
  require(signed_label != 0 && -l <= signed_label && signed_label <= l, ErrorKind::ParseError,
          "signed label out of range");
  return signed_label < 0 ? signed_label + l + 1 : signed_label + l;
}

int internal_to_signed(const CartanData& cd, int node) {
  if (cd.family == Family::D) return node;
  const int n = cd.rank;
  const int l = n / 2;
  if (n % 2 == 1) return node - l - 1;
  return node <= l ? node - l - 1 : node - l;
}

long long TwistedElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void TwistedElement::add_term(const Monomial& m, long long c) {
  require(m.cartan() == ck_, ErrorKind::Mismatch, "term over different Cartan data");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

long long TwistedElement::coeff_sum() const {
  long long s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

TwistedPointed::TwistedPointed(const FoldingDatum& fd, Monomial top_m, TwistedElement body_el)
    : top(std::move(top_m)), body(std::move(body_el)) {
  require(top.cartan() == body.cartan() && top.cartan() == key_of(fd.cartan),
          ErrorKind::Mismatch, "twisted pointed element over different data");
  require(body.coeff(top) == 1, ErrorKind::NotPointed, "top orbit monomial coefficient is not 1");
  // <=^sigma delegates to the untwisted ordering: the skeletal folding is an
  // isomorphism carrying A_{i,p} to A_[i,p] on the exponent tables.
  for (const auto& [m, c] : body.terms()) {
    if (m == top) continue;
    require(nakajima_leq(fd.cartan, m, top), ErrorKind::NotPointed,
            "orbit monomial not below the top in the twisted ordering");
  }
}

TwistedElement fold_phi(const FoldingDatum& fd, const TorusElement& x) {
  require(x.cartan() == key_of(fd.cartan), ErrorKind::Mismatch,
          "element over different Cartan data");
  require(x.t_free(), ErrorKind::NonConstantCoefficient,
          "folding applies to t-free elements only");
  TwistedElement r(x.cartan());
  for (const auto& [m, c] : x.terms()) r.add_term(m, c.ev1());
  return r;
}

TwistedPointed chi_q_twisted(const FoldingDatum& fd, Engine& engine, const Monomial& m) {
  require(key_of(fd.cartan) == engine.key(), ErrorKind::Mismatch,
          "folding datum and engine disagree");
  require(fd.cartan.family == Family::A || fd.cartan.family == Family::D,
          ErrorKind::UnsupportedFolding, "twisted characters exist for (A,2) and (D,2) only");
  require(m.dominant(), ErrorKind::NotIDominant, "monomial is not dominant");
  return TwistedPointed(fd, m, fold_phi(fd, engine.chi_q(m)));
}

void UnfoldedMonomial::mul_var(int node, int p, int eps, int exp) {
  if (exp == 0) return;
  Entry key{node, p, eps, 0};
  auto it = std::lower_bound(entries.begin(), entries.end(), key,
                             [](const Entry& a, const Entry& b) {
                               return std::tie(a.node, a.p, a.eps) < std::tie(b.node, b.p, b.eps);
                             });
  if (it != entries.end() && it->node == node && it->p == p && it->eps == eps) {
    it->exp += exp;
    if (it->exp == 0) entries.erase(it);
  } else {
    key.exp = exp;
    entries.insert(it, key);
  }
}

UnfoldedElement unfold_expand(const FoldingDatum& fd, const TwistedElement& x) {
  UnfoldedElement r;
  for (const auto& [m, c] : x.terms()) {
    UnfoldedMonomial u;
    for (const auto& e : m.entries()) {
      u.mul_var(e.node, e.p, 0, e.exp);
      u.mul_var(fd.apply(e.node), e.p, 1, e.exp);
    }
    r[u] += c;
    if (r[u] == 0) r.erase(u);
  }
  return r;
}

UnfoldedElement sigma_apply(const FoldingDatum& fd, const UnfoldedElement& x) {
  UnfoldedElement r;
  for (const auto& [m, c] : x) {
    UnfoldedMonomial u;
    for (const auto& e : m.entries) u.mul_var(fd.apply(e.node), e.p, (e.eps + 1) % 2, e.exp);
    r[u] += c;
    if (r[u] == 0) r.erase(u);
  }
  return r;
}

bool sigma_invariant(const FoldingDatum& fd, const UnfoldedElement& x) {
  return sigma_apply(fd, x) == x;
}

namespace {

DiagramInclusion derive_inclusion(const FoldingDatum& small, const FoldingDatum& big) {
  require(small.cartan.family == big.cartan.family, ErrorKind::IncompatibleInclusion,
          "folding inclusion requires one family");
  const int n = small.cartan.rank, nb = big.cartan.rank;
  require(n < nb, ErrorKind::IncompatibleInclusion, "inclusion requires a strictly larger rank");
  std::vector<int> embed(n);
  if (small.cartan.family == Family::A) {
    require((nb - n) % 2 == 0, ErrorKind::IncompatibleInclusion,
            "type A folding inclusion requires equal parities");
    const int off = (nb - n) / 2;  // centered: signed labels embed identically
    for (int i = 1; i <= n; ++i) embed[i - 1] = i + off;
  } else {
    for (int i = 1; i <= n; ++i) embed[i - 1] = i;
  }
  return DiagramInclusion(small.cartan, big.cartan, std::move(embed));
}

}  // namespace

TwistedInclusion::TwistedInclusion(FoldingDatum small_fd, FoldingDatum big_fd)
    : small(std::move(small_fd)),
      big(std::move(big_fd)),
      inc(derive_inclusion(small, big)) {
  for (int i = 1; i <= small.cartan.rank; ++i)
    require(big.apply(inc.embed[i - 1]) == inc.embed[small.apply(i) - 1],
            ErrorKind::IncompatibleInclusion,
            "big automorphism does not restrict to the small one");
}

TwistedPointed twisted_freeze(const TwistedInclusion& tinc, const TwistedPointed& y) {
  TwistedElement kept(key_of(tinc.big.cartan));
  for (const auto& [m, c] : y.body.terms()) {
    if (m == y.top || nakajima_leq(tinc.big.cartan, m, y.top, &tinc.inc.embed))
      kept.add_term(m, c);
  }
  TwistedElement out(key_of(tinc.small.cartan));
  for (const auto& [m, c] : kept.terms()) out.add_term(res_monomial(tinc.inc, m), c);
  return TwistedPointed(tinc.small, res_monomial(tinc.inc, y.top), out);
}

}  // namespace qtchar
