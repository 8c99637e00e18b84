#include "qtchar/monomial.hpp"

#include <algorithm>
#include <map>

namespace qtchar {

Monomial Monomial::y(CartanKey ck, int node, int p, int exp) {
  Monomial m(ck);
  m.mul_var(node, p, exp);
  return m;
}

namespace {
bool entry_key_less(const Monomial::Entry& e, std::pair<int, int> key) {
  return std::pair(e.node, e.p) < key;
}
}  // namespace

int Monomial::exp_at(int node, int p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(node, p), entry_key_less);
  if (it != entries_.end() && it->node == node && it->p == p) return it->exp;
  return 0;
}

void Monomial::set_exp(int node, int p, int exp) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(node, p), entry_key_less);
  const bool present = it != entries_.end() && it->node == node && it->p == p;
  if (exp == 0) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->exp = exp;
  } else {
    entries_.insert(it, Entry{node, p, exp});
  }
}

void Monomial::mul_var(int node, int p, int exp) {
  if (exp == 0) return;
  set_exp(node, p, exp_at(node, p) + exp);
}

Monomial Monomial::operator*(const Monomial& o) const {
  require(ck_ == o.ck_, ErrorKind::Mismatch, "monomials over different Cartan data");
  Monomial r(ck_);
  r.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin(), b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() ||
        (a != entries_.end() && std::pair(a->node, a->p) < std::pair(b->node, b->p))) {
      r.entries_.push_back(*a++);
    } else if (a == entries_.end() || std::pair(b->node, b->p) < std::pair(a->node, a->p)) {
      r.entries_.push_back(*b++);
    } else {
      const int e = a->exp + b->exp;
      if (e != 0) r.entries_.push_back(Entry{a->node, a->p, e});
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& e : r.entries_) e.exp = -e.exp;
  return r;
}

Monomial Monomial::pow(int k) const {
  if (k == 0) return Monomial::one(ck_);
  Monomial r = *this;
  for (auto& e : r.entries_) e.exp *= k;
  return r;
}

bool Monomial::dominant() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.exp > 0; });
}

bool Monomial::i_dominant(int node) const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [node](const Entry& e) { return e.node != node || e.exp > 0; });
}

std::pair<int, int> Monomial::p_range() const {
  if (entries_.empty()) return {0, 0};
  int lo = entries_.front().p, hi = entries_.front().p;
  for (const auto& e : entries_) {
    lo = std::min(lo, e.p);
    hi = std::max(hi, e.p);
  }
  return {lo, hi};
}

bool Monomial::operator<(const Monomial& o) const {
  return std::lexicographical_compare(
      entries_.begin(), entries_.end(), o.entries_.begin(), o.entries_.end(),
      [](const Entry& a, const Entry& b) {
        return std::tie(a.node, a.p, a.exp) < std::tie(b.node, b.p, b.exp);
      });
}

Monomial a_monomial(const CartanData& cd, int node, int p) {
  require(1 <= node && node <= cd.rank, ErrorKind::Mismatch, "node out of range");
  Monomial m(key_of(cd));
  const int d = cd.di(node);
  m.mul_var(node, p - d, 1);
  m.mul_var(node, p + d, 1);
  for (int j = 1; j <= cd.rank; ++j) {
    switch (cd.cij(j, node)) {
      case -1:
        m.mul_var(j, p, -1);
        break;
      case -2:
        m.mul_var(j, p - 1, -1);
        m.mul_var(j, p + 1, -1);
        break;
      case -3:
        m.mul_var(j, p - 2, -1);
        m.mul_var(j, p, -1);
        m.mul_var(j, p + 2, -1);
        break;
      default:
        break;
    }
  }
  return m;
}

std::optional<std::vector<AFactor>> nakajima_factorize(const CartanData& cd, const Monomial& m,
                                                       const Monomial& m_prime,
                                                       const std::vector<int>* restrict_nodes) {
  require(m.cartan() == m_prime.cartan() && m.cartan() == key_of(cd), ErrorKind::Mismatch,
          "monomials over different Cartan data");
  Monomial v = m_prime * m.inverse();
  if (v.is_one()) return std::vector<AFactor>{};

  const auto [lo, hi] = v.p_range();

  // Nodes in descending d_i; ties by node index for determinism.
  std::vector<int> nodes(cd.rank);
  for (int i = 0; i < cd.rank; ++i) nodes[i] = i + 1;
  std::stable_sort(nodes.begin(), nodes.end(),
                   [&](int a, int b) { return cd.di(a) > cd.di(b); });

  std::vector<AFactor> factors;
  for (int p = hi; p >= lo - 1; --p) {
    for (int i : nodes) {
      const int x = v.exp_at(i, p + cd.di(i));
      if (x < 0) return std::nullopt;
      if (x == 0) continue;
      v = v * a_monomial(cd, i, p).pow(-x);
      factors.push_back(AFactor{i, p, x});
    }
  }
  if (!v.is_one()) return std::nullopt;

  if (restrict_nodes) {
    for (const auto& f : factors)
      if (std::find(restrict_nodes->begin(), restrict_nodes->end(), f.node) ==
          restrict_nodes->end())
        return std::nullopt;
  }
  return factors;
}

bool nakajima_leq(const CartanData& cd, const Monomial& m, const Monomial& m_prime,
                  const std::vector<int>* restrict_nodes) {
  return nakajima_factorize(cd, m, m_prime, restrict_nodes).has_value();
}

long long gamma_pair(const GammaTable& g, const Monomial& m1, const Monomial& m2) {
  require(m1.cartan() == m2.cartan() && m1.cartan() == key_of(g.cartan()), ErrorKind::Mismatch,
          "gamma of monomials over different Cartan data");
  long long total = 0;
  for (const auto& a : m1.entries())
    for (const auto& b : m2.entries())
      total += static_cast<long long>(a.exp) * b.exp * g.gamma_ij(a.node, b.node, a.p - b.p);
  return total;
}

}  // namespace qtchar
