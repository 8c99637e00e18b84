#include "qtchar/torus.hpp"

namespace qtchar {

TorusElement TorusElement::monomial(const Monomial& m, HalfT c) {
  TorusElement x(m.cartan());
  x.add_term(m, c);
  return x;
}

HalfT TorusElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? HalfT::zero() : it->second;
}

void TorusElement::add_term(const Monomial& m, const HalfT& c) {
  require(m.cartan() == ck_, ErrorKind::Mismatch, "term over different Cartan data");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  require(ck_ == o.ck_, ErrorKind::Mismatch, "elements over different Cartan data");
  TorusElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
  require(ck_ == o.ck_, ErrorKind::Mismatch, "elements over different Cartan data");
  TorusElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

TorusElement TorusElement::scaled(const HalfT& c) const {
  TorusElement r(ck_);
  if (c.is_zero()) return r;
  for (const auto& [m, cm] : terms_) r.terms_.emplace(m, cm * c);
  return r;
}

TorusElement TorusElement::bar() const {
  TorusElement r(ck_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.bar());
  return r;
}

TorusElement TorusElement::ev_t1() const {
  TorusElement r(ck_);
  for (const auto& [m, c] : terms_) r.add_term(m, HalfT::t_pow_half(0, c.ev1()));
  return r;
}

bool TorusElement::t_free() const {
  for (const auto& [m, c] : terms_) {
    for (const auto& [e, v] : c.terms())
      if (e != 0) return false;
  }
  return true;
}

TorusElement star_product(const GammaTable& g, const TorusElement& x, const TorusElement& y) {
  require(x.cartan() == y.cartan() && x.cartan() == key_of(g.cartan()), ErrorKind::Mismatch,
          "star product over different Cartan data");
  TorusElement r(x.cartan());
  for (const auto& [m1, c1] : x.terms()) {
    for (const auto& [m2, c2] : y.terms()) {
      // t^{gamma/2} is a shift by gamma in half-exponent units.
      const long long gam = gamma_pair(g, m1, m2);
      r.add_term(m1 * m2, (c1 * c2).shifted(static_cast<int>(gam)));
    }
  }
  return r;
}

Pointed::Pointed(const CartanData& cd, Monomial top, TorusElement body)
    : top_(std::move(top)), body_(std::move(body)) {
  require(top_.cartan() == body_.cartan(), ErrorKind::Mismatch,
          "pointed element over different Cartan data");
  require(body_.coeff(top_).is_one(), ErrorKind::NotPointed,
          "top monomial coefficient is not 1");
  for (const auto& [m, c] : body_.terms()) {
    if (m == top_) continue;
    require(nakajima_leq(cd, m, top_), ErrorKind::NotPointed,
            "monomial not below the top in the Nakajima ordering");
  }
}

}  // namespace qtchar
