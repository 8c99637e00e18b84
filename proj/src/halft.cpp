#include "qtchar/halft.hpp"

#include <algorithm>

namespace qtchar {

HalfT HalfT::t_pow_half(int half_exp, long long coeff) {
  HalfT h;
  if (coeff != 0) h.terms_.push_back({half_exp, coeff});
  return h;
}

long long HalfT::coeff(int half_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), half_exp,
                             [](const auto& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == half_exp) return it->second;
  return 0;
}

void HalfT::add_term(int half_exp, long long coeff) {
  if (coeff == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), half_exp,
                             [](const auto& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == half_exp) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {half_exp, coeff});
  }
}

HalfT HalfT::operator+(const HalfT& o) const {
  HalfT r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

HalfT HalfT::operator-(const HalfT& o) const {
  HalfT r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

HalfT HalfT::operator-() const {
  HalfT r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

HalfT HalfT::operator*(const HalfT& o) const {
  HalfT r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

HalfT HalfT::shifted(int half_exp) const {
  HalfT r = *this;
  for (auto& [e, c] : r.terms_) e += half_exp;
  return r;
}

HalfT HalfT::bar() const {
  HalfT r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.push_back({-it->first, it->second});
  return r;
}

long long HalfT::ev1() const {
  long long s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool HalfT::integral_t_powers() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first % 2 == 0; });
}

bool HalfT::in_tm1_ztm1() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first < 0 && t.first % 2 == 0; });
}

HalfT HalfT::negative_part() const {
  HalfT r;
  for (const auto& [e, c] : terms_)
    if (e < 0) r.terms_.push_back({e, c});
  return r;
}

std::string HalfT::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    if (e == 2) {
      out += "t";
    } else if (e % 2 == 0) {
      out += "t^" + std::to_string(e / 2);
    } else {
      out += "t^(" + std::to_string(e) + "/2)";
    }
  }
  return out;
}

}  // namespace qtchar
