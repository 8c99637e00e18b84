#include "qtchar/io.hpp"

#include <algorithm>
#include <cctype>

namespace qtchar {

std::string monomial_str(const Monomial& m, const std::string& symbol) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& e : m.entries()) {
    out += symbol + "[" + std::to_string(e.node) + "," + std::to_string(e.p) + "]";
    if (e.exp != 1) out += "^" + std::to_string(e.exp);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
  void expect(char c) {
    skip_ws();
    require(pos < s.size() && s[pos] == c, ErrorKind::ParseError,
            std::string("expected '") + c + "' at position " + std::to_string(pos));
    ++pos;
  }
  long parse_int() {
    skip_ws();
    const size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    require(pos > start && std::isdigit(static_cast<unsigned char>(s[pos - 1])),
            ErrorKind::ParseError, "expected an integer at position " + std::to_string(start));
    return std::stol(s.substr(start, pos - start));
  }
};

}  // namespace

Monomial parse_monomial(const CartanData& cd, const std::string& text) {
  Cursor cur{text};
  Monomial m(key_of(cd));
  if (!cur.done() && cur.peek() == '1') {
    ++cur.pos;
    require(cur.done(), ErrorKind::ParseError, "trailing input after '1'");
    return m;
  }
  while (!cur.done()) {
    cur.expect('Y');
    cur.expect('[');
    const long node = cur.parse_int();
    cur.expect(',');
    const long p = cur.parse_int();
    cur.expect(']');
    long exp = 1;
    if (!cur.done() && cur.peek() == '^') {
      ++cur.pos;
      exp = cur.parse_int();
    }
    require(1 <= node && node <= cd.rank, ErrorKind::ParseError,
            "node " + std::to_string(node) + " out of range for " + cd.name());
    m.mul_var(static_cast<int>(node), static_cast<int>(p), static_cast<int>(exp));
  }
  return m;
}

Monomial parse_monomial_signed(const CartanData& cd, const std::string& text) {
  Cursor cur{text};
  Monomial m(key_of(cd));
  if (!cur.done() && cur.peek() == '1') {
    ++cur.pos;
    require(cur.done(), ErrorKind::ParseError, "trailing input after '1'");
    return m;
  }
  while (!cur.done()) {
    cur.expect('Y');
    cur.expect('[');
    const long label = cur.parse_int();
    cur.expect(',');
    const long p = cur.parse_int();
    cur.expect(']');
    long exp = 1;
    if (!cur.done() && cur.peek() == '^') {
      ++cur.pos;
      exp = cur.parse_int();
    }
    const int node = signed_to_internal(cd, static_cast<int>(label));
    require(1 <= node && node <= cd.rank, ErrorKind::ParseError,
            "label " + std::to_string(label) + " out of range for " + cd.name());
    m.mul_var(node, static_cast<int>(p), static_cast<int>(exp));
  }
  return m;
}

std::string unfolded_str(const UnfoldedMonomial& m) {
  if (m.entries.empty()) return "1";
  std::string out;
  for (const auto& e : m.entries) {
    out += "Yu[" + std::to_string(e.node) + "," + std::to_string(e.p) + "," +
           std::to_string(e.eps) + "]";
    if (e.exp != 1) out += "^" + std::to_string(e.exp);
  }
  return out;
}

std::vector<std::pair<Monomial, HalfT>> sorted_terms(const CartanData& cd, const Monomial& top,
                                                     const TorusElement& body) {
  std::vector<std::pair<long long, std::pair<Monomial, HalfT>>> keyed;
  for (const auto& [m, c] : body.terms()) {
    auto factors = nakajima_factorize(cd, m, top);
    long long deg = 0;
    if (factors) {
      for (const auto& f : *factors) deg += f.exp;
    }
    keyed.push_back({deg, {m, c}});
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Monomial, HalfT>> out;
  out.reserve(keyed.size());
  for (auto& [deg, term] : keyed) out.push_back(std::move(term));
  return out;
}

std::string element_text(const CartanData& cd, const Monomial& top, const TorusElement& body) {
  std::string out;
  for (const auto& [m, c] : sorted_terms(cd, top, body)) {
    const std::string cs = c.str();
    if (cs == "1") {
      out += monomial_str(m);
    } else if (c.terms().size() == 1 && cs[0] != '-') {
      out += cs + "*" + monomial_str(m);
    } else {
      out += "(" + cs + ")*" + monomial_str(m);
    }
    out += "\n";
  }
  return out;
}

std::string twisted_text(const FoldingDatum& fd, const TwistedPointed& y) {
  TorusElement body(key_of(fd.cartan));
  for (const auto& [m, c] : y.body.terms()) body.add_term(m, HalfT::t_pow_half(0, c));
  std::string out;
  for (const auto& [m, c] : sorted_terms(fd.cartan, y.top, body)) {
    const long long v = c.ev1();
    if (v != 1) out += std::to_string(v) + "*";
    out += monomial_str(m, "Yo") + "\n";
  }
  return out;
}

nlohmann::json element_json(const CartanData& cd, const Monomial& top, const TorusElement& body,
                            bool t_one) {
  nlohmann::json j;
  j["cartan"] = {{"family", std::string(1, static_cast<char>(cd.family))}, {"rank", cd.rank}};
  j["top"] = monomial_str(top);
  j["terms"] = nlohmann::json::array();
  for (const auto& [m, c] : sorted_terms(cd, top, body)) {
    nlohmann::json term;
    term["m"] = monomial_str(m);
    if (t_one) {
      term["c"] = c.ev1();
    } else {
      nlohmann::json poly = nlohmann::json::array();
      for (const auto& [e, v] : c.terms()) poly.push_back({e, v});
      term["c"] = poly;
    }
    j["terms"].push_back(term);
  }
  return j;
}

nlohmann::json twisted_json(const FoldingDatum& fd, const TwistedPointed& y) {
  nlohmann::json j;
  j["cartan"] = {{"family", std::string(1, static_cast<char>(fd.cartan.family))},
                 {"rank", fd.cartan.rank}};
  j["orbit"] = true;
  j["top"] = monomial_str(y.top, "Yo");
  j["terms"] = nlohmann::json::array();
  TorusElement body(key_of(fd.cartan));
  for (const auto& [m, c] : y.body.terms()) body.add_term(m, HalfT::t_pow_half(0, c));
  for (const auto& [m, c] : sorted_terms(fd.cartan, y.top, body))
    j["terms"].push_back({{"m", monomial_str(m, "Yo")}, {"c", c.ev1()}});
  return j;
}

nlohmann::json unfolded_json(const UnfoldedElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : x) terms.push_back({{"m", unfolded_str(m)}, {"c", c}});
  return terms;
}

std::pair<Monomial, TorusElement> element_from_json(const CartanData& cd,
                                                    const nlohmann::json& j) {
  const Monomial top = parse_monomial(cd, j.at("top").get<std::string>());
  TorusElement body(key_of(cd));
  for (const auto& term : j.at("terms")) {
    const Monomial m = parse_monomial(cd, term.at("m").get<std::string>());
    HalfT c;
    const auto& jc = term.at("c");
    if (jc.is_number()) {
      c = HalfT::t_pow_half(0, jc.get<long long>());
    } else {
      for (const auto& pair : jc) c.add_term(pair.at(0).get<int>(), pair.at(1).get<long long>());
    }
    body.add_term(m, c);
  }
  return {top, body};
}

}  // namespace qtchar
