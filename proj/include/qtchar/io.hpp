#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qtchar/twisted.hpp"

namespace qtchar {

// Textual monomial grammar shared by the CLI and the JSON files:
// concatenated factors Y[i,p]^e with whitespace ignored, exponent omitted
// meaning 1; the empty monomial prints and parses as "1".
std::string monomial_str(const Monomial& m, const std::string& symbol = "Y");
Monomial parse_monomial(const CartanData& cd, const std::string& text);

// Same grammar with type-A signed node labels (-l..l without or with 0,
// matching the folding convention); type D labels are unchanged.
Monomial parse_monomial_signed(const CartanData& cd, const std::string& text);

std::string unfolded_str(const UnfoldedMonomial& m);

// Terms of a pointed element in the canonical presentation order: ascending
// A-degree distance from the top, lexicographic within one degree.
std::vector<std::pair<Monomial, HalfT>> sorted_terms(const CartanData& cd, const Monomial& top,
                                                     const TorusElement& body);

std::string element_text(const CartanData& cd, const Monomial& top, const TorusElement& body);
std::string twisted_text(const FoldingDatum& fd, const TwistedPointed& y);

nlohmann::json element_json(const CartanData& cd, const Monomial& top, const TorusElement& body,
                            bool t_one);
nlohmann::json twisted_json(const FoldingDatum& fd, const TwistedPointed& y);
nlohmann::json unfolded_json(const UnfoldedElement& x);

// Inverse of element_json for cache round-trips (t-deformed flavor only
// reads back what element_json wrote).
std::pair<Monomial, TorusElement> element_from_json(const CartanData& cd,
                                                    const nlohmann::json& j);

}  // namespace qtchar
