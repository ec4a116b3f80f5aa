#include "hilbalg/gl2.hpp"

#include <algorithm>

namespace charclass {

using corealg::Domain;
using corealg::MultiPoly;
using corealg::Scalar;

static const std::vector<std::string> kAB{"a", "b"};

MultiPoly gl2_character_zero() { return MultiPoly(kAB, Domain::integers(), true); }

MultiPoly parse_gl2_character(const std::string& text) {
    return MultiPoly::parse(text, kAB, Domain::integers(), true);
}

MultiPoly gl2_irreducible_character(int p, int q) {
    if (p < q) throw std::invalid_argument("gl2_irreducible_character: requires p >= q");
    Domain Z = Domain::integers();
    MultiPoly chi(kAB, Z, true);
    for (int i = 0; i <= p - q; ++i) chi.add_term({p - i, q + i}, Scalar::one(Z));
    return chi;
}

std::vector<std::pair<int, int>> gl2_decompose(const MultiPoly& chi) {
    if (chi.vars() != kAB || !chi.laurent())
        throw std::invalid_argument("gl2_decompose: expected a Laurent polynomial in a, b");
    if (chi.permute_vars({1, 0}) != chi)
        throw std::invalid_argument("gl2_decompose: character is not symmetric under a <-> b");
    for (const auto& [e, c] : chi.terms())
        if (c.as_integer() < 0)
            throw std::invalid_argument("gl2_decompose: negative coefficient in input");

    std::vector<std::pair<int, int>> weights;
    MultiPoly rest = chi;
    while (!rest.is_zero()) {
        // lexicographically highest weight
        const auto* lead = &*rest.terms().begin();
        for (const auto& t : rest.terms())
            if (t.first > lead->first) lead = &t;
        int p = lead->first[0], q = lead->first[1];
        if (p < q) throw std::logic_error("gl2_decompose: highest weight with p < q");
        mpz_class mult = lead->second.as_integer();
        if (mult < 0)
            throw std::invalid_argument("gl2_decompose: peeling produced a negative coefficient");
        MultiPoly irr = gl2_irreducible_character(p, q);
        rest = rest - irr.scaled(lead->second);
        for (const auto& [e, c] : rest.terms())
            if (c.as_integer() < 0)
                throw std::invalid_argument(
                    "gl2_decompose: peeling produced a negative coefficient (not a character)");
        for (mpz_class i = 0; i < mult; ++i) weights.emplace_back(p, q);
    }
    std::sort(weights.begin(), weights.end());
    return weights;
}

MultiPoly gl2_reconstruct(const std::vector<std::pair<int, int>>& weights) {
    MultiPoly chi = gl2_character_zero();
    for (const auto& [p, q] : weights) chi = chi + gl2_irreducible_character(p, q);
    return chi;
}

}  // namespace charclass
