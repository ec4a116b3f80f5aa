#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbalg/multipoly.hpp"

namespace hilbpts {

using corealg::Domain;
using corealg::Exponents;
using corealg::MultiPoly;
using corealg::Scalar;

enum class MonomialOrder { Degrevlex, Lex };

MonomialOrder order_from_name(const std::string& name);
std::string order_name(MonomialOrder o);

/// Strict comparison a < b in the chosen order.
bool mono_less(const Exponents& a, const Exponents& b, MonomialOrder o);
bool mono_divides(const Exponents& a, const Exponents& b);  // a | b
Exponents mono_lcm(const Exponents& a, const Exponents& b);
Exponents mono_quotient(const Exponents& a, const Exponents& b);  // a / b

/// A point of Hilb_d(A^n): ideal generators over a field with an order tag.
struct IdealPoint {
    std::vector<std::string> vars;
    std::vector<MultiPoly> gens;
    MonomialOrder order = MonomialOrder::Degrevlex;
};

struct Term {
    Exponents exps;
    Scalar coeff;
};

/// Leading term with respect to the order; throws on the zero polynomial.
Term leading_term(const MultiPoly& f, MonomialOrder o);

/// Full division remainder of f by the list; optionally records quotients.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& gs, MonomialOrder o,
                      std::vector<MultiPoly>* quotients = nullptr);

/// The reduced Groebner basis, sorted by leading term ascending; monic.
std::vector<MultiPoly> groebner_basis(const IdealPoint& p);

struct ColengthResult {
    size_t d = 0;
    std::vector<Exponents> standard_monomials;  // sorted in the point's order
};

/// Number of standard monomials; throws when the quotient is not finite
/// dimensional (some variable has no leading-term power).
ColengthResult colength(const IdealPoint& p);
ColengthResult colength_of_basis(const std::vector<MultiPoly>& gb,
                                 const std::vector<std::string>& vars, MonomialOrder o);

/// The r(r-1)/2 pairwise syzygies (lcm/m_i) e_i - (lcm/m_j) e_j of a list of
/// monomials.
std::vector<std::vector<MultiPoly>> taylor_syzygies(const std::vector<MultiPoly>& monomial_gens);

/// Syzygies of a reduced Groebner basis read off from the division trace of
/// every S-polynomial.
std::vector<std::vector<MultiPoly>> schreyer_syzygies(const std::vector<MultiPoly>& gb,
                                                      MonomialOrder o);

bool is_monomial(const MultiPoly& f);

}  // namespace hilbpts
