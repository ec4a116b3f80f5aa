#include "hilbalg/tangent.hpp"

#include <map>

namespace hilbpts {

using corealg::FieldMatrix;
using corealg::Scalar;

std::vector<Scalar> quotient_coords(const MultiPoly& f, const std::vector<MultiPoly>& gb,
                                    const ColengthResult& col, MonomialOrder o) {
    MultiPoly nf = gb.empty() ? f : normal_form(f, gb, o);
    std::map<Exponents, size_t> index;
    for (size_t i = 0; i < col.standard_monomials.size(); ++i)
        index[col.standard_monomials[i]] = i;
    std::vector<Scalar> v(col.d, Scalar::zero(f.domain()));
    for (const auto& [e, c] : nf.terms()) {
        auto it = index.find(e);
        if (it == index.end())
            throw std::logic_error("quotient_coords: normal form escaped the standard monomials");
        v[it->second] = c;
    }
    return v;
}

FieldMatrix quotient_mult_operator(const MultiPoly& f, const std::vector<MultiPoly>& gb,
                                   const ColengthResult& col, MonomialOrder o) {
    FieldMatrix m(f.domain(), col.d, col.d);
    for (size_t b = 0; b < col.d; ++b) {
        MultiPoly mono(f.vars(), f.domain());
        mono.add_term(col.standard_monomials[b], Scalar::one(f.domain()));
        std::vector<Scalar> coords = quotient_coords(f * mono, gb, col, o);
        for (size_t a = 0; a < col.d; ++a) m.at(a, b) = coords[a];
    }
    return m;
}

size_t tangent_space_dim(const IdealPoint& p) {
    std::vector<MultiPoly> gb = groebner_basis(p);
    if (gb.empty()) throw std::invalid_argument("tangent_space_dim: zero ideal has infinite colength");
    ColengthResult col = colength_of_basis(gb, p.vars, p.order);
    const size_t d = col.d;
    const size_t r = gb.size();
    if (d == 0) return 0;  // the empty subscheme

    bool monomial = true;
    for (const auto& g : gb) monomial &= is_monomial(g);
    std::vector<std::vector<MultiPoly>> syz;
    if (monomial) {
        syz = taylor_syzygies(gb);
    } else {
        if (d > 6)
            throw std::invalid_argument(
                "tangent_space_dim: non-monomial ideals supported up to colength 6");
        syz = schreyer_syzygies(gb, p.order);
    }

    const Domain& dom = gb[0].domain();
    FieldMatrix constraints(dom, syz.size() * d, r * d);
    for (size_t s = 0; s < syz.size(); ++s)
        for (size_t j = 0; j < r; ++j) {
            if (syz[s][j].is_zero()) continue;
            FieldMatrix block = quotient_mult_operator(syz[s][j], gb, col, p.order);
            for (size_t a = 0; a < d; ++a)
                for (size_t b = 0; b < d; ++b)
                    constraints.at(s * d + a, j * d + b) = block.at(a, b);
        }
    return r * d - constraints.rank();
}

}  // namespace hilbpts
