#include "hilbalg/groebner.hpp"

#include <algorithm>
#include <deque>

namespace hilbpts {

MonomialOrder order_from_name(const std::string& name) {
    if (name == "degrevlex") return MonomialOrder::Degrevlex;
    if (name == "lex") return MonomialOrder::Lex;
    throw std::invalid_argument("unknown monomial order \"" + name + "\" (degrevlex | lex)");
}

std::string order_name(MonomialOrder o) {
    return o == MonomialOrder::Degrevlex ? "degrevlex" : "lex";
}

bool mono_less(const Exponents& a, const Exponents& b, MonomialOrder o) {
    if (o == MonomialOrder::Lex) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    long da = corealg::total_degree(a), db = corealg::total_degree(b);
    if (da != db) return da < db;
    // degrevlex: smaller iff the last nonzero entry of a-b is positive
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

bool mono_divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents mono_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponents mono_quotient(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw std::invalid_argument("mono_quotient: not divisible");
    }
    return r;
}

Term leading_term(const MultiPoly& f, MonomialOrder o) {
    if (f.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
    const auto* best = &*f.terms().begin();
    for (const auto& t : f.terms())
        if (mono_less(best->first, t.first, o)) best = &t;
    return Term{best->first, best->second};
}

bool is_monomial(const MultiPoly& f) { return f.terms().size() == 1; }

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& gs, MonomialOrder o,
                      std::vector<MultiPoly>* quotients) {
    if (quotients) quotients->assign(gs.size(), MultiPoly(f.vars(), f.domain()));
    std::vector<Term> lts;
    lts.reserve(gs.size());
    for (const auto& g : gs) lts.push_back(leading_term(g, o));

    MultiPoly rem(f.vars(), f.domain());
    MultiPoly cur = f;
    while (!cur.is_zero()) {
        Term lt = leading_term(cur, o);
        bool reduced = false;
        for (size_t i = 0; i < gs.size(); ++i) {
            if (!mono_divides(lts[i].exps, lt.exps)) continue;
            MultiPoly q(f.vars(), f.domain());
            q.add_term(mono_quotient(lt.exps, lts[i].exps), lt.coeff / lts[i].coeff);
            cur = cur - q * gs[i];
            if (quotients) (*quotients)[i] = (*quotients)[i] + q;
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lt.exps, lt.coeff);
            MultiPoly drop(f.vars(), f.domain());
            drop.add_term(lt.exps, lt.coeff);
            cur = cur - drop;
        }
    }
    return rem;
}

static MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder o) {
    Term lf = leading_term(f, o), lg = leading_term(g, o);
    Exponents l = mono_lcm(lf.exps, lg.exps);
    MultiPoly uf(f.vars(), f.domain()), ug(f.vars(), f.domain());
    uf.add_term(mono_quotient(l, lf.exps), Scalar::one(f.domain()) / lf.coeff);
    ug.add_term(mono_quotient(l, lg.exps), Scalar::one(f.domain()) / lg.coeff);
    return uf * f - ug * g;
}

std::vector<MultiPoly> groebner_basis(const IdealPoint& p) {
    if (!p.gens.empty() && !p.gens[0].domain().is_field())
        throw std::invalid_argument("groebner_basis: coefficients must lie in a field");
    const MonomialOrder o = p.order;
    std::vector<MultiPoly> basis;
    for (const auto& g : p.gens)
        if (!g.is_zero()) basis.push_back(g);

    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        Term li = leading_term(basis[i], o), lj = leading_term(basis[j], o);
        // Buchberger's coprimality criterion
        Exponents l = mono_lcm(li.exps, lj.exps);
        Exponents sum(l.size());
        for (size_t k = 0; k < l.size(); ++k) sum[k] = li.exps[k] + lj.exps[k];
        if (l == sum) continue;
        MultiPoly r = normal_form(s_polynomial(basis[i], basis[j], o), basis, o);
        if (r.is_zero()) continue;
        for (size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
        basis.push_back(r);
    }

    // minimalize: drop elements whose leading term another leading term divides
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        Term li = leading_term(basis[i], o);
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            Term lj = leading_term(basis[j], o);
            if (mono_divides(lj.exps, li.exps) &&
                (lj.exps != li.exps || j < i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // reduce: make monic and reduce each tail against the others
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = others.empty() ? minimal[i] : normal_form(minimal[i], others, o);
        if (r.is_zero()) continue;
        Term lt = leading_term(r, o);
        reduced.push_back(r.scaled(lt.coeff.inverse()));
    }
    std::sort(reduced.begin(), reduced.end(), [o](const MultiPoly& a, const MultiPoly& b) {
        return mono_less(leading_term(a, o).exps, leading_term(b, o).exps, o);
    });
    return reduced;
}

ColengthResult colength_of_basis(const std::vector<MultiPoly>& gb,
                                 const std::vector<std::string>& vars, MonomialOrder o) {
    const size_t n = vars.size();
    std::vector<Exponents> lts;
    for (const auto& g : gb) lts.push_back(leading_term(g, o).exps);

    // unit ideal: the zero subscheme
    for (const auto& e : lts)
        if (corealg::total_degree(e) == 0) return ColengthResult{0, {}};

    std::vector<int> bound(n, -1);
    for (const auto& e : lts) {
        int support = -1;
        bool pure = true;
        for (size_t i = 0; i < n; ++i)
            if (e[i] > 0) {
                if (support >= 0) pure = false;
                support = static_cast<int>(i);
            }
        if (pure && support >= 0)
            bound[support] = bound[support] < 0 ? e[support] : std::min(bound[support], e[support]);
    }
    for (size_t i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw std::invalid_argument("colength: infinite quotient (no leading-term power of " +
                                        vars[i] + ")");

    ColengthResult res;
    Exponents e(n, 0);
    while (true) {
        bool standard = true;
        for (const auto& lt : lts)
            if (mono_divides(lt, e)) {
                standard = false;
                break;
            }
        if (standard) res.standard_monomials.push_back(e);
        size_t i = 0;
        for (; i < n; ++i) {
            if (++e[i] < bound[i]) break;
            e[i] = 0;
        }
        if (i == n) break;
    }
    std::sort(res.standard_monomials.begin(), res.standard_monomials.end(),
              [o](const Exponents& a, const Exponents& b) { return mono_less(a, b, o); });
    res.d = res.standard_monomials.size();
    return res;
}

ColengthResult colength(const IdealPoint& p) {
    return colength_of_basis(groebner_basis(p), p.vars, p.order);
}

std::vector<std::vector<MultiPoly>> taylor_syzygies(const std::vector<MultiPoly>& gens) {
    for (const auto& g : gens)
        if (!is_monomial(g))
            throw std::invalid_argument("taylor_syzygies: generator " + g.str() + " is not a monomial");
    std::vector<std::vector<MultiPoly>> syz;
    const size_t r = gens.size();
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j) {
            const auto& [ei, ci] = *gens[i].terms().begin();
            const auto& [ej, cj] = *gens[j].terms().begin();
            Exponents l = mono_lcm(ei, ej);
            std::vector<MultiPoly> v(r, MultiPoly(gens[i].vars(), gens[i].domain()));
            v[i].add_term(mono_quotient(l, ei), ci.inverse());
            v[j].add_term(mono_quotient(l, ej), -cj.inverse());
            syz.push_back(std::move(v));
        }
    return syz;
}

std::vector<std::vector<MultiPoly>> schreyer_syzygies(const std::vector<MultiPoly>& gb,
                                                      MonomialOrder o) {
    std::vector<std::vector<MultiPoly>> syz;
    const size_t r = gb.size();
    if (r == 0) return syz;
    const auto& vars = gb[0].vars();
    const Domain& dom = gb[0].domain();
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j) {
            Term li = leading_term(gb[i], o), lj = leading_term(gb[j], o);
            Exponents l = mono_lcm(li.exps, lj.exps);
            MultiPoly ui(vars, dom), uj(vars, dom);
            ui.add_term(mono_quotient(l, li.exps), Scalar::one(dom) / li.coeff);
            uj.add_term(mono_quotient(l, lj.exps), Scalar::one(dom) / lj.coeff);
            std::vector<MultiPoly> q;
            MultiPoly rem = normal_form(ui * gb[i] - uj * gb[j], gb, o, &q);
            if (!rem.is_zero())
                throw std::logic_error("schreyer_syzygies: input is not a Groebner basis");
            std::vector<MultiPoly> v(r, MultiPoly(vars, dom));
            v[i] = ui - q[i];
            v[j] = (MultiPoly(vars, dom) - uj) - q[j];
            for (size_t k = 0; k < r; ++k)
                if (k != i && k != j) v[k] = MultiPoly(vars, dom) - q[k];
            syz.push_back(std::move(v));
        }
    return syz;
}

}  // namespace hilbpts
