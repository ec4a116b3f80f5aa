#include "hilbalg/chern.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "hilbalg/gl2.hpp"

namespace charclass {

ExprPtr make_generator(const std::string& name) {
    return std::make_shared<BundleExpr>(BundleExpr{BundleExpr::Kind::Generator, name, 0, nullptr, nullptr});
}
ExprPtr make_dual(ExprPtr e) {
    return std::make_shared<BundleExpr>(BundleExpr{BundleExpr::Kind::Dual, "", 0, std::move(e), nullptr});
}
ExprPtr make_det(ExprPtr e) {
    return std::make_shared<BundleExpr>(BundleExpr{BundleExpr::Kind::Det, "", 0, std::move(e), nullptr});
}
ExprPtr make_sum(ExprPtr a, ExprPtr b) {
    return std::make_shared<BundleExpr>(BundleExpr{BundleExpr::Kind::Sum, "", 0, std::move(a), std::move(b)});
}
ExprPtr make_tensor(ExprPtr a, ExprPtr b) {
    return std::make_shared<BundleExpr>(
        BundleExpr{BundleExpr::Kind::Tensor, "", 0, std::move(a), std::move(b)});
}
ExprPtr make_sym(int m, ExprPtr e) {
    if (m < 0) throw std::invalid_argument("sym: negative degree");
    return std::make_shared<BundleExpr>(BundleExpr{BundleExpr::Kind::Sym, "", m, std::move(e), nullptr});
}
ExprPtr make_wedge(int m, ExprPtr e) {
    if (m < 0) throw std::invalid_argument("wedge: negative degree");
    return std::make_shared<BundleExpr>(BundleExpr{BundleExpr::Kind::Wedge, "", m, std::move(e), nullptr});
}

std::string expr_str(const ExprPtr& e) {
    switch (e->kind) {
        case BundleExpr::Kind::Generator: return e->name;
        case BundleExpr::Kind::Dual: return "dual(" + expr_str(e->left) + ")";
        case BundleExpr::Kind::Det: return "det(" + expr_str(e->left) + ")";
        case BundleExpr::Kind::Sum: return "(" + expr_str(e->left) + " + " + expr_str(e->right) + ")";
        case BundleExpr::Kind::Tensor: return "(" + expr_str(e->left) + " * " + expr_str(e->right) + ")";
        case BundleExpr::Kind::Sym:
            return "sym(" + std::to_string(e->m) + "," + expr_str(e->left) + ")";
        case BundleExpr::Kind::Wedge:
            return "wedge(" + std::to_string(e->m) + "," + expr_str(e->left) + ")";
    }
    return "?";
}

static unsigned long binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    unsigned long r = 1;
    for (unsigned long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

ChernRing::ChernRing(std::vector<std::pair<std::string, size_t>> generators)
    : gens_(std::move(generators)) {
    n_ = 0;
    for (const auto& [name, rank] : gens_) n_ += rank;
    if (n_ == 0) throw std::invalid_argument("ChernRing: total generator rank is zero");
    if (n_ > 26) throw std::invalid_argument("ChernRing: at most 26 Chern roots supported");
    for (size_t i = 0; i < n_; ++i) root_vars_.push_back(std::string(1, static_cast<char>('a' + i)));
    for (size_t i = 0; i < n_; ++i) chern_vars_.push_back("c" + std::to_string(i + 1));
}

size_t ChernRing::rank_of(const ExprPtr& e) const {
    switch (e->kind) {
        case BundleExpr::Kind::Generator:
            for (const auto& [name, rank] : gens_)
                if (name == e->name) return rank;
            throw std::invalid_argument("rank_of: undeclared generator " + e->name);
        case BundleExpr::Kind::Dual: return rank_of(e->left);
        case BundleExpr::Kind::Det: return 1;
        case BundleExpr::Kind::Sum: return rank_of(e->left) + rank_of(e->right);
        case BundleExpr::Kind::Tensor: return rank_of(e->left) * rank_of(e->right);
        case BundleExpr::Kind::Sym:
            return binomial(rank_of(e->left) + e->m - 1, e->m);
        case BundleExpr::Kind::Wedge: {
            size_t r = rank_of(e->left);
            if (static_cast<size_t>(e->m) > r)
                throw std::invalid_argument("wedge(" + std::to_string(e->m) +
                                            "): degree exceeds rank " + std::to_string(r));
            return binomial(r, e->m);
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<RootForm> ChernRing::chern_roots(const ExprPtr& e) const {
    switch (e->kind) {
        case BundleExpr::Kind::Generator: {
            size_t off = 0;
            for (const auto& [name, rank] : gens_) {
                if (name == e->name) {
                    std::vector<RootForm> roots;
                    for (size_t i = 0; i < rank; ++i) {
                        RootForm f(n_, 0);
                        f[off + i] = 1;
                        roots.push_back(std::move(f));
                    }
                    return roots;
                }
                off += rank;
            }
            throw std::invalid_argument("chern_roots: undeclared generator " + e->name);
        }
        case BundleExpr::Kind::Dual: {
            auto roots = chern_roots(e->left);
            for (auto& f : roots)
                for (auto& c : f) c = -c;
            return roots;
        }
        case BundleExpr::Kind::Det: {
            auto roots = chern_roots(e->left);
            RootForm sum(n_, 0);
            for (const auto& f : roots)
                for (size_t i = 0; i < n_; ++i) sum[i] += f[i];
            return {sum};
        }
        case BundleExpr::Kind::Sum: {
            auto l = chern_roots(e->left), r = chern_roots(e->right);
            l.insert(l.end(), r.begin(), r.end());
            return l;
        }
        case BundleExpr::Kind::Tensor: {
            auto l = chern_roots(e->left), r = chern_roots(e->right);
            std::vector<RootForm> out;
            for (const auto& x : l)
                for (const auto& y : r) {
                    RootForm f(n_, 0);
                    for (size_t i = 0; i < n_; ++i) f[i] = x[i] + y[i];
                    out.push_back(std::move(f));
                }
            return out;
        }
        case BundleExpr::Kind::Sym: {
            auto roots = chern_roots(e->left);
            std::vector<RootForm> out;
            std::vector<size_t> pick;
            // multisets i_1 <= i_2 <= ... <= i_m
            std::function<void(size_t, int)> rec = [&](size_t start, int left) {
                if (left == 0) {
                    RootForm f(n_, 0);
                    for (size_t idx : pick)
                        for (size_t i = 0; i < n_; ++i) f[i] += roots[idx][i];
                    out.push_back(std::move(f));
                    return;
                }
                for (size_t i = start; i < roots.size(); ++i) {
                    pick.push_back(i);
                    rec(i, left - 1);
                    pick.pop_back();
                }
            };
            rec(0, e->m);
            return out;
        }
        case BundleExpr::Kind::Wedge: {
            auto roots = chern_roots(e->left);
            if (static_cast<size_t>(e->m) > roots.size())
                throw std::invalid_argument("wedge: degree exceeds rank");
            std::vector<RootForm> out;
            std::vector<size_t> pick;
            std::function<void(size_t, int)> rec = [&](size_t start, int left) {
                if (left == 0) {
                    RootForm f(n_, 0);
                    for (size_t idx : pick)
                        for (size_t i = 0; i < n_; ++i) f[i] += roots[idx][i];
                    out.push_back(std::move(f));
                    return;
                }
                for (size_t i = start; i < roots.size(); ++i) {
                    pick.push_back(i);
                    rec(i + 1, left - 1);
                    pick.pop_back();
                }
            };
            rec(0, e->m);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

MultiPoly ChernRing::form_poly(const RootForm& f) const {
    Domain Z = Domain::integers();
    MultiPoly p(root_vars_, Z);
    for (size_t i = 0; i < n_; ++i) {
        if (f[i] == 0) continue;
        corealg::Exponents e(n_, 0);
        e[i] = 1;
        p.add_term(e, Scalar::of_int(Z, f[i]));
    }
    return p;
}

MultiPoly ChernRing::elementary_symmetric(const std::vector<RootForm>& roots, size_t k) const {
    Domain Z = Domain::integers();
    if (k > roots.size())
        throw std::invalid_argument("elementary_symmetric: k exceeds the number of roots");
    // dp over e_0..e_k
    std::vector<MultiPoly> e(k + 1, MultiPoly(root_vars_, Z));
    e[0] = MultiPoly::constant(root_vars_, Scalar::one(Z));
    for (const auto& f : roots) {
        MultiPoly fp = form_poly(f);
        for (size_t j = std::min(e.size() - 1, roots.size()); j >= 1; --j)
            e[j] = e[j] + e[j - 1] * fp;
    }
    return e[k];
}

MultiPoly ChernRing::elementary_reduce(const MultiPoly& symmetric) const {
    if (symmetric.vars() != root_vars_)
        throw std::invalid_argument("elementary_reduce: polynomial not over the root variables");
    // verify symmetry under adjacent transpositions
    for (size_t i = 0; i + 1 < n_; ++i) {
        std::vector<size_t> perm(n_);
        for (size_t j = 0; j < n_; ++j) perm[j] = j;
        std::swap(perm[i], perm[i + 1]);
        if (symmetric.permute_vars(perm) != symmetric)
            throw std::invalid_argument("elementary_reduce: input is not symmetric (swap " +
                                        root_vars_[i] + " <-> " + root_vars_[i + 1] + ")");
    }

    // e_i of the plain variables, computed once
    std::vector<RootForm> var_roots;
    for (size_t i = 0; i < n_; ++i) {
        RootForm f(n_, 0);
        f[i] = 1;
        var_roots.push_back(std::move(f));
    }
    std::vector<MultiPoly> elem;
    for (size_t i = 1; i <= n_; ++i) elem.push_back(elementary_symmetric(var_roots, i));

    Domain dom = symmetric.domain();
    MultiPoly rest = symmetric;
    MultiPoly out(chern_vars_, dom);
    while (!rest.is_zero()) {
        // lex-leading term
        const auto* lead = &*rest.terms().begin();
        for (const auto& t : rest.terms())
            if (t.first > lead->first) lead = &t;
        const corealg::Exponents& lam = lead->first;
        for (size_t i = 0; i + 1 < n_; ++i)
            if (lam[i] < lam[i + 1])
                throw std::logic_error("elementary_reduce: leading exponent not dominant");
        corealg::Exponents ce(n_, 0);
        MultiPoly prod = MultiPoly::constant(root_vars_, Scalar::one(dom));
        for (size_t i = 0; i < n_; ++i) {
            int mi = lam[i] - (i + 1 < n_ ? lam[i + 1] : 0);
            ce[i] = mi;
            if (mi > 0) prod = prod * elem[i].map_domain(dom).pow(static_cast<unsigned long>(mi));
        }
        out.add_term(ce, lead->second);
        rest = rest - prod.scaled(lead->second);
    }
    return out;
}

MultiPoly ChernRing::chern_class(const ExprPtr& e, size_t k) const {
    size_t r = rank_of(e);
    if (k > r)
        throw std::invalid_argument("chern_class: degree " + std::to_string(k) +
                                    " out of range for rank " + std::to_string(r));
    return elementary_reduce(elementary_symmetric(chern_roots(e), k));
}

MultiPoly ChernRing::expand_in_roots(const MultiPoly& chern_poly) const {
    Domain dom = chern_poly.domain();
    std::vector<RootForm> var_roots;
    for (size_t i = 0; i < n_; ++i) {
        RootForm f(n_, 0);
        f[i] = 1;
        var_roots.push_back(std::move(f));
    }
    std::vector<MultiPoly> elem;
    for (size_t i = 1; i <= n_; ++i) elem.push_back(elementary_symmetric(var_roots, i).map_domain(dom));
    MultiPoly out(root_vars_, dom);
    for (const auto& [e, c] : chern_poly.terms()) {
        MultiPoly term = MultiPoly::constant(root_vars_, c);
        for (size_t i = 0; i < n_; ++i)
            if (e[i] > 0) term = term * elem[i].pow(static_cast<unsigned long>(e[i]));
        out = out + term;
    }
    return out;
}

MultiPoly ChernRing::character(const ExprPtr& e) const {
    Domain Z = Domain::integers();
    MultiPoly chi(root_vars_, Z, /*laurent=*/true);
    for (const auto& f : chern_roots(e)) {
        corealg::Exponents exp(n_, 0);
        for (size_t i = 0; i < n_; ++i) exp[i] = static_cast<int>(f[i]);
        chi.add_term(exp, Scalar::one(Z));
    }
    return chi;
}

MultiPoly ChernRing::parse_chern(const std::string& text) const {
    return MultiPoly::parse(text, chern_vars_, Domain::integers());
}

mpz_class content(const MultiPoly& p) {
    mpz_class g = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_class v = abs(c.as_integer());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return g;
}

bool nonzero_mod_p(const MultiPoly& p, const mpz_class& prime) {
    return !p.map_domain(Domain::prime_field(prime)).is_zero();
}

// --- expression grammar ------------------------------------------------------

namespace {

struct ExprParser {
    const std::string& s;
    size_t pos = 0;

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("bundle expression: " + why + " at position " +
                                    std::to_string(pos) + " in \"" + s + "\"");
    }

    std::string ident() {
        ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected identifier");
        return s.substr(start, pos - start);
    }

    int number() {
        ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected number");
        return std::stoi(s.substr(start, pos - start));
    }

    ExprPtr factor() {
        if (eat('(')) {
            ExprPtr e = expr();
            if (!eat(')')) fail("expected )");
            return e;
        }
        std::string id = ident();
        if (id == "sym" || id == "wedge") {
            if (!eat('(')) fail("expected ( after " + id);
            int m = number();
            if (!eat(',')) fail("expected , in " + id);
            ExprPtr e = expr();
            if (!eat(')')) fail("expected )");
            return id == "sym" ? make_sym(m, e) : make_wedge(m, e);
        }
        if (id == "dual" || id == "det") {
            if (!eat('(')) fail("expected ( after " + id);
            ExprPtr e = expr();
            if (!eat(')')) fail("expected )");
            return id == "dual" ? make_dual(e) : make_det(e);
        }
        return make_generator(id);
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (peek() == '*') {
            ++pos;
            e = make_tensor(e, factor());
        }
        return e;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (peek() == '+') {
            ++pos;
            e = make_sum(e, term());
        }
        return e;
    }

    ExprPtr run() {
        ExprPtr e = expr();
        ws();
        if (pos != s.size()) fail("trailing input");
        return e;
    }
};

}  // namespace

ExprPtr parse_bundle_expr(const std::string& text) {
    ExprParser p{text, 0};
    return p.run();
}

Hilb3Report verify_hilb3_presentation() {
    ChernRing ring({{"V", 2}});
    ExprPtr V = make_generator("V");
    ExprPtr normal = make_tensor(make_sym(3, V), make_dual(make_det(V)));

    Hilb3Report rep;
    rep.generator = ring.chern_class(normal, 4);

    // c2 * (9 c2 - 2 c1^2)
    Domain Z = Domain::integers();
    MultiPoly expected(ring.chern_vars(), Z);
    expected.add_term({0, 2}, Scalar::of_int(Z, 9));
    expected.add_term({2, 1}, Scalar::of_int(Z, -2));
    if (!(rep.generator == expected))
        throw std::logic_error("verify_hilb3_presentation: c4 generator mismatch: got " +
                               rep.generator.str());

    rep.coefficient_content = content(rep.generator);
    if (rep.coefficient_content != 1)
        throw std::logic_error("verify_hilb3_presentation: content is not 1");
    for (long p : {2L, 3L, 5L, 7L}) {
        if (!nonzero_mod_p(rep.generator, p))
            throw std::logic_error("verify_hilb3_presentation: generator vanishes mod " +
                                   std::to_string(p));
        rep.primes_verified.push_back(p);
    }

    // tangent character Hom(S^2(V*), V*) = dual(sym(2, dual V)) (x) dual(V)
    ExprPtr tangent = make_tensor(make_dual(make_sym(2, make_dual(V))), make_dual(V));
    MultiPoly chi = ring.character(tangent);
    rep.decomposition = gl2_decompose(chi);
    if (!(gl2_reconstruct(rep.decomposition) == chi))
        throw std::logic_error("verify_hilb3_presentation: character reconstruction failed");
    size_t two_dim = 0;
    for (const auto& [p, q] : rep.decomposition)
        if (p - q + 1 == 2) ++two_dim;
    rep.unique_two_dim_summand = (two_dim == 1);
    if (!rep.unique_two_dim_summand)
        throw std::logic_error("verify_hilb3_presentation: 2-dimensional summand not unique");
    return rep;
}

}  // namespace charclass
