#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hilbalg/surjection.hpp"
#include "hilbalg/tangent.hpp"
#include "test_support.hpp"

using namespace hilbpts;
using corealg::Domain;
using corealg::MultiPoly;
using corealg::Scalar;
using finalg::Algebra;
using finalg::BaseRing;

static IdealPoint point(const std::string& gens, const std::vector<std::string>& vars,
                        const Domain& dom, MonomialOrder o = MonomialOrder::Degrevlex) {
    IdealPoint p;
    p.vars = vars;
    p.order = o;
    std::string cur;
    for (char c : gens + ",") {
        if (c == ',') {
            if (!cur.empty()) p.gens.push_back(MultiPoly::parse(cur, vars, dom));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return p;
}

TEST_CASE("groebner basis of a monomial ideal is itself") {
    Domain Q = Domain::rationals();
    IdealPoint p = point("x^2, x*y, y^2", {"x", "y"}, Q);
    auto gb = groebner_basis(p);
    REQUIRE(gb.size() == 3);
    CHECK(gb[0] == MultiPoly::parse("y^2", p.vars, Q));
    CHECK(gb[1] == MultiPoly::parse("x*y", p.vars, Q));
    CHECK(gb[2] == MultiPoly::parse("x^2", p.vars, Q));
}

TEST_CASE("one S-pair reduces to zero for (x^2 - y, y^2)") {
    Domain Q = Domain::rationals();
    IdealPoint p = point("x^2 - y, y^2", {"x", "y"}, Q);
    auto gb = groebner_basis(p);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == MultiPoly::parse("y^2", p.vars, Q));
    CHECK(gb[1] == MultiPoly::parse("x^2 - y", p.vars, Q));
}

TEST_CASE("unit ideal collapses to {1}") {
    Domain Q = Domain::rationals();
    IdealPoint p = point("x - 1, x", {"x"}, Q);
    auto gb = groebner_basis(p);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == MultiPoly::parse("1", p.vars, Q));
    CHECK(colength(p).d == 0);
}

TEST_CASE("groebner basis is idempotent and order independent of input order") {
    Domain F5 = Domain::prime_field(5);
    IdealPoint p = point("x^2 + y, y^2 + x, x*y", {"x", "y"}, F5);
    auto gb = groebner_basis(p);
    IdealPoint pg = p;
    pg.gens = gb;
    CHECK(groebner_basis(pg) == gb);

    IdealPoint shuffled = p;
    std::reverse(shuffled.gens.begin(), shuffled.gens.end());
    CHECK(groebner_basis(shuffled) == gb);

    // every S-polynomial of the result reduces to zero
    for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j) {
            Term li = leading_term(gb[i], p.order), lj = leading_term(gb[j], p.order);
            auto l = mono_lcm(li.exps, lj.exps);
            MultiPoly ui(p.vars, F5), uj(p.vars, F5);
            ui.add_term(mono_quotient(l, li.exps), Scalar::one(F5) / li.coeff);
            uj.add_term(mono_quotient(l, lj.exps), Scalar::one(F5) / lj.coeff);
            CHECK(normal_form(ui * gb[i] - uj * gb[j], gb, p.order).is_zero());
        }
}

TEST_CASE("buchberger on random ideals: S-polynomials reduce to zero, output unique") {
    std::mt19937 rng(90210);
    Domain F5 = Domain::prime_field(5);
    std::vector<std::string> vars{"x", "y"};
    for (int trial = 0; trial < 15; ++trial) {
        IdealPoint p;
        p.vars = vars;
        size_t ngens = 2 + rng() % 2;
        for (size_t g = 0; g < ngens; ++g) {
            corealg::MultiPoly f(vars, F5);
            for (int t = 0; t < 3; ++t)
                f.add_term({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)},
                           Scalar::of_int(F5, static_cast<long>(rng() % 5)));
            if (!f.is_zero()) p.gens.push_back(f);
        }
        if (p.gens.empty()) continue;
        auto gb = groebner_basis(p);
        if (gb.empty()) continue;
        for (size_t i = 0; i < gb.size(); ++i)
            for (size_t j = i + 1; j < gb.size(); ++j) {
                Term li = leading_term(gb[i], p.order), lj = leading_term(gb[j], p.order);
                auto l = mono_lcm(li.exps, lj.exps);
                corealg::MultiPoly ui(vars, F5), uj(vars, F5);
                ui.add_term(mono_quotient(l, li.exps), Scalar::one(F5) / li.coeff);
                uj.add_term(mono_quotient(l, lj.exps), Scalar::one(F5) / lj.coeff);
                CHECK(normal_form(ui * gb[i] - uj * gb[j], gb, p.order).is_zero());
            }
        IdealPoint shuffled = p;
        std::shuffle(shuffled.gens.begin(), shuffled.gens.end(), rng);
        CHECK(groebner_basis(shuffled) == gb);
    }
}

TEST_CASE("colength and standard monomials") {
    Domain Q = Domain::rationals();
    auto col = colength(point("x^2, x*y, y^2", {"x", "y"}, Q));
    CHECK(col.d == 3);
    REQUIRE(col.standard_monomials.size() == 3);
    CHECK(col.standard_monomials[0] == corealg::Exponents{0, 0});

    auto col2 = colength(point("x^2 - y, y^2", {"x", "y"}, Q));
    CHECK(col2.d == 4);  // basis 1, x, y, xy

    CHECK_THROWS(colength(point("x", {"x", "y"}, Q)));
}

TEST_CASE("colength is order invariant on random monomial ideals") {
    std::mt19937 rng(555);
    Domain Q = Domain::rationals();
    int checked = 0;
    std::vector<support::MonomialIdeal> all;
    for (size_t nv : {2u, 3u})
        for (size_t d : {2u, 3u, 4u}) {
            auto batch = support::monomial_ideals(nv, d);
            all.insert(all.end(), batch.begin(), batch.end());
        }
    std::shuffle(all.begin(), all.end(), rng);
    for (const auto& mi : all) {
        if (checked >= 20) break;
        auto pa = support::as_ideal_point(mi, Q, MonomialOrder::Degrevlex);
        auto pb = support::as_ideal_point(mi, Q, MonomialOrder::Lex);
        CHECK(colength(pa).d == colength(pb).d);
        CHECK(colength(pa).d == mi.standard_monos.size());
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("taylor syzygies") {
    Domain Q = Domain::rationals();
    std::vector<std::string> xy{"x", "y"};
    auto mono = [&](const std::string& s) { return MultiPoly::parse(s, xy, Q); };

    auto syz = taylor_syzygies({mono("x^2"), mono("x*y")});
    REQUIRE(syz.size() == 1);
    CHECK(syz[0][0] == mono("y"));
    CHECK(syz[0][1] == mono("-x"));

    auto syz3 = taylor_syzygies({mono("x^2"), mono("x*y"), mono("y^2")});
    REQUIRE(syz3.size() == 3);
    CHECK(syz3[0][0] == mono("y"));
    CHECK(syz3[0][1] == mono("-x"));
    CHECK(syz3[1][0] == mono("y^2"));
    CHECK(syz3[1][2] == mono("-x^2"));
    CHECK(syz3[2][1] == mono("y"));
    CHECK(syz3[2][2] == mono("-x"));

    CHECK(taylor_syzygies({mono("x^2")}).empty());
    CHECK_THROWS(taylor_syzygies({mono("x^2 + y")}));
}

TEST_CASE("tangent space dimensions: pinned values") {
    for (const Domain& dom : {Domain::rationals(), Domain::prime_field(2), Domain::prime_field(5)}) {
        CHECK(tangent_space_dim(point("x^2, x*y, y^2", {"x", "y"}, dom)) == 6);
    }
    CHECK(tangent_space_dim(point("x, y", {"x", "y"}, Domain::rationals())) == 2);
    CHECK(tangent_space_dim(point("z, x^2, x*y, y^2", {"x", "y", "z"}, Domain::rationals())) == 9);
}

TEST_CASE("tangent space for a non-monomial ideal via Schreyer syzygies") {
    Domain Q = Domain::rationals();
    // curvilinear colength-4 point: k[x]/(x^4) embedded by y = x^2
    size_t dim_drl =
        tangent_space_dim(point("x^2 - y, y^2", {"x", "y"}, Q, MonomialOrder::Degrevlex));
    size_t dim_lex = tangent_space_dim(point("x^2 - y, y^2", {"x", "y"}, Q, MonomialOrder::Lex));
    CHECK(dim_drl == dim_lex);  // intrinsic to the subscheme
    CHECK(dim_drl == 8);        // smooth (curvilinear) point of Hilb_4(A^2)
}

TEST_CASE("schreyer syzygies annihilate the basis") {
    Domain Q = Domain::rationals();
    IdealPoint p = point("x^2 - y, y^2", {"x", "y"}, Q);
    auto gb = groebner_basis(p);
    auto syz = schreyer_syzygies(gb, p.order);
    CHECK(syz.size() == 1);
    for (const auto& s : syz) {
        MultiPoly acc(p.vars, Q);
        for (size_t i = 0; i < gb.size(); ++i) acc = acc + s[i] * gb[i];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("colength of a non-monomial ideal is order invariant") {
    Domain Q = Domain::rationals();
    for (const char* gens : {"x^2 - y, y^2", "x^2 + y^2 - 1, x*y - 1, x + y"}) {
        size_t drl = colength(point(gens, {"x", "y"}, Q, MonomialOrder::Degrevlex)).d;
        size_t lex = colength(point(gens, {"x", "y"}, Q, MonomialOrder::Lex)).d;
        CHECK(drl == lex);
    }
}

TEST_CASE("taylor and schreyer syzygies give the same tangent dimension") {
    // On a monomial ideal the Schreyer syzygies of the (monomial) basis are an
    // alternative generating set; the kernel dimension must not change.
    Domain Q = Domain::rationals();
    for (const auto& mi : support::monomial_ideals(2, 4)) {
        auto p = support::as_ideal_point(mi, Q, MonomialOrder::Degrevlex);
        auto gb = groebner_basis(p);
        auto col = colength_of_basis(gb, p.vars, p.order);
        size_t d = col.d, r = gb.size();
        auto build_dim = [&](const std::vector<std::vector<corealg::MultiPoly>>& syz) {
            corealg::FieldMatrix m(Q, syz.size() * d, r * d);
            for (size_t s = 0; s < syz.size(); ++s)
                for (size_t j = 0; j < r; ++j) {
                    if (syz[s][j].is_zero()) continue;
                    auto block = quotient_mult_operator(syz[s][j], gb, col, p.order);
                    for (size_t a = 0; a < d; ++a)
                        for (size_t b = 0; b < d; ++b)
                            m.at(s * d + a, j * d + b) = block.at(a, b);
                }
            return r * d - m.rank();
        };
        CHECK(build_dim(taylor_syzygies(gb)) == build_dim(schreyer_syzygies(gb, p.order)));
    }
}

TEST_CASE("taylor route agrees with the direct module oracle") {
    Domain Q = Domain::rationals();
    // spot-check here; the full sweep is in the acceptance suite
    for (auto [nvars, d] : std::vector<std::pair<size_t, size_t>>{{2, 3}, {2, 4}, {3, 3}}) {
        for (const auto& mi : support::monomial_ideals(nvars, d)) {
            auto p = support::as_ideal_point(mi, Q, MonomialOrder::Degrevlex);
            CHECK(tangent_space_dim(p) == support::tangent_dim_module_oracle(mi, Q));
        }
    }
}

// --- straightening and the Rees path ---------------------------------------

static hilbpts::SurjectionData surj(const Algebra& a,
                                    const std::vector<std::vector<long>>& imgs) {
    hilbpts::SurjectionData s;
    s.target = a;
    Domain dom = a.base.scalar_domain();
    for (const auto& row : imgs) {
        std::vector<Scalar> v;
        for (long x : row) v.push_back(Scalar::of_int(dom, x));
        s.images.push_back(std::move(v));
    }
    return s;
}

TEST_CASE("surjectivity closure detects generation") {
    Algebra kx3 = finalg::truncated_polynomial_algebra(BaseRing::Fp(5), 3);
    CHECK(is_surjective(surj(kx3, {{0, 1, 0}, {0, 0, 0}})));   // x generates
    CHECK(!is_surjective(surj(kx3, {{0, 0, 1}, {0, 0, 0}})));  // x^2 does not
}

TEST_CASE("straightening: already straightened input needs no steps") {
    Algebra kx3 = finalg::truncated_polynomial_algebra(BaseRing::Fp(5), 3);
    auto steps = straighten_coordinates(surj(kx3, {{0, 1, 0}, {0, 0, 1}}));
    CHECK(steps.empty());
}

TEST_CASE("straightening: greedy loop and tail zeroing") {
    Algebra kx3 = finalg::truncated_polynomial_algebra(BaseRing::Fp(5), 3);
    // pi(x1) = 2 (dependent with 1), pi(x2) = x, pi(x3) = x^2
    hilbpts::SurjectionData s = surj(kx3, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto steps = straighten_coordinates(s);
    REQUIRE(steps.size() == 3);
    // endpoints surjective at every step
    Domain dom = kx3.base.scalar_domain();
    hilbpts::SurjectionData cur = s;
    for (const auto& st : steps) {
        CHECK(is_surjective(step_at(kx3, st, Scalar::zero(dom))));
        CHECK(is_surjective(step_at(kx3, st, Scalar::one(dom))));
        cur = step_at(kx3, st, Scalar::one(dom));
    }
    // final state: 1, pi(x1), pi(x2) a basis; pi(x3) = 0
    std::vector<std::vector<Scalar>> cols{finalg::scalars_of_vec(kx3.unit), cur.images[0],
                                          cur.images[1]};
    CHECK(corealg::FieldMatrix::from_columns(dom, cols).rank() == 3);
    for (const auto& c : cur.images[2]) CHECK(c.is_zero());
}

TEST_CASE("straightening a rank-1 target zeroes everything in one step") {
    Algebra k = finalg::base_algebra(BaseRing::Fp(3));
    auto steps = straighten_coordinates(surj(k, {{2}, {1}}));
    REQUIRE(steps.size() == 1);
    auto end = step_at(k, steps[0], Scalar::one(Domain::prime_field(3)));
    for (const auto& im : end.images)
        for (const auto& c : im) CHECK(c.is_zero());
}

TEST_CASE("straightening rejects non-surjective data") {
    Algebra kx3 = finalg::truncated_polynomial_algebra(BaseRing::Fp(5), 3);
    CHECK_THROWS(straighten_coordinates(surj(kx3, {{0, 0, 1}, {0, 0, 0}})));
    // n >= d - 1 precondition
    CHECK_THROWS(straighten_coordinates(surj(kx3, {{0, 1, 0}})));
}

TEST_CASE("rees path lands on the canonical basepoint") {
    Algebra kx3 = finalg::truncated_polynomial_algebra(BaseRing::Fp(5), 3);
    ReesPath path = rees_path_to_basepoint(surj(kx3, {{0, 1, 0}, {0, 0, 1}}));
    Scalar z = Scalar::of_int(Domain::integers(), 0);
    Algebra fiber0 = finalg::specialize_family(path.family, z);
    CHECK(fiber0 == finalg::square_zero_extension(2, kx3.base));
    auto expect = canonical_basepoint_markings(kx3.base, 3, 2);
    for (size_t i = 0; i < path.markings.size(); ++i)
        CHECK(finalg::scalars_of_vec(finalg::specialize_vec(path.markings[i], z)) == expect[i]);

    // identity images on a square-zero extension give a constant family
    Algebra sqz = finalg::square_zero_extension(2, BaseRing::Fp(5));
    ReesPath cpath = rees_path_to_basepoint(surj(sqz, {{0, 1, 0}, {0, 0, 1}}));
    for (const auto& c : cpath.family.mult) CHECK(c.degree() == 0);

    // spanning precondition: 1 and x^2 alone do not span
    CHECK_THROWS(rees_path_to_basepoint(surj(kx3, {{0, 0, 1}, {0, 0, 0}})));
    // order of the spanning images does not matter
    ReesPath swapped = rees_path_to_basepoint(surj(kx3, {{0, 0, 1}, {0, 1, 0}}));
    auto expect2 = canonical_basepoint_markings(kx3.base, 3, 2);
    for (size_t i = 0; i < swapped.markings.size(); ++i)
        CHECK(finalg::scalars_of_vec(finalg::specialize_vec(swapped.markings[i], z)) == expect2[i]);
}

TEST_CASE("endpoint is independent of the input surjection") {
    Algebra kx3 = finalg::truncated_polynomial_algebra(BaseRing::Fp(3), 3);
    Algebra split = finalg::product_algebra(finalg::base_algebra(BaseRing::Fp(3)),
                                            finalg::truncated_polynomial_algebra(BaseRing::Fp(3), 2));
    Scalar z = Scalar::of_int(Domain::integers(), 0);
    std::vector<hilbpts::SurjectionData> inputs{
        surj(kx3, {{0, 1, 0}, {0, 0, 1}, {1, 2, 0}}),
        surj(kx3, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
        surj(split, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
    };
    Scalar one = Scalar::of_int(Domain::integers(), 1);
    std::vector<Algebra> endpoints;
    for (auto& s : inputs) {
        hilbpts::SurjectionData cur = s;
        for (const auto& st : straighten_coordinates(s)) cur = step_at(s.target, st, one);
        ReesPath path = rees_path_to_basepoint(cur);
        Algebra fiber0 = finalg::specialize_family(path.family, z);
        auto expect = canonical_basepoint_markings(s.target.base, 3, 3);
        for (size_t i = 0; i < path.markings.size(); ++i)
            CHECK(finalg::scalars_of_vec(finalg::specialize_vec(path.markings[i], z)) == expect[i]);
        endpoints.push_back(fiber0);
    }
    for (size_t i = 1; i < endpoints.size(); ++i) CHECK(endpoints[i] == endpoints[0]);
}
