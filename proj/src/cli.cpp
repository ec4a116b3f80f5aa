#include "hilbalg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hilbalg/chern.hpp"
#include "hilbalg/gl2.hpp"
#include "hilbalg/groebner.hpp"
#include "hilbalg/json_io.hpp"
#include "hilbalg/surjection.hpp"
#include "hilbalg/tangent.hpp"

namespace hilbcli {

using corealg::Domain;
using corealg::MultiPoly;
using corealg::Scalar;
using finalg::Algebra;
using finalg::BaseRing;
using hilbio::json;

namespace {

json load_json_arg(const std::string& arg) {
    std::ifstream in(arg);
    if (in.good()) {
        json j;
        in >> j;
        return j;
    }
    return json::parse(arg);
}

Domain field_from_flag(const std::string& field) {
    if (field == "Q") return Domain::rationals();
    if (field.rfind("Fp:", 0) == 0) return Domain::prime_field(mpz_class(field.substr(3)));
    throw std::invalid_argument("--field must be Q or Fp:<p>, got \"" + field + "\"");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

hilbpts::IdealPoint ideal_from_flags(const std::string& ideal, const std::string& vars,
                                     const std::string& field, const std::string& order) {
    hilbpts::IdealPoint p;
    p.vars = split_commas(vars);
    if (p.vars.empty()) throw std::invalid_argument("--vars: empty variable list");
    p.order = hilbpts::order_from_name(order);
    Domain dom = field_from_flag(field);
    for (const auto& text : split_commas(ideal))
        p.gens.push_back(MultiPoly::parse(text, p.vars, dom));
    return p;
}

// Primitive idempotents of a decomposed algebra, in the original coordinates.
std::vector<std::vector<Scalar>> primitive_idempotents(const finalg::Decomposition& dec) {
    std::vector<std::vector<Scalar>> out;
    size_t dim = dec.basis.dim;
    size_t off = 0;
    for (const auto& f : dec.factors) {
        finalg::Vec padded(dim, finalg::ring_zero(f.base));
        for (size_t i = 0; i < f.rank; ++i) padded[off + i] = f.unit[i];
        out.push_back(finalg::scalars_of_vec(dec.basis.old_coords(padded)));
        off += f.rank;
    }
    return out;
}

json verify_thm71_payload() {
    charclass::Hilb3Report rep = charclass::verify_hilb3_presentation();
    json j;
    j["generator"] = rep.generator.str();
    j["content"] = rep.coefficient_content.get_str();
    json dec = json::array();
    for (const auto& [p, q] : rep.decomposition)
        dec.push_back(json::array({std::to_string(p), std::to_string(q)}));
    j["decomposition"] = dec;
    json primes = json::array();
    for (long p : rep.primes_verified) primes.push_back(std::to_string(p));
    j["mod_p_nonzero"] = primes;
    j["unique_two_dim_summand"] = rep.unique_two_dim_summand;

    hilbpts::IdealPoint pt;
    pt.vars = {"x", "y"};
    Domain Q = Domain::rationals();
    pt.gens = {MultiPoly::parse("x^2", pt.vars, Q), MultiPoly::parse("x*y", pt.vars, Q),
               MultiPoly::parse("y^2", pt.vars, Q)};
    size_t dim = hilbpts::tangent_space_dim(pt);
    if (dim != 6)
        throw std::logic_error("verify thm7-1: tangent dimension at (x^2,xy,y^2) is " +
                               std::to_string(dim) + ", expected 6");
    j["tangent_dim"] = std::to_string(dim);
    return j;
}

json verify_witnesses_payload() {
    json j;
    Scalar zero = Scalar::of_int(Domain::integers(), 0);
    Scalar one = Scalar::of_int(Domain::integers(), 1);

    {  // three lines: the constructor asserts det, order, and the t=0 fiber
        finalg::ThreeLinesWitness w = finalg::three_lines_witness();
        json tl;
        tl["family"] = hilbio::algebra_to_json(w.family);
        tl["automorphism"] = hilbio::matrix_to_json(w.automorphism, 3, 3);
        Algebra fiber0 = finalg::specialize_family(w.family, zero);
        tl["t0_square_zero"] = (fiber0 == finalg::square_zero_extension(2, BaseRing::Z()));
        if (!tl["t0_square_zero"].get<bool>())
            throw std::logic_error("three lines: t=0 fiber is not the square-zero extension");

        // t=1 fiber over Q: x, y, 1-x-y are the three branches
        Algebra overq(BaseRing::Q().with_t(), 3);
        Domain Q = Domain::rationals();
        for (size_t i = 0; i < w.family.unit.size(); ++i)
            overq.unit[i] = w.family.unit[i].map_domain(Q);
        for (size_t i = 0; i < w.family.mult.size(); ++i)
            overq.mult[i] = w.family.mult[i].map_domain(Q);
        Algebra fiber1 = finalg::specialize_family(overq, one);
        finalg::Decomposition dec = finalg::local_decomposition(fiber1);
        tl["t1_branches"] = std::to_string(dec.factors.size());
        if (dec.factors.size() != 3)
            throw std::logic_error("three lines: t=1 fiber does not have three branches");
        auto idems = primitive_idempotents(dec);
        // automorphism at t=1 over Q
        finalg::Vec cq;
        for (const auto& e : w.automorphism)
            cq.push_back(finalg::specialize_el(e.map_domain(Q), Scalar::one(Q)));
        auto apply = [&](const std::vector<Scalar>& v) {
            std::vector<Scalar> r(3, Scalar::zero(Q));
            for (size_t i = 0; i < 3; ++i)
                for (size_t k = 0; k < 3; ++k)
                    r[i] = r[i] + cq[i * 3 + k].constant_value() * v[k];
            return r;
        };
        std::vector<size_t> perm(3, 3);
        for (size_t i = 0; i < 3; ++i) {
            auto img = apply(idems[i]);
            for (size_t k = 0; k < 3; ++k)
                if (img == idems[k]) perm[i] = k;
        }
        bool is_cycle = perm[0] != 3 && perm[1] != 3 && perm[2] != 3;
        if (is_cycle) {
            // a single 3-cycle: no fixed point, and applying three times is id
            for (size_t i = 0; i < 3; ++i)
                if (perm[i] == i) is_cycle = false;
            for (size_t i = 0; i < 3 && is_cycle; ++i)
                if (perm[perm[perm[i]]] != i) is_cycle = false;
        }
        if (!is_cycle) throw std::logic_error("three lines: c does not permute the branches cyclically");
        tl["t1_cyclic_permutation"] = true;
        j["three_lines"] = tl;
    }

    {  // robber
        finalg::RobberWitness w = finalg::robber_witness();
        json rb;
        rb["family"] = hilbio::algebra_to_json(w.family);
        Algebra fiber0 = finalg::specialize_family(w.family, zero);
        rb["t0_dual_numbers"] =
            (fiber0 == finalg::truncated_polynomial_algebra(BaseRing::Z(), 2));
        if (!rb["t0_dual_numbers"].get<bool>())
            throw std::logic_error("robber: t=0 fiber is not Z[x]/x^2");
        Algebra split(BaseRing::Z(), 2);
        split.unit = finalg::vec_unit(split.base, 2, 0);
        split.c(0, 0, 0) = finalg::ring_one(split.base);
        split.c(0, 1, 1) = finalg::ring_one(split.base);
        split.c(1, 0, 1) = finalg::ring_one(split.base);
        split.c(1, 1, 1) = finalg::ring_one(split.base);  // x^2 = x
        Algebra fiber1 = finalg::specialize_family(w.family, one);
        rb["t1_split_idempotent"] = (fiber1 == split);
        if (!rb["t1_split_idempotent"].get<bool>())
            throw std::logic_error("robber: t=1 fiber does not split off the idempotent x");
        // marking specializes to an algebra map in both fibers
        for (const Scalar& t0 : {zero, one}) {
            finalg::AlgebraHom h;
            h.source = finalg::specialize_family(w.family, t0);
            h.target = finalg::base_algebra(BaseRing::Z());
            for (const auto& e : w.marking.matrix) h.matrix.push_back(finalg::specialize_el(e, t0));
            auto rep = finalg::check_algebra_hom(h);
            if (!rep.ok)
                throw std::logic_error("robber: marking fails at a fiber: " + rep.first_failure);
        }
        rb["marking_valid_in_fibers"] = true;
        j["robber"] = rb;
    }
    return j;
}

std::string render_kv_table(const json& j) {
    size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
    std::ostringstream out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        out << it.key() << std::string(width - it.key().size() + 2, ' ');
        if (it.value().is_string()) out << it.value().get<std::string>();
        else out << it.value().dump();
        out << "\n";
    }
    return out.str();
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;

    CLI::App app{"exact computations for finite algebras, Hilbert scheme points, "
                 "Chern classes, and codimension counts"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable output");

    // verify
    auto* verify = app.add_subcommand("verify", "run a built-in verification");
    std::string verify_what;
    verify->add_option("check", verify_what, "thm7-1 | witnesses")->required();

    // chern
    auto* chern = app.add_subcommand("chern", "Chern class of a bundle expression");
    std::string expr_text, gen_list;
    long chern_k = 0;
    chern->add_option("--expr", expr_text, "e.g. \"sym(3,V) * dual(det(V))\"")->required();
    chern->add_option("--gen", gen_list, "generators with ranks, e.g. V:2 or V:2,W:1")->required();
    chern->add_option("--k", chern_k, "degree")->required();

    // decompose-gl2
    auto* dgl2 = app.add_subcommand("decompose-gl2", "decompose a GL2 character");
    std::string char_text;
    dgl2->add_option("--char", char_text, "symmetric Laurent polynomial in a, b")->required();

    // tangent / groebner
    std::string ideal_text, vars_text, field_text, order_text = "degrevlex";
    auto* tangent = app.add_subcommand("tangent", "tangent space dimension of a Hilbert point");
    auto* groeb = app.add_subcommand("groebner", "reduced Groebner basis");
    for (auto* sub : {tangent, groeb}) {
        sub->add_option("--ideal", ideal_text, "comma-separated generators")->required();
        sub->add_option("--vars", vars_text, "comma-separated variables")->required();
        sub->add_option("--field", field_text, "Q | Fp:<p>")->required();
        sub->add_option("--order", order_text, "degrevlex | lex");
    }

    // classify
    auto* classify = app.add_subcommand("classify", "degree-3 isotype of an algebra over F_p");
    std::string algebra_arg;
    long classify_p = 0;
    classify->add_option("--algebra", algebra_arg, "algebra JSON (inline or file)")->required();
    classify->add_option("--p", classify_p, "expected characteristic (consistency check)");

    // rees
    auto* rees = app.add_subcommand("rees", "Rees degeneration family of an algebra");
    std::string rees_algebra;
    rees->add_option("--algebra", rees_algebra, "algebra JSON (inline or file)")->required();

    // specialize
    auto* spec = app.add_subcommand("specialize", "specialize a family at t");
    std::string family_arg, t_arg;
    spec->add_option("--family", family_arg, "family JSON (inline or file)")->required();
    spec->add_option("--t", t_arg, "value of t in the inner base ring")->required();

    // fiber-product
    auto* fprod = app.add_subcommand("fiber-product", "B x_D C along f: B->D, g: C->D");
    std::string b_arg, c_arg, dmaps_arg;
    fprod->add_option("--b", b_arg, "algebra JSON for B")->required();
    fprod->add_option("--c", c_arg, "algebra JSON for C")->required();
    fprod->add_option("--d-maps", dmaps_arg, "JSON {\"d\": algebra, \"f\": [[..]], \"g\": [[..]]}")
        ->required();

    // bounds
    auto* bnd = app.add_subcommand("bounds", "connectivity report for Hilb_d(A^n)");
    long bn = 0, bd = 0;
    bnd->add_option("--n", bn)->required();
    bnd->add_option("--d", bd)->required();

    // count-nonsurj
    auto* count = app.add_subcommand("count-nonsurj", "count non-surjective maps over F_p");
    long cn = 0, cr = 2, cp = 0;
    bool algebra_homs = false;
    count->add_option("--n", cn)->required();
    count->add_option("--r", cr);
    count->add_option("--p", cp)->required();
    count->add_flag("--algebra-homs", algebra_homs,
                    "count algebra homs to F_p[x,y]/(x,y)^2 instead of linear maps");

    // path-to-basepoint
    auto* path = app.add_subcommand("path-to-basepoint",
                                    "straighten a surjection and follow the Rees path");
    std::string path_algebra, images_arg;
    path->add_option("--algebra", path_algebra, "target algebra JSON (inline or file)")->required();
    path->add_option("--images", images_arg, "JSON array of coordinate vectors")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        result.ok = false;
        result.exit_code = 2;
        std::ostringstream out;
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            result.ok = true;
            result.exit_code = 0;
        } else {
            out << "usage error: " << e.what() << "\n";
        }
        result.human_text = out.str();
        result.payload = json{{"error", e.what()}};
        return result;
    }

    try {
        if (verify->parsed()) {
            if (verify_what == "thm7-1") {
                result.payload = verify_thm71_payload();
                result.human_text = render_kv_table(result.payload);
            } else if (verify_what == "witnesses") {
                result.payload = verify_witnesses_payload();
                result.human_text = "three_lines: ok\nrobber: ok\n";
            } else {
                result.ok = false;
                result.exit_code = 2;
                result.payload = json{{"error", "unknown check \"" + verify_what + "\""}};
                result.human_text = "usage error: unknown check \"" + verify_what +
                                    "\" (thm7-1 | witnesses)\n";
                return result;
            }
        } else if (chern->parsed()) {
            std::vector<std::pair<std::string, size_t>> gens;
            for (const auto& g : split_commas(gen_list)) {
                auto colon = g.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("--gen entries must look like V:2");
                gens.emplace_back(g.substr(0, colon), std::stoul(g.substr(colon + 1)));
            }
            charclass::ChernRing ring(gens);
            charclass::ExprPtr e = charclass::parse_bundle_expr(expr_text);
            if (chern_k < 0) throw std::invalid_argument("--k must be nonnegative");
            MultiPoly ck = ring.chern_class(e, static_cast<size_t>(chern_k));
            result.payload = json{{"expr", charclass::expr_str(e)},
                                  {"rank", std::to_string(ring.rank_of(e))},
                                  {"k", std::to_string(chern_k)},
                                  {"chern_class", ck.str()}};
            result.human_text = "c_" + std::to_string(chern_k) + "(" + expr_text + ") = " + ck.str() + "\n";
        } else if (dgl2->parsed()) {
            MultiPoly chi = charclass::parse_gl2_character(char_text);
            auto weights = charclass::gl2_decompose(chi);
            bool recon = charclass::gl2_reconstruct(weights) == chi;
            if (!recon) throw std::logic_error("decompose-gl2: reconstruction failed");
            json w = json::array();
            long total_dim = 0;
            for (const auto& [p, q] : weights) {
                w.push_back(json::array({std::to_string(p), std::to_string(q)}));
                total_dim += p - q + 1;
            }
            result.payload = json{{"weights", w},
                                  {"dimension", std::to_string(total_dim)},
                                  {"reconstruction_ok", recon}};
            std::ostringstream out;
            out << "weights:";
            for (const auto& [p, q] : weights) out << " (" << p << "," << q << ")";
            out << "\ndimension: " << total_dim << "\n";
            result.human_text = out.str();
        } else if (tangent->parsed()) {
            hilbpts::IdealPoint p = ideal_from_flags(ideal_text, vars_text, field_text, order_text);
            auto gb = hilbpts::groebner_basis(p);
            auto col = hilbpts::colength_of_basis(gb, p.vars, p.order);
            size_t dim = hilbpts::tangent_space_dim(p);
            result.payload = json{{"tangent_dim", std::to_string(dim)},
                                  {"colength", std::to_string(col.d)},
                                  {"order", hilbpts::order_name(p.order)}};
            result.human_text = "tangent dimension " + std::to_string(dim) + " (colength " +
                                std::to_string(col.d) + ")\n";
        } else if (groeb->parsed()) {
            hilbpts::IdealPoint p = ideal_from_flags(ideal_text, vars_text, field_text, order_text);
            auto gb = hilbpts::groebner_basis(p);
            json basis = json::array();
            std::ostringstream out;
            for (const auto& g : gb) {
                basis.push_back(g.str());
                out << g.str() << "\n";
            }
            result.payload = json{{"basis", basis}, {"order", hilbpts::order_name(p.order)}};
            result.human_text = out.str();
        } else if (classify->parsed()) {
            Algebra a = hilbio::algebra_from_json(load_json_arg(algebra_arg));
            if (classify_p > 0 &&
                (a.base.leaf != BaseRing::Leaf::Fp || a.base.p != classify_p))
                throw std::invalid_argument("classify: --p does not match the algebra base");
            finalg::IsotypeReport rep = finalg::classify_degree3(a);
            result.payload = hilbio::isotype_to_json(rep);
            result.human_text = rep.str() + "\n";
        } else if (rees->parsed()) {
            Algebra a = hilbio::algebra_from_json(load_json_arg(rees_algebra));
            finalg::ReesFamily rf = finalg::rees_family(a);
            result.payload = json{
                {"family", hilbio::algebra_to_json(rf.family)},
                {"base_change", hilbio::matrix_to_json(rf.basis.fwd, a.rank, a.rank)}};
            result.human_text = "rees family over " + rf.family.base.name() + ", rank " +
                                std::to_string(rf.family.rank) + "\n";
        } else if (spec->parsed()) {
            Algebra fam = hilbio::algebra_from_json(load_json_arg(family_arg));
            if (!fam.base.over_t)
                throw std::invalid_argument("specialize: the algebra is not a family (base has no t)");
            Scalar t0 = Scalar::parse(fam.base.scalar_domain(), t_arg);
            Algebra a = finalg::specialize_family(fam, t0);
            auto ax = finalg::check_algebra_axioms(a);
            if (!ax.ok) throw std::logic_error("specialize: fiber fails axioms: " + ax.first_failure);
            result.payload = json{{"algebra", hilbio::algebra_to_json(a)}, {"t", t0.str()}};
            result.human_text = "fiber at t = " + t0.str() + " over " + a.base.name() + "\n";
        } else if (fprod->parsed()) {
            Algebra B = hilbio::algebra_from_json(load_json_arg(b_arg));
            Algebra C = hilbio::algebra_from_json(load_json_arg(c_arg));
            json dm = load_json_arg(dmaps_arg);
            Algebra D = hilbio::algebra_from_json(dm.at("d"));
            finalg::AlgebraHom f{B, D, hilbio::matrix_from_json(dm.at("f"), B.base, D.rank, B.rank)};
            finalg::AlgebraHom g{C, D, hilbio::matrix_from_json(dm.at("g"), C.base, D.rank, C.rank)};
            finalg::FiberProductResult fp = finalg::fiber_product(f, g);
            result.payload = json{
                {"product", hilbio::algebra_to_json(fp.product)},
                {"rank", std::to_string(fp.product.rank)},
                {"to_b", hilbio::matrix_to_json(fp.to_b.matrix, B.rank, fp.product.rank)},
                {"to_c", hilbio::matrix_to_json(fp.to_c.matrix, C.rank, fp.product.rank)}};
            result.human_text = "fiber product of rank " + std::to_string(fp.product.rank) + "\n";
        } else if (bnd->parsed()) {
            bounds::ConnectivityReport rep = bounds::connectivity_report(bn, bd);
            result.payload = hilbio::connectivity_to_json(rep);
            result.human_text = render_kv_table(result.payload);
        } else if (count->parsed()) {
            bounds::CountReport rep = algebra_homs ? bounds::count_nonsurjective_algebra_homs(cn, cp)
                                                   : bounds::count_nonsurjective_linear(cn, cr, cp);
            result.payload = hilbio::count_to_json(rep);
            result.human_text = render_kv_table(result.payload);
        } else if (path->parsed()) {
            Algebra a = hilbio::algebra_from_json(load_json_arg(path_algebra));
            json im = load_json_arg(images_arg);
            hilbpts::SurjectionData s;
            s.target = a;
            Domain dom = a.base.scalar_domain();
            for (const auto& row : im) {
                std::vector<Scalar> v;
                for (const auto& e : row) v.push_back(Scalar::parse(dom, e.get<std::string>()));
                if (v.size() != a.rank)
                    throw std::invalid_argument("path-to-basepoint: image length != rank");
                s.images.push_back(std::move(v));
            }
            auto steps = hilbpts::straighten_coordinates(s);
            hilbpts::SurjectionData cur = s;
            Scalar one = Scalar::one(dom);
            for (const auto& st : steps) cur = hilbpts::step_at(a, st, one);
            hilbpts::ReesPath rp = hilbpts::rees_path_to_basepoint(cur);

            Algebra fiber0 =
                finalg::specialize_family(rp.family, Scalar::of_int(Domain::integers(), 0));
            bool basepoint =
                fiber0 == finalg::square_zero_extension(a.rank - 1, a.base);
            auto expect = hilbpts::canonical_basepoint_markings(a.base, a.rank, s.images.size());
            for (size_t i = 0; i < rp.markings.size() && basepoint; ++i) {
                auto got = finalg::scalars_of_vec(
                    finalg::specialize_vec(rp.markings[i], Scalar::of_int(Domain::integers(), 0)));
                if (got != expect[i]) basepoint = false;
            }
            if (!basepoint) throw std::logic_error("path-to-basepoint: endpoint is not canonical");

            json jsteps = json::array();
            for (const auto& st : steps) {
                json jm = json::array();
                for (const auto& row : st.images_t) {
                    json jr = json::array();
                    for (const auto& e : row) jr.push_back(e.str());
                    jm.push_back(jr);
                }
                jsteps.push_back(json{{"note", st.note}, {"images_t", jm}});
            }
            json jmark = json::array();
            for (const auto& m : rp.markings) {
                json jr = json::array();
                for (const auto& e : m) jr.push_back(e.str());
                jmark.push_back(jr);
            }
            result.payload = json{{"steps", jsteps},
                                  {"family", hilbio::algebra_to_json(rp.family)},
                                  {"markings", jmark},
                                  {"basepoint_canonical", basepoint}};
            result.human_text = std::to_string(steps.size()) +
                                " straightening steps; endpoint is the canonical basepoint\n";
        }
    } catch (const std::exception& e) {
        result.ok = false;
        result.exit_code = 1;
        result.payload = json{{"error", e.what()}};
        result.human_text = std::string("error: ") + e.what() + "\n";
        return result;
    }
    return result;
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool json_out = false;
    for (const auto& a : args) json_out |= (a == "--json");
    CommandResult r = run(args);
    if (json_out) {
        json out = r.payload;
        out["status"] = r.ok ? "ok" : "error";
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << r.human_text;
    }
    return r.exit_code;
}

}  // namespace hilbcli
