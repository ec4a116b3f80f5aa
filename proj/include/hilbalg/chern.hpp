#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "hilbalg/multipoly.hpp"

namespace charclass {

using corealg::Domain;
using corealg::MultiPoly;
using corealg::Scalar;

/// Formal vector-bundle expression over named generators.
struct BundleExpr;
using ExprPtr = std::shared_ptr<const BundleExpr>;

struct BundleExpr {
    enum class Kind { Generator, Dual, Det, Sum, Tensor, Sym, Wedge };
    Kind kind;
    std::string name;  // Generator
    int m = 0;         // Sym / Wedge
    ExprPtr left, right;
};

ExprPtr make_generator(const std::string& name);
ExprPtr make_dual(ExprPtr e);
ExprPtr make_det(ExprPtr e);
ExprPtr make_sum(ExprPtr a, ExprPtr b);
ExprPtr make_tensor(ExprPtr a, ExprPtr b);
ExprPtr make_sym(int m, ExprPtr e);
ExprPtr make_wedge(int m, ExprPtr e);
std::string expr_str(const ExprPtr& e);

/// Integer linear form in the root variables.
using RootForm = std::vector<long>;

/// Splitting-principle engine for CH*(BGL_n) = Z[c_1..c_n]: the declared
/// generators are assigned disjoint blocks of the Chern roots a, b, c, ...
/// with n the total rank.
class ChernRing {
public:
    explicit ChernRing(std::vector<std::pair<std::string, size_t>> generators);

    size_t total_rank() const { return n_; }
    const std::vector<std::string>& root_vars() const { return root_vars_; }
    const std::vector<std::string>& chern_vars() const { return chern_vars_; }

    size_t rank_of(const ExprPtr& e) const;
    /// The multiset of Chern roots of the expression.
    std::vector<RootForm> chern_roots(const ExprPtr& e) const;
    /// k-th elementary symmetric polynomial of a root multiset, over the roots.
    MultiPoly elementary_symmetric(const std::vector<RootForm>& roots, size_t k) const;
    /// Rewrites a symmetric polynomial in the roots as a polynomial in
    /// c_1..c_n (the fundamental theorem of symmetric polynomials).
    MultiPoly elementary_reduce(const MultiPoly& symmetric) const;
    /// c_k(E) in Z[c_1..c_n].
    MultiPoly chern_class(const ExprPtr& e, size_t k) const;
    /// Substitutes c_i -> e_i(roots); right inverse of elementary_reduce.
    MultiPoly expand_in_roots(const MultiPoly& chern_poly) const;
    /// The character of the expression: sum of monomials over the roots
    /// (Laurent, integer coefficients).
    MultiPoly character(const ExprPtr& e) const;

    MultiPoly parse_chern(const std::string& text) const;

private:
    MultiPoly form_poly(const RootForm& f) const;

    std::vector<std::pair<std::string, size_t>> gens_;
    size_t n_;
    std::vector<std::string> root_vars_;
    std::vector<std::string> chern_vars_;
};

/// gcd of the integer coefficients (0 for the zero polynomial).
mpz_class content(const MultiPoly& p);
bool nonzero_mod_p(const MultiPoly& p, const mpz_class& prime);

/// Grammar: generators by name; sym(m,E), wedge(m,E), dual(E), det(E),
/// E + E, E * E, parentheses.
ExprPtr parse_bundle_expr(const std::string& text);

struct Hilb3Report {
    MultiPoly generator;  // c_4 of Sym^3(V) (x) det(V)^* in Z[c1,c2]
    mpz_class coefficient_content;
    std::vector<long> primes_verified;
    std::vector<std::pair<int, int>> decomposition;  // GL2 weights of the tangent character
    bool unique_two_dim_summand = false;
};

/// Recomputes the rank-2 Chow presentation data: the degree-4 generator
/// equals c2*(9*c2 - 2*c1^2), has content 1 (hence is nonzero mod every
/// prime), is checked explicitly mod 2, 3, 5, 7, and the tangent character
/// decomposes with a unique 2-dimensional summand.
Hilb3Report verify_hilb3_presentation();

}  // namespace charclass
