#pragma once

#include <map>
#include <vector>

#include "hilbalg/scalar.hpp"

namespace corealg {

using Exponents = std::vector<int>;

inline long total_degree(const Exponents& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

/// Canonical term order used for storage and printing: total degree
/// ascending, ties broken lexicographically descending on exponent vectors.
struct CanonicalTermLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a > b;  // lexicographic descending
    }
};

/// Sparse multivariate polynomial with exact coefficients. Negative exponents
/// are permitted only when the Laurent flag is set.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Scalar, CanonicalTermLess>;

    MultiPoly() : dom_(Domain::integers()) {}
    MultiPoly(std::vector<std::string> vars, Domain dom, bool laurent = false)
        : vars_(std::move(vars)), dom_(std::move(dom)), laurent_(laurent) {}

    static MultiPoly constant(const std::vector<std::string>& vars, const Scalar& c,
                              bool laurent = false);
    static MultiPoly variable(const std::vector<std::string>& vars, const Domain& dom,
                              size_t index, bool laurent = false);
    static MultiPoly parse(const std::string& text, const std::vector<std::string>& vars,
                           const Domain& dom, bool laurent = false);

    const std::vector<std::string>& vars() const { return vars_; }
    const Domain& domain() const { return dom_; }
    bool laurent() const { return laurent_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant coefficient (zero if absent); throws if non-constant terms exist.
    Scalar constant_value() const;
    long degree() const;  // max total degree, 0 for the zero polynomial

    /// Adds c * x^e to the polynomial, dropping the term if it cancels.
    void add_term(const Exponents& e, const Scalar& c);
    Scalar coefficient(const Exponents& e) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Scalar& c) const;
    MultiPoly pow(unsigned long e) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Substitutes variable `index` := value; the variable list is unchanged.
    MultiPoly substitute(size_t index, const Scalar& value) const;
    /// Applies a permutation of the variables: new exponent of slot perm[i] = old of i.
    MultiPoly permute_vars(const std::vector<size_t>& perm) const;
    /// Moves the coefficients to another domain (e.g. reduce mod p).
    MultiPoly map_domain(const Domain& d) const;
    /// Same polynomial viewed in a renamed/extended variable list; `slot[i]`
    /// is the position of old variable i in the new list.
    MultiPoly reindex(const std::vector<std::string>& new_vars,
                      const std::vector<size_t>& slot) const;

    std::string str() const;

private:
    void check_compatible(const MultiPoly& o, const char* op) const;

    std::vector<std::string> vars_;
    Domain dom_;
    bool laurent_ = false;
    TermMap terms_;
};

}  // namespace corealg
