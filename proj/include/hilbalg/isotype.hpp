#pragma once

#include "hilbalg/algebra.hpp"

namespace finalg {

/// One local factor in an isotype report: residue field degree over F_p and
/// the Hilbert function of the maximal ideal, as dimensions over the residue
/// field (so it always starts with 1).
struct FactorReport {
    size_t residue_degree = 0;
    std::vector<size_t> hilbert;

    bool operator==(const FactorReport& o) const {
        return residue_degree == o.residue_degree && hilbert == o.hilbert;
    }
    bool operator<(const FactorReport& o) const {
        if (residue_degree != o.residue_degree) return residue_degree < o.residue_degree;
        return hilbert < o.hilbert;
    }
};

struct IsotypeReport {
    std::vector<FactorReport> factors;  // sorted canonically
    bool lci = true;                    // degree <= 3 criterion

    bool operator==(const IsotypeReport& o) const {
        return factors == o.factors && lci == o.lci;
    }
    std::string str() const;
};

struct Decomposition {
    std::vector<Algebra> factors;
    BaseChange basis;  // conjugate(input, basis) is block diagonal in factor order
};

/// Orthogonal-idempotent decomposition into local factors. Over F_p (rank <= 6,
/// p^rank <= 10^6) by exhaustive idempotent search, verifying that each factor
/// is local (every element a unit or nilpotent). Over Q (rank <= 3) by
/// splitting minimal polynomials of basis vectors at rational roots.
Decomposition local_decomposition(const Algebra& a);

/// Local decomposition plus per-factor residue degrees and Hilbert functions;
/// the lci flag is false exactly for the square-zero local algebra with
/// dim m/m^2 = 2, the unique non-lci isotype in degree 3.
IsotypeReport classify_degree3(const Algebra& a);

}  // namespace finalg
