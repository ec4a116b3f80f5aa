#pragma once

#include <gmpxx.h>
#include <string>

namespace bounds {

/// Connectivity and effectivity bounds for Hilb_d(A^n) -> Hilb_d(A^infty),
/// all affine in (n, d); requires n >= d >= 0.
struct ConnectivityReport {
    long n = 0, d = 0;
    long complex_connectivity = 0;        // 2n - 2d + 2
    long real_connectivity = 0;           // n - d
    long suspension_a1_connectivity = 0;  // n - d + 1
    long very_effective_index = 0;        // n - d + 2
    long motivic_weight_iso_bound = 0;    // n - d + 1
};

/// Codimension of the non-surjective maps k^n -> k^r inside the nr-dimensional
/// space of all linear maps; requires n >= r >= 1.
long codim_nonsurjective_linear(long n, long r);

/// Fiberwise codimension bound of the non-embedding locus, n - d + 2; sharp at
/// the square-zero algebra. Requires n >= d >= 1.
long hilb_complement_codim(long n, long d);

ConnectivityReport connectivity_report(long n, long d);

/// Exact enumeration report over F_p.
struct CountReport {
    long n = 0;
    long second = 0;  // r (linear) or d = 3 (algebra homs)
    long p = 0;
    bool algebra_homs = false;
    mpz_class total;
    mpz_class non_surjective;
    long expected_dimension = 0;
    mpz_class formula_value;  // closed-form count of non-surjective maps
};

/// Counts non-surjective linear maps F_p^n -> F_p^r by exhaustive enumeration
/// (sharded on the first matrix row) and cross-checks the closed formula
/// p^{nr} - prod_{i<r} (p^n - p^i). Requires p^{nr} <= 10^7.
CountReport count_nonsurjective_linear(long n, long r, long p);

/// Counts algebra homomorphisms F_p[x_1..x_n] -> F_p[x,y]/(x,y)^2 that fail to
/// be surjective; such a map is surjective iff the induced linear map to the
/// rank-2 quotient is. Requires p^{3n} <= 10^7.
CountReport count_nonsurjective_algebra_homs(long n, long p);

}  // namespace bounds
