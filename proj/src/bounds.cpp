#include "hilbalg/bounds.hpp"

#include <stdexcept>
#include <vector>

namespace bounds {

long codim_nonsurjective_linear(long n, long r) {
    if (r < 1 || n < r)
        throw std::invalid_argument("codim_nonsurjective_linear: requires n >= r >= 1 (got n = " +
                                    std::to_string(n) + ", r = " + std::to_string(r) +
                                    "; for n < r every map is non-surjective)");
    return n - r + 1;
}

long hilb_complement_codim(long n, long d) {
    if (d < 1 || n < d)
        throw std::invalid_argument("hilb_complement_codim: requires n >= d >= 1 (got n = " +
                                    std::to_string(n) + ", d = " + std::to_string(d) + ")");
    return n - d + 2;
}

ConnectivityReport connectivity_report(long n, long d) {
    if (d < 0 || n < d)
        throw std::invalid_argument("connectivity_report: requires n >= d >= 0 (got n = " +
                                    std::to_string(n) + ", d = " + std::to_string(d) + ")");
    ConnectivityReport r;
    r.n = n;
    r.d = d;
    r.complex_connectivity = 2 * n - 2 * d + 2;
    r.real_connectivity = n - d;
    r.suspension_a1_connectivity = n - d + 1;
    r.very_effective_index = n - d + 2;
    r.motivic_weight_iso_bound = n - d + 1;
    return r;
}

namespace {

mpz_class mpz_pow(long base, long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

void check_prime(long p) {
    mpz_class z(p);
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("count: p = " + std::to_string(p) + " is not prime");
}

// rank of an r x n matrix over F_p; rows below the pivot are rescaled by the
// pivot instead of inverting it, which leaves the rank unchanged
size_t fp_rank(std::vector<unsigned long>& m, size_t r, size_t n, unsigned long p) {
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < r; ++col) {
        size_t piv = rank;
        while (piv < r && m[piv * n + col] % p == 0) ++piv;
        if (piv == r) continue;
        for (size_t j = 0; j < n; ++j) std::swap(m[rank * n + j], m[piv * n + j]);
        unsigned long a = m[rank * n + col] % p;
        for (size_t i = rank + 1; i < r; ++i) {
            unsigned long f = m[i * n + col] % p;
            if (!f) continue;
            for (size_t j = col; j < n; ++j)
                m[i * n + j] = (a * m[i * n + j] % p + p - f * m[rank * n + j] % p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

CountReport count_nonsurjective_linear(long n, long r, long p) {
    check_prime(p);
    if (n < 1 || r < 1) throw std::invalid_argument("count_nonsurjective_linear: n, r >= 1 required");
    mpz_class total = mpz_pow(p, n * r);
    if (total > 10000000)
        throw std::invalid_argument("count_nonsurjective_linear: p^(n*r) exceeds the 10^7 budget");

    const size_t N = static_cast<size_t>(n), R = static_cast<size_t>(r);
    const unsigned long up = static_cast<unsigned long>(p);
    const unsigned long first_rows = mpz_pow(p, n).get_ui();
    const unsigned long rest_count = mpz_pow(p, n * (r - 1)).get_ui();

    // The outer loop shards on the first matrix row; each shard contributes an
    // independent partial count and the total is their (commutative) sum.
    mpz_class non_surjective = 0;
    std::vector<unsigned long> mat(R * N), work(R * N);
    for (unsigned long shard = 0; shard < first_rows; ++shard) {
        unsigned long partial = 0;
        unsigned long v = shard;
        for (size_t j = 0; j < N; ++j) {
            mat[j] = v % up;
            v /= up;
        }
        for (unsigned long rest = 0; rest < rest_count; ++rest) {
            unsigned long w = rest;
            for (size_t i = 1; i < R; ++i)
                for (size_t j = 0; j < N; ++j) {
                    mat[i * N + j] = w % up;
                    w /= up;
                }
            work = mat;
            if (fp_rank(work, R, N, up) < R) ++partial;
        }
        non_surjective += partial;
    }

    mpz_class surjective = 1;
    for (long i = 0; i < r; ++i) surjective *= mpz_pow(p, n) - mpz_pow(p, i);

    CountReport rep;
    rep.n = n;
    rep.second = r;
    rep.p = p;
    rep.total = total;
    rep.non_surjective = non_surjective;
    rep.expected_dimension = n * r - (n - r + 1);
    rep.formula_value = total - surjective;
    if (rep.non_surjective != rep.formula_value)
        throw std::logic_error("count_nonsurjective_linear: enumeration disagrees with the formula");
    return rep;
}

CountReport count_nonsurjective_algebra_homs(long n, long p) {
    check_prime(p);
    if (n < 1) throw std::invalid_argument("count_nonsurjective_algebra_homs: n >= 1 required");
    mpz_class total = mpz_pow(p, 3 * n);
    if (total > 10000000)
        throw std::invalid_argument("count_nonsurjective_algebra_homs: p^(3n) exceeds the 10^7 budget");

    const size_t N = static_cast<size_t>(n);
    const unsigned long up = static_cast<unsigned long>(p);
    // A hom is an n-tuple of elements alpha + beta*x + gamma*y of
    // F_p[x,y]/(x,y)^2; it is surjective iff the (beta, gamma) parts span F_p^2.
    const unsigned long first = up * up * up;
    const unsigned long rest_count = mpz_pow(p, 3 * (n - 1)).get_ui();

    mpz_class non_surjective = 0;
    std::vector<unsigned long> lin(2 * N), work(2 * N);
    for (unsigned long shard = 0; shard < first; ++shard) {
        unsigned long partial = 0;
        // element 0: digits (alpha, beta, gamma); alpha does not affect spanning
        lin[0 * N + 0] = shard / up % up;        // beta_0
        lin[1 * N + 0] = shard / (up * up) % up; // gamma_0
        for (unsigned long rest = 0; rest < rest_count; ++rest) {
            unsigned long w = rest;
            for (size_t i = 1; i < N; ++i) {
                w /= up;  // alpha_i
                lin[0 * N + i] = w % up;
                w /= up;
                lin[1 * N + i] = w % up;
                w /= up;
            }
            work = lin;
            if (fp_rank(work, 2, N, up) < 2) ++partial;
        }
        non_surjective += partial;
    }

    mpz_class surj_linear = (mpz_pow(p, n) - 1) * (mpz_pow(p, n) - p);
    CountReport rep;
    rep.n = n;
    rep.second = 3;
    rep.p = p;
    rep.algebra_homs = true;
    rep.total = total;
    rep.non_surjective = non_surjective;
    rep.expected_dimension = 3 * n - (n - 1);
    rep.formula_value = mpz_pow(p, n) * (mpz_pow(p, 2 * n) - surj_linear);
    if (rep.non_surjective != rep.formula_value)
        throw std::logic_error("count_nonsurjective_algebra_homs: enumeration disagrees with the formula");
    return rep;
}

}  // namespace bounds
