#include "hilbalg/isotype.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace finalg {

std::string IsotypeReport::str() const {
    std::ostringstream out;
    out << (lci ? "lci" : "non-lci");
    for (const auto& f : this->factors) {
        out << " [deg " << f.residue_degree << "; HF";
        for (size_t h : f.hilbert) out << " " << h;
        out << "]";
    }
    return out.str();
}

namespace {

// Structure constants over F_p with machine words, for exhaustive searches.
struct SmallFp {
    unsigned long p = 2;
    size_t d = 0;
    std::vector<unsigned long> unit;  // d
    std::vector<unsigned long> c;     // d^3

    unsigned long cc(size_t i, size_t j, size_t k) const { return c[(i * d + j) * d + k]; }

    std::vector<unsigned long> mul(const std::vector<unsigned long>& x,
                                   const std::vector<unsigned long>& y) const {
        std::vector<unsigned long> r(d, 0);
        for (size_t i = 0; i < d; ++i) {
            if (!x[i]) continue;
            for (size_t j = 0; j < d; ++j) {
                if (!y[j]) continue;
                unsigned long xy = (x[i] * y[j]) % p;
                for (size_t k = 0; k < d; ++k) {
                    unsigned long v = cc(i, j, k);
                    if (v) r[k] = (r[k] + xy * v) % p;
                }
            }
        }
        return r;
    }

    std::vector<unsigned long> pow(std::vector<unsigned long> x, unsigned long e) const {
        std::vector<unsigned long> r = unit;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
};

SmallFp small_of(const Algebra& a) {
    SmallFp s;
    s.p = mpz_get_ui(a.base.p.get_mpz_t());
    s.d = a.rank;
    s.unit.resize(s.d);
    for (size_t i = 0; i < s.d; ++i)
        s.unit[i] = mpz_get_ui(a.unit[i].constant_value().num().get_mpz_t());
    s.c.resize(s.d * s.d * s.d);
    for (size_t i = 0; i < s.c.size(); ++i)
        s.c[i] = mpz_get_ui(a.mult[i].constant_value().num().get_mpz_t());
    return s;
}

// Gaussian elimination workspace over F_p for span/rank bookkeeping.
struct FpSpan {
    unsigned long p;
    size_t n;
    std::vector<std::vector<unsigned long>> rows;  // row echelon, pivot = first nonzero

    explicit FpSpan(unsigned long p_, size_t n_) : p(p_), n(n_) {}

    static unsigned long inv_mod(unsigned long a, unsigned long p) {
        long t = 0, nt = 1;
        long r = static_cast<long>(p), nr = static_cast<long>(a % p);
        while (nr) {
            long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return static_cast<unsigned long>((t % static_cast<long>(p) + static_cast<long>(p)) %
                                          static_cast<long>(p));
    }

    // Returns true if v was independent (and is absorbed).
    bool add(std::vector<unsigned long> v) {
        for (auto& row : rows) {
            size_t piv = 0;
            while (piv < n && !row[piv]) ++piv;
            if (piv < n && v[piv]) {
                unsigned long f = (v[piv] * inv_mod(row[piv], p)) % p;
                for (size_t j = 0; j < n; ++j) v[j] = (v[j] + p * f - f * row[j] % p) % p;
            }
        }
        for (size_t j = 0; j < n; ++j)
            if (v[j]) {
                rows.push_back(std::move(v));
                return true;
            }
        return false;
    }

    bool contains(std::vector<unsigned long> v) const {
        for (const auto& row : rows) {
            size_t piv = 0;
            while (piv < n && !row[piv]) ++piv;
            if (piv < n && v[piv]) {
                unsigned long f = (v[piv] * inv_mod(row[piv], p)) % p;
                for (size_t j = 0; j < n; ++j) v[j] = (v[j] + p * f - f * row[j] % p) % p;
            }
        }
        for (size_t j = 0; j < n; ++j)
            if (v[j]) return false;
        return true;
    }

    size_t dim() const { return rows.size(); }
};

bool next_vector(std::vector<unsigned long>& v, unsigned long p) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (++v[i] < p) return true;
        v[i] = 0;
    }
    return false;
}

double pow_size(unsigned long p, size_t d) {
    double r = 1;
    for (size_t i = 0; i < d; ++i) r *= static_cast<double>(p);
    return r;
}

// --- decomposition over F_p -------------------------------------------------

Decomposition decompose_fp(const Algebra& a) {
    if (a.rank > 6) throw std::invalid_argument("local_decomposition: rank > 6 over F_p");
    SmallFp s = small_of(a);
    if (pow_size(s.p, s.d) > 1e6)
        throw std::invalid_argument("local_decomposition: p^rank exceeds 10^6");

    // All idempotents by exhaustive search.
    std::vector<std::vector<unsigned long>> idems;
    std::vector<unsigned long> v(s.d, 0);
    do {
        if (s.mul(v, v) == v) idems.push_back(v);
    } while (next_vector(v, s.p));

    std::vector<std::vector<unsigned long>> nonzero;
    for (const auto& e : idems)
        if (std::any_of(e.begin(), e.end(), [](unsigned long x) { return x != 0; }))
            nonzero.push_back(e);

    std::vector<std::vector<unsigned long>> prim;
    for (const auto& e : nonzero) {
        bool primitive = true;
        for (const auto& f : nonzero) {
            if (f == e) continue;
            if (s.mul(e, f) == f) {
                primitive = false;
                break;
            }
        }
        if (primitive) prim.push_back(e);
    }
    std::sort(prim.begin(), prim.end());

    // Orthogonality and completeness.
    std::vector<unsigned long> sum(s.d, 0);
    for (const auto& e : prim)
        for (size_t i = 0; i < s.d; ++i) sum[i] = (sum[i] + e[i]) % s.p;
    if (sum != s.unit)
        throw std::logic_error("local_decomposition: primitive idempotents do not sum to 1");
    for (size_t i = 0; i < prim.size(); ++i)
        for (size_t j = i + 1; j < prim.size(); ++j) {
            auto prod = s.mul(prim[i], prim[j]);
            if (std::any_of(prod.begin(), prod.end(), [](unsigned long x) { return x != 0; }))
                throw std::logic_error("local_decomposition: primitive idempotents not orthogonal");
        }

    // Factor bases: independent columns of multiplication by each idempotent.
    Domain dom = a.base.scalar_domain();
    std::vector<std::vector<Scalar>> columns;
    std::vector<size_t> factor_dims;
    for (const auto& e : prim) {
        FpSpan span(s.p, s.d);
        size_t dim = 0;
        for (size_t j = 0; j < s.d; ++j) {
            std::vector<unsigned long> ej(s.d, 0);
            ej[j] = 1;
            auto img = s.mul(e, ej);
            if (span.add(img)) {
                std::vector<Scalar> col;
                for (unsigned long x : img) col.push_back(Scalar::of_int(dom, static_cast<long>(x)));
                columns.push_back(std::move(col));
                ++dim;
            }
        }
        factor_dims.push_back(dim);
    }
    size_t total = 0;
    for (size_t dmi : factor_dims) total += dmi;
    if (total != s.d) throw std::logic_error("local_decomposition: factor dimensions do not add up");

    FieldMatrix m = FieldMatrix::from_columns(dom, columns);
    BaseChange bc = base_change_of_field(m, a.base);
    Algebra conj = conjugate(a, bc);

    Decomposition dec;
    dec.basis = bc;
    size_t off = 0;
    for (size_t fi = 0; fi < factor_dims.size(); ++fi) {
        size_t fd = factor_dims[fi];
        Algebra f(a.base, fd);
        for (size_t i = 0; i < fd; ++i) f.unit[i] = conj.unit[off + i];
        for (size_t i = 0; i < fd; ++i)
            for (size_t j = 0; j < fd; ++j)
                for (size_t k = 0; k < fd; ++k) f.c(i, j, k) = conj.c(off + i, off + j, off + k);
        // the complementary blocks must vanish
        for (size_t i = 0; i < fd; ++i)
            for (size_t j = 0; j < fd; ++j)
                for (size_t k = 0; k < a.rank; ++k)
                    if ((k < off || k >= off + fd) && !conj.c(off + i, off + j, k).is_zero())
                        throw std::logic_error("local_decomposition: factors are not an ideal splitting");
        dec.factors.push_back(std::move(f));
        off += fd;
    }

    // Locality of each factor: every element is a unit or nilpotent.
    for (const Algebra& f : dec.factors) {
        SmallFp sf = small_of(f);
        std::vector<unsigned long> x(sf.d, 0);
        do {
            auto xr = sf.pow(x, sf.d);
            bool nilpotent = std::all_of(xr.begin(), xr.end(), [](unsigned long t) { return t == 0; });
            if (nilpotent) continue;
            FpSpan span(sf.p, sf.d);
            size_t r = 0;
            for (size_t j = 0; j < sf.d; ++j) {
                std::vector<unsigned long> ej(sf.d, 0);
                ej[j] = 1;
                if (span.add(sf.mul(x, ej))) ++r;
            }
            if (r != sf.d)
                throw std::logic_error("local_decomposition: factor has a non-unit non-nilpotent element");
        } while (next_vector(x, sf.p));
    }
    return dec;
}

// --- decomposition over Q ---------------------------------------------------

using QPoly = std::vector<Scalar>;  // univariate, coeffs low to high, over Q

QPoly qp_trim(QPoly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

QPoly qp_mul(const QPoly& f, const QPoly& g) {
    Domain Q = Domain::rationals();
    if (f.empty() || g.empty()) return {};
    QPoly r(f.size() + g.size() - 1, Scalar::zero(Q));
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) r[i + j] = r[i + j] + f[i] * g[j];
    return qp_trim(r);
}

QPoly qp_sub(QPoly f, const QPoly& g) {
    Domain Q = Domain::rationals();
    if (f.size() < g.size()) f.resize(g.size(), Scalar::zero(Q));
    for (size_t i = 0; i < g.size(); ++i) f[i] = f[i] - g[i];
    return qp_trim(f);
}

// division with remainder, divisor nonzero
std::pair<QPoly, QPoly> qp_divmod(QPoly f, const QPoly& g) {
    Domain Q = Domain::rationals();
    QPoly q;
    f = qp_trim(f);
    if (f.size() >= g.size()) q.assign(f.size() - g.size() + 1, Scalar::zero(Q));
    while (f.size() >= g.size() && !f.empty()) {
        Scalar c = f.back() / g.back();
        size_t shift = f.size() - g.size();
        q[shift] = c;
        QPoly sub(shift, Scalar::zero(Q));
        for (const auto& gc : g) sub.push_back(gc * c);
        f = qp_sub(f, sub);  // the top coefficient cancels exactly
    }
    return {qp_trim(q), f};
}

// extended euclid: u f + v g = gcd (monic)
void qp_extended_gcd(const QPoly& f, const QPoly& g, QPoly& u, QPoly& v) {
    Domain Q = Domain::rationals();
    QPoly r0 = f, r1 = g;
    QPoly u0{Scalar::one(Q)}, v0{}, u1{}, v1{Scalar::one(Q)};
    while (!r1.empty()) {
        auto [q, r] = qp_divmod(r0, r1);
        QPoly u2 = qp_sub(u0, qp_mul(q, u1));
        QPoly v2 = qp_sub(v0, qp_mul(q, v1));
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    Scalar lead = r0.back();
    u = u0, v = v0;
    for (auto& c : u) c = c / lead;
    for (auto& c : v) c = c / lead;
}

std::vector<mpz_class> divisors_capped(mpz_class n) {
    n = abs(n);
    if (n == 0) throw std::logic_error("divisors of 0");
    std::vector<std::pair<mpz_class, unsigned>> fac;
    mpz_class m = n;
    for (mpz_class q = 2; q * q <= m; ++q) {
        if (q > 1000000)
            throw std::invalid_argument(
                "local_decomposition: rational root search out of desk range (constant term too large)");
        if (m % q == 0) {
            unsigned e = 0;
            while (m % q == 0) { m /= q; ++e; }
            fac.emplace_back(q, e);
        }
    }
    if (m > 1) fac.emplace_back(m, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [q, e] : fac) {
        size_t old = divs.size();
        mpz_class pw = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pw *= q;
            for (size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Scalar qp_eval(const QPoly& f, const Scalar& x) {
    Domain Q = Domain::rationals();
    Scalar r = Scalar::zero(Q);
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

// Minimal polynomial of a basis element of A (monic, over Q).
QPoly minimal_polynomial(const Algebra& a, size_t basis_index) {
    Domain Q = Domain::rationals();
    Vec x = vec_unit(a.base, a.rank, basis_index);
    std::vector<std::vector<Scalar>> powers{scalars_of_vec(a.unit)};
    Vec cur = a.unit;
    for (size_t k = 1; k <= a.rank; ++k) {
        cur = a.multiply(cur, x);
        powers.push_back(scalars_of_vec(cur));
        FieldMatrix m = FieldMatrix::from_columns(Q, std::vector<std::vector<Scalar>>(
                                                         powers.begin(), powers.end() - 1));
        auto sol = m.solve(powers.back());
        if (sol) {
            QPoly f;
            for (const auto& c : *sol) f.push_back(-c);
            f.push_back(Scalar::one(Q));
            return qp_trim(f);
        }
    }
    throw std::logic_error("minimal_polynomial: no dependency up to the rank");
}

// First rational root of a monic polynomial over Q, if any.
std::optional<Scalar> first_rational_root(const QPoly& f) {
    Domain Q = Domain::rationals();
    if (f.size() <= 1) return std::nullopt;
    if (f[0].is_zero()) return Scalar::zero(Q);
    // clear denominators to a primitive integer polynomial
    mpz_class den = 1;
    for (const auto& c : f) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
        den = den / g * c.den();
    }
    std::vector<mpz_class> zf;
    for (const auto& c : f) zf.push_back(c.num() * (den / c.den()));
    auto rs = divisors_capped(zf.front());
    auto ss = divisors_capped(zf.back());
    for (const auto& r : rs)
        for (const auto& s : ss)
            for (int sign : {1, -1}) {
                Scalar cand = Scalar::rational(sign * r, s);
                if (qp_eval(f, cand).is_zero()) return cand;
            }
    return std::nullopt;
}

// Splitting idempotent from a basis vector, if its minimal polynomial has a
// rational root with a nontrivial coprime cofactor.
std::optional<std::vector<Scalar>> splitting_idempotent(const Algebra& a) {
    Domain Q = Domain::rationals();
    for (size_t bi = 0; bi < a.rank; ++bi) {
        QPoly mu = minimal_polynomial(a, bi);
        auto root = first_rational_root(mu);
        if (!root) continue;
        QPoly lin{-*root, Scalar::one(Q)};
        QPoly f1{Scalar::one(Q)};
        QPoly rest = mu;
        while (true) {
            auto [q, r] = qp_divmod(rest, lin);
            if (!r.empty()) break;
            f1 = qp_mul(f1, lin);
            rest = q;
        }
        if (rest.size() <= 1) continue;  // primary: (T - root)^m, no split from this vector
        QPoly u, v;
        qp_extended_gcd(f1, rest, u, v);
        QPoly eps_poly = qp_mul(v, rest);  // = 1 mod f1, 0 mod rest
        // evaluate at the basis element
        Vec x = vec_unit(a.base, a.rank, bi);
        Vec acc = vec_zero(a.base, a.rank);
        Vec xpow = a.unit;
        for (size_t i = 0; i < eps_poly.size(); ++i) {
            acc = vec_add(acc, vec_scale(ring_scalar(a.base, eps_poly[i]), xpow));
            xpow = a.multiply(xpow, x);
        }
        std::vector<Scalar> eps = scalars_of_vec(acc);
        if (!vec_eq(a.multiply(acc, acc), acc))
            throw std::logic_error("splitting_idempotent: CRT element is not idempotent");
        bool zero = true, one = true;
        for (size_t i = 0; i < a.rank; ++i) {
            if (!eps[i].is_zero()) zero = false;
            if (eps[i] != a.unit[i].constant_value()) one = false;
        }
        if (zero || one) throw std::logic_error("splitting_idempotent: idempotent is trivial");
        return eps;
    }
    return std::nullopt;
}

Decomposition decompose_q(const Algebra& a) {
    if (a.rank > 3) throw std::invalid_argument("local_decomposition: rank > 3 over Q");
    Domain Q = Domain::rationals();

    // Work list of (subalgebra, embedding columns into the original coordinates).
    struct Item {
        Algebra alg;
        std::vector<std::vector<Scalar>> embed;
    };
    std::vector<std::vector<Scalar>> id_cols;
    for (size_t j = 0; j < a.rank; ++j) {
        std::vector<Scalar> c(a.rank, Scalar::zero(Q));
        c[j] = Scalar::one(Q);
        id_cols.push_back(std::move(c));
    }
    std::vector<Item> work{{a, id_cols}}, done;

    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        auto eps = splitting_idempotent(it.alg);
        if (!eps) {
            done.push_back(std::move(it));
            continue;
        }
        const Algebra& b = it.alg;
        std::vector<Scalar> comp(b.rank);
        for (size_t i = 0; i < b.rank; ++i) comp[i] = b.unit[i].constant_value() - (*eps)[i];
        // bases of eps*B and (1-eps)*B
        std::vector<std::vector<std::vector<Scalar>>> blocks;
        std::vector<std::vector<Scalar>> all_cols;
        for (const auto& idem : {*eps, comp}) {
            Vec iv = vec_of_scalars(b.base, idem);
            std::vector<std::vector<Scalar>> cols;
            for (size_t j = 0; j < b.rank; ++j) {
                Vec img = b.multiply(iv, vec_unit(b.base, b.rank, j));
                auto cand = cols;
                cand.push_back(scalars_of_vec(img));
                if (FieldMatrix::from_columns(Q, cand).rank() == cand.size()) cols = cand;
            }
            blocks.push_back(cols);
            for (const auto& c : cols) all_cols.push_back(c);
        }
        if (all_cols.size() != b.rank)
            throw std::logic_error("local_decomposition: idempotent blocks do not fill the algebra");
        FieldMatrix m = FieldMatrix::from_columns(Q, all_cols);
        BaseChange bc = base_change_of_field(m, b.base);
        Algebra conj = conjugate(b, bc);
        size_t off = 0;
        for (const auto& cols : blocks) {
            size_t fd = cols.size();
            Algebra f(b.base, fd);
            for (size_t i = 0; i < fd; ++i) f.unit[i] = conj.unit[off + i];
            for (size_t i = 0; i < fd; ++i)
                for (size_t j = 0; j < fd; ++j)
                    for (size_t k = 0; k < fd; ++k) f.c(i, j, k) = conj.c(off + i, off + j, off + k);
            // embedding of the block into the original coordinates
            std::vector<std::vector<Scalar>> embed;
            for (size_t j = 0; j < fd; ++j) {
                std::vector<Scalar> col(a.rank, Scalar::zero(Q));
                for (size_t i = 0; i < b.rank; ++i)
                    for (size_t k = 0; k < a.rank; ++k)
                        col[k] = col[k] + it.embed[i][k] * cols[j][i];
                embed.push_back(std::move(col));
            }
            work.push_back(Item{std::move(f), std::move(embed)});
            off += fd;
        }
    }

    // Deterministic factor order: sort by embedding columns.
    std::sort(done.begin(), done.end(), [](const Item& x, const Item& y) {
        auto key = [](const Item& it) {
            std::vector<std::string> k;
            for (const auto& col : it.embed)
                for (const auto& s : col) k.push_back(s.str());
            return k;
        };
        return key(x) < key(y);
    });

    std::vector<std::vector<Scalar>> all;
    for (const auto& it : done)
        for (const auto& col : it.embed) {
            std::vector<Scalar> c = col;
            all.push_back(std::move(c));
        }
    // embed columns were built as columns in original coordinates (length rank)
    FieldMatrix m = FieldMatrix::from_columns(Q, all);
    Decomposition dec;
    dec.basis = base_change_of_field(m, a.base);
    for (auto& it : done) dec.factors.push_back(std::move(it.alg));
    return dec;
}

}  // namespace

Decomposition local_decomposition(const Algebra& a) {
    if (a.base.over_t)
        throw std::invalid_argument("local_decomposition: specialize the family first");
    AxiomReport ax = check_algebra_axioms(a);
    if (!ax.ok) throw std::invalid_argument("local_decomposition: input fails axioms: " + ax.first_failure);
    if (a.base.leaf == BaseRing::Leaf::Fp) return decompose_fp(a);
    if (a.base.leaf == BaseRing::Leaf::Q) return decompose_q(a);
    throw std::invalid_argument("local_decomposition: base must be F_p or Q");
}

IsotypeReport classify_degree3(const Algebra& a) {
    if (a.rank != 3) throw std::invalid_argument("classify_degree3: rank must be exactly 3");
    if (a.base.leaf != BaseRing::Leaf::Fp || a.base.over_t)
        throw std::invalid_argument("classify_degree3: base must be a prime field");
    Decomposition dec = local_decomposition(a);

    IsotypeReport report;
    size_t mass = 0;
    for (const Algebra& f : dec.factors) {
        SmallFp s = small_of(f);
        // maximal ideal = nilpotent elements
        FpSpan mspan(s.p, s.d);
        std::vector<std::vector<unsigned long>> mbasis;
        std::vector<unsigned long> x(s.d, 0);
        do {
            auto xr = s.pow(x, s.d);
            if (std::all_of(xr.begin(), xr.end(), [](unsigned long t) { return t == 0; }))
                if (mspan.add(x)) mbasis.push_back(x);
        } while (next_vector(x, s.p));
        size_t mdim = mspan.dim();
        size_t e = s.d - mdim;

        FactorReport fr;
        fr.residue_degree = e;
        fr.hilbert.push_back(1);
        // powers of m
        std::vector<std::vector<unsigned long>> cur = mbasis;
        size_t prev_dim = mdim;
        while (prev_dim > 0) {
            if (fr.hilbert.size() > s.d + 1)
                throw std::logic_error("classify_degree3: maximal ideal power chain does not terminate");
            FpSpan next(s.p, s.d);
            std::vector<std::vector<unsigned long>> nb;
            for (const auto& u : cur)
                for (const auto& w : mbasis) {
                    auto prod = s.mul(u, w);
                    if (next.add(prod)) nb.push_back(prod);
                }
            size_t ndim = next.dim();
            if ((prev_dim - ndim) % e != 0)
                throw std::logic_error("classify_degree3: Hilbert layer not a residue-field module");
            fr.hilbert.push_back((prev_dim - ndim) / e);
            cur = nb;
            prev_dim = ndim;
        }
        while (fr.hilbert.size() > 1 && fr.hilbert.back() == 0) fr.hilbert.pop_back();
        mass += e * std::accumulate(fr.hilbert.begin(), fr.hilbert.end(), size_t{0});
        report.factors.push_back(std::move(fr));
    }
    if (mass != a.rank) throw std::logic_error("classify_degree3: factor masses do not sum to the rank");
    std::sort(report.factors.begin(), report.factors.end());
    report.lci = true;
    for (const auto& f : report.factors)
        if (f.hilbert.size() >= 2 && f.hilbert[1] >= 2) report.lci = false;
    return report;
}

}  // namespace finalg
