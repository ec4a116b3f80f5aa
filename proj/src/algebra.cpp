#include "hilbalg/algebra.hpp"

#include <algorithm>
#include <functional>

namespace finalg {

static const std::vector<std::string> kTVar{"t"};

BaseRing BaseRing::Fp(const mpz_class& p) {
    Domain::prime_field(p);  // validates primality
    return BaseRing{Leaf::Fp, p, false};
}

Domain BaseRing::scalar_domain() const {
    switch (leaf) {
        case Leaf::Z: return Domain::integers();
        case Leaf::Q: return Domain::rationals();
        case Leaf::Fp: return Domain::prime_field(p);
    }
    throw std::logic_error("unreachable");
}

std::string BaseRing::name() const {
    std::string n;
    switch (leaf) {
        case Leaf::Z: n = "Z"; break;
        case Leaf::Q: n = "Q"; break;
        case Leaf::Fp: n = "F" + p.get_str(); break;
    }
    return over_t ? n + "[t]" : n;
}

RingEl ring_zero(const BaseRing& b) { return RingEl(kTVar, b.scalar_domain()); }

RingEl ring_one(const BaseRing& b) { return ring_scalar(b, Scalar::one(b.scalar_domain())); }

RingEl ring_t(const BaseRing& b) {
    if (!b.over_t) throw std::invalid_argument("ring_t: base " + b.name() + " has no t");
    return RingEl::variable(kTVar, b.scalar_domain(), 0);
}

RingEl ring_scalar(const BaseRing& b, const Scalar& s) {
    return RingEl::constant(kTVar, s.to_domain(b.scalar_domain()));
}

RingEl ring_parse(const BaseRing& b, const std::string& text) {
    RingEl e = RingEl::parse(text, kTVar, b.scalar_domain());
    if (!b.over_t && e.degree() > 0)
        throw std::invalid_argument("ring_parse: t appears but base is " + b.name());
    return e;
}

RingEl specialize_el(const RingEl& e, const Scalar& t0) {
    return e.substitute(0, t0.to_domain(e.domain()));
}

Vec vec_zero(const BaseRing& b, size_t n) { return Vec(n, ring_zero(b)); }

Vec vec_unit(const BaseRing& b, size_t n, size_t i) {
    Vec v = vec_zero(b, n);
    v[i] = ring_one(b);
    return v;
}

bool vec_eq(const Vec& a, const Vec& b) { return a == b; }

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

Vec vec_scale(const RingEl& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x = x * c;
    return r;
}

Vec vec_of_scalars(const BaseRing& b, const std::vector<Scalar>& v) {
    Vec r;
    r.reserve(v.size());
    for (const auto& s : v) r.push_back(ring_scalar(b, s));
    return r;
}

std::vector<Scalar> scalars_of_vec(const Vec& v) {
    std::vector<Scalar> r;
    r.reserve(v.size());
    for (const auto& e : v) r.push_back(e.constant_value());
    return r;
}

Algebra::Algebra(BaseRing b, size_t d) : base(std::move(b)), rank(d) {
    unit = vec_zero(base, d);
    mult = Vec(d * d * d, ring_zero(base));
}

NonunitalAlgebra::NonunitalAlgebra(BaseRing b, size_t d) : base(std::move(b)), rank(d) {
    mult = Vec(d * d * d, ring_zero(base));
}

static Vec tensor_multiply(const Vec& mult, size_t rank, const BaseRing& base,
                           const Vec& x, const Vec& y) {
    if (x.size() != rank || y.size() != rank)
        throw std::invalid_argument("multiply: coordinate vector length mismatch");
    Vec r = vec_zero(base, rank);
    for (size_t i = 0; i < rank; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < rank; ++j) {
            if (y[j].is_zero()) continue;
            RingEl xy = x[i] * y[j];
            for (size_t k = 0; k < rank; ++k) {
                const RingEl& c = mult[(i * rank + j) * rank + k];
                if (!c.is_zero()) r[k] = r[k] + xy * c;
            }
        }
    }
    return r;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
    return tensor_multiply(mult, rank, base, x, y);
}

Vec NonunitalAlgebra::multiply(const Vec& x, const Vec& y) const {
    return tensor_multiply(mult, rank, base, x, y);
}

Vec Algebra::power(const Vec& x, unsigned long e) const {
    Vec r = unit, b = x;
    while (e) {
        if (e & 1) r = multiply(r, b);
        b = multiply(b, b);
        e >>= 1;
    }
    return r;
}

FieldMatrix Algebra::mult_operator(const std::vector<Scalar>& x) const {
    Domain dom = base.scalar_domain();
    FieldMatrix m(dom, rank, rank);
    Vec xv = vec_of_scalars(base, x);
    for (size_t j = 0; j < rank; ++j) {
        Vec col = multiply(xv, vec_unit(base, rank, j));
        for (size_t i = 0; i < rank; ++i) m.at(i, j) = col[i].constant_value();
    }
    return m;
}

static void check_tensor_shape(size_t rank, size_t mult_size, size_t unit_size, bool unital) {
    if (mult_size != rank * rank * rank)
        throw std::invalid_argument("algebra tensor dimension mismatch: expected " +
                                    std::to_string(rank * rank * rank) + " entries, got " +
                                    std::to_string(mult_size));
    if (unital && unit_size != rank)
        throw std::invalid_argument("algebra unit vector dimension mismatch");
}

AxiomReport check_algebra_axioms(const Algebra& a) {
    check_tensor_shape(a.rank, a.mult.size(), a.unit.size(), true);
    const size_t d = a.rank;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            for (size_t k = 0; k < d; ++k)
                if (a.c(i, j, k) != a.c(j, i, k))
                    return {false, "commutativity: c(" + std::to_string(i) + "," + std::to_string(j) +
                                       ",*) != c(" + std::to_string(j) + "," + std::to_string(i) + ",*)"};
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k) {
                Vec lhs = a.multiply(a.multiply(vec_unit(a.base, d, i), vec_unit(a.base, d, j)),
                                     vec_unit(a.base, d, k));
                Vec rhs = a.multiply(vec_unit(a.base, d, i),
                                     a.multiply(vec_unit(a.base, d, j), vec_unit(a.base, d, k)));
                if (!vec_eq(lhs, rhs))
                    return {false, "associativity: (e" + std::to_string(i) + "*e" + std::to_string(j) +
                                       ")*e" + std::to_string(k) + " != e" + std::to_string(i) + "*(e" +
                                       std::to_string(j) + "*e" + std::to_string(k) + ")"};
            }
    for (size_t j = 0; j < d; ++j) {
        Vec u = a.multiply(a.unit, vec_unit(a.base, d, j));
        if (!vec_eq(u, vec_unit(a.base, d, j)))
            return {false, "unit law: 1*e" + std::to_string(j) + " != e" + std::to_string(j)};
    }
    return {};
}

AxiomReport check_nonunital_axioms(const NonunitalAlgebra& a) {
    check_tensor_shape(a.rank, a.mult.size(), a.rank, false);
    const size_t d = a.rank;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            for (size_t k = 0; k < d; ++k)
                if (a.c(i, j, k) != a.c(j, i, k))
                    return {false, "commutativity: c(" + std::to_string(i) + "," + std::to_string(j) + ",*)"};
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k) {
                Vec lhs = a.multiply(a.multiply(vec_unit(a.base, d, i), vec_unit(a.base, d, j)),
                                     vec_unit(a.base, d, k));
                Vec rhs = a.multiply(vec_unit(a.base, d, i),
                                     a.multiply(vec_unit(a.base, d, j), vec_unit(a.base, d, k)));
                if (!vec_eq(lhs, rhs))
                    return {false, "associativity: triple (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(k) + ")"};
            }
    return {};
}

Vec BaseChange::new_coords(const Vec& v) const {
    Vec r(dim, ring_zero(BaseRing::Z()));
    for (size_t i = 0; i < dim; ++i) {
        RingEl acc = g(i, 0).scaled(Scalar::zero(g(i, 0).domain()));
        for (size_t j = 0; j < dim; ++j) acc = acc + g(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

Vec BaseChange::old_coords(const Vec& v) const {
    Vec r(dim, ring_zero(BaseRing::Z()));
    for (size_t i = 0; i < dim; ++i) {
        RingEl acc = f(i, 0).scaled(Scalar::zero(f(i, 0).domain()));
        for (size_t j = 0; j < dim; ++j) acc = acc + f(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

BaseChange base_change_identity(const BaseRing& b, size_t n) {
    BaseChange m;
    m.dim = n;
    m.fwd = m.inv = Vec(n * n, ring_zero(b));
    for (size_t i = 0; i < n; ++i) m.fwd[i * n + i] = m.inv[i * n + i] = ring_one(b);
    return m;
}

BaseChange base_change_of_field(const FieldMatrix& m, const BaseRing& b) {
    auto inv = m.inverse();
    if (!inv) throw std::invalid_argument("base change matrix is singular");
    BaseChange r;
    r.dim = m.rows();
    r.fwd.reserve(r.dim * r.dim);
    r.inv.reserve(r.dim * r.dim);
    for (size_t i = 0; i < r.dim; ++i)
        for (size_t j = 0; j < r.dim; ++j) {
            r.fwd.push_back(ring_scalar(b, m.at(i, j)));
            r.inv.push_back(ring_scalar(b, inv->at(i, j)));
        }
    return r;
}

BaseChange base_change_of_int(const IntMatrix& m, const BaseRing& b) {
    auto inv = m.inverse_unimodular();
    if (!inv) throw std::invalid_argument("base change matrix is not unimodular");
    BaseChange r;
    r.dim = m.rows();
    Domain dom = b.scalar_domain();
    for (size_t i = 0; i < r.dim; ++i)
        for (size_t j = 0; j < r.dim; ++j)
            r.fwd.push_back(ring_scalar(b, Scalar::of_mpz(Domain::integers(), m.at(i, j)).to_domain(dom)));
    for (size_t i = 0; i < r.dim; ++i)
        for (size_t j = 0; j < r.dim; ++j)
            r.inv.push_back(ring_scalar(b, Scalar::of_mpz(Domain::integers(), inv->at(i, j)).to_domain(dom)));
    return r;
}

Algebra conjugate(const Algebra& a, const BaseChange& m) {
    if (m.dim != a.rank) throw std::invalid_argument("conjugate: base change dimension mismatch");
    Algebra r(a.base, a.rank);
    r.unit = m.new_coords(a.unit);
    for (size_t i = 0; i < a.rank; ++i)
        for (size_t j = 0; j < a.rank; ++j) {
            // product of new basis vectors i and j, in old coordinates
            Vec ei(m.dim, ring_zero(a.base)), ej(m.dim, ring_zero(a.base));
            for (size_t k = 0; k < m.dim; ++k) {
                ei[k] = m.f(k, i);
                ej[k] = m.f(k, j);
            }
            Vec prod = m.new_coords(a.multiply(ei, ej));
            for (size_t k = 0; k < a.rank; ++k) r.c(i, j, k) = prod[k];
        }
    return r;
}

Vec AlgebraHom::apply(const Vec& x) const {
    if (x.size() != source.rank) throw std::invalid_argument("AlgebraHom::apply: size mismatch");
    Vec r = vec_zero(target.base, target.rank);
    for (size_t i = 0; i < target.rank; ++i)
        for (size_t j = 0; j < source.rank; ++j)
            if (!m(i, j).is_zero()) r[i] = r[i] + m(i, j) * x[j];
    return r;
}

Vec AlgebraHom::column(size_t j) const {
    Vec r = vec_zero(target.base, target.rank);
    for (size_t i = 0; i < target.rank; ++i) r[i] = m(i, j);
    return r;
}

AxiomReport check_algebra_hom(const AlgebraHom& h) {
    if (h.source.base != h.target.base) return {false, "source and target over different bases"};
    if (h.matrix.size() != h.source.rank * h.target.rank)
        throw std::invalid_argument("hom matrix dimension mismatch");
    if (!vec_eq(h.apply(h.source.unit), h.target.unit)) return {false, "unit not preserved"};
    for (size_t i = 0; i < h.source.rank; ++i)
        for (size_t j = i; j < h.source.rank; ++j) {
            Vec lhs = h.apply(h.source.multiply(vec_unit(h.source.base, h.source.rank, i),
                                                vec_unit(h.source.base, h.source.rank, j)));
            Vec rhs = h.target.multiply(h.column(i), h.column(j));
            if (!vec_eq(lhs, rhs))
                return {false, "not multiplicative on (e" + std::to_string(i) + ",e" +
                                   std::to_string(j) + ")"};
        }
    return {};
}

// --- constructions ---------------------------------------------------------

Algebra square_zero_extension(size_t m, const BaseRing& base) {
    Algebra a(base, m + 1);
    a.unit = vec_unit(base, m + 1, 0);
    for (size_t j = 0; j < m + 1; ++j) {
        a.c(0, j, j) = ring_one(base);
        if (j > 0) a.c(j, 0, j) = ring_one(base);
    }
    return a;
}

UnitQuotient quotient_by_unit(const Algebra& a) {
    if (a.rank == 0) throw std::invalid_argument("quotient_by_unit: rank 0 algebra has no unit line");
    if (a.base.over_t) throw std::invalid_argument("quotient_by_unit: base must be a field or Z");
    const size_t d = a.rank;
    if (a.base.leaf_is_field()) {
        Domain dom = a.base.scalar_domain();
        std::vector<std::vector<Scalar>> cols{scalars_of_vec(a.unit)};
        bool unit_zero = true;
        for (const auto& s : cols[0]) unit_zero &= s.is_zero();
        if (unit_zero) throw std::invalid_argument("quotient_by_unit: unit vector is zero");
        for (size_t j = 0; j < d && cols.size() < d; ++j) {
            auto cand = cols;
            std::vector<Scalar> ej(d, Scalar::zero(dom));
            ej[j] = Scalar::one(dom);
            cand.push_back(ej);
            if (FieldMatrix::from_columns(dom, cand).rank() == cand.size()) cols = cand;
        }
        FieldMatrix m = FieldMatrix::from_columns(dom, cols);
        return UnitQuotient{d - 1, base_change_of_field(m, a.base)};
    }
    // Over Z: Smith normal form of the unit column certifies primitivity and
    // provides the unimodular completion.
    IntMatrix col(d, 1);
    for (size_t i = 0; i < d; ++i) col.at(i, 0) = a.unit[i].constant_value().as_integer();
    corealg::SmithForm s = col.smith_normal_form();
    if (s.d.at(0, 0) != 1)
        throw std::invalid_argument(
            "quotient_by_unit: non-primitive unit over Z (first elementary divisor " +
            s.d.at(0, 0).get_str() + "); the quotient is locally free but not free in this model");
    IntMatrix uinv = *s.u.inverse_unimodular();
    // U * unit = sign * e_1; fix the sign so the first column is the unit itself.
    mpz_class sign = s.v.at(0, 0);  // +-1
    IntMatrix m(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) m.at(i, j) = (j == 0 ? sign * uinv.at(i, 0) : uinv.at(i, j));
    return UnitQuotient{d - 1, base_change_of_int(m, a.base)};
}

ReesFamily rees_family(const Algebra& a) {
    AxiomReport ax = check_algebra_axioms(a);
    if (!ax.ok) throw std::invalid_argument("rees_family: input fails axioms: " + ax.first_failure);
    UnitQuotient q = quotient_by_unit(a);
    Algebra ap = conjugate(a, q.basis);  // unit is now e_0
    BaseRing bt = a.base.with_t();
    const size_t d = a.rank;
    Algebra fam(bt, d);
    fam.unit = vec_unit(bt, d, 0);
    RingEl t = ring_t(bt);
    RingEl t2 = t * t;
    for (size_t j = 0; j < d; ++j) {
        fam.c(0, j, j) = ring_one(bt);
        if (j > 0) fam.c(j, 0, j) = ring_one(bt);
    }
    for (size_t i = 1; i < d; ++i)
        for (size_t j = 1; j < d; ++j) {
            // a_i a_j = lambda * 1 + sum mu_k a_k in the completed basis
            fam.c(i, j, 0) = ap.c(i, j, 0) * t2;
            for (size_t k = 1; k < d; ++k) fam.c(i, j, k) = ap.c(i, j, k) * t;
        }
    return ReesFamily{std::move(fam), std::move(q.basis)};
}

Algebra specialize_family(const Algebra& family, const Scalar& t0) {
    if (!family.base.over_t)
        throw std::invalid_argument("specialize_family: base " + family.base.name() + " has no t");
    Algebra r(family.base.inner(), family.rank);
    for (size_t i = 0; i < family.unit.size(); ++i) r.unit[i] = specialize_el(family.unit[i], t0);
    for (size_t i = 0; i < family.mult.size(); ++i) r.mult[i] = specialize_el(family.mult[i], t0);
    return r;
}

Vec specialize_vec(const Vec& v, const Scalar& t0) {
    Vec r = v;
    for (auto& e : r) e = specialize_el(e, t0);
    return r;
}

Algebra unitalize(const NonunitalAlgebra& n) {
    AxiomReport ax = check_nonunital_axioms(n);
    if (!ax.ok) throw std::invalid_argument("unitalize: input fails axioms: " + ax.first_failure);
    const size_t d = n.rank + 1;
    Algebra a(n.base, d);
    a.unit = vec_unit(n.base, d, 0);
    for (size_t j = 0; j < d; ++j) {
        a.c(0, j, j) = ring_one(n.base);
        if (j > 0) a.c(j, 0, j) = ring_one(n.base);
    }
    for (size_t i = 1; i < d; ++i)
        for (size_t j = 1; j < d; ++j)
            for (size_t k = 1; k < d; ++k) a.c(i, j, k) = n.c(i - 1, j - 1, k - 1);
    return a;
}

AlgebraHom coordinate_augmentation(const Algebra& a) {
    AlgebraHom h;
    h.source = a;
    h.target = base_algebra(a.base);
    h.matrix = vec_zero(a.base, a.rank);
    h.matrix[0] = ring_one(a.base);
    return h;
}

NonunitalAlgebra augmentation_ideal(const Algebra& a, const AlgebraHom& aug) {
    if (aug.target.rank != 1)
        throw std::invalid_argument("augmentation_ideal: augmentation target must have rank 1");
    AxiomReport h = check_algebra_hom(aug);
    if (!h.ok) throw std::invalid_argument("augmentation_ideal: aug not multiplicative: " + h.first_failure);
    UnitQuotient q = quotient_by_unit(a);
    const size_t d = a.rank;
    // Basis of ker(aug): k_i = abar_i - aug(abar_i) * 1.
    Vec fwd = vec_zero(a.base, d * d);
    for (size_t i = 0; i < d; ++i) fwd[i * d + 0] = q.basis.f(i, 0);
    for (size_t j = 1; j < d; ++j) {
        Vec abar(d, ring_zero(a.base));
        for (size_t i = 0; i < d; ++i) abar[i] = q.basis.f(i, j);
        RingEl val = aug.apply(abar)[0];
        for (size_t i = 0; i < d; ++i) fwd[i * d + j] = abar[i] - val * q.basis.f(i, 0);
    }
    BaseChange m;
    if (a.base.leaf_is_field()) {
        FieldMatrix fm(a.base.scalar_domain(), d, d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) fm.at(i, j) = fwd[i * d + j].constant_value();
        m = base_change_of_field(fm, a.base);
    } else {
        IntMatrix im(d, d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) im.at(i, j) = fwd[i * d + j].constant_value().as_integer();
        m = base_change_of_int(im, a.base);
    }
    Algebra conj = conjugate(a, m);
    NonunitalAlgebra n(a.base, d - 1);
    for (size_t i = 1; i < d; ++i)
        for (size_t j = 1; j < d; ++j) {
            if (!conj.c(i, j, 0).is_zero())
                throw std::logic_error("augmentation_ideal: kernel is not an ideal");
            for (size_t k = 1; k < d; ++k) n.c(i - 1, j - 1, k - 1) = conj.c(i, j, k);
        }
    return n;
}

NonunitalAlgebra scaled_mult_family(const NonunitalAlgebra& n) {
    AxiomReport ax = check_nonunital_axioms(n);
    if (!ax.ok) throw std::invalid_argument("scaled_mult_family: input fails axioms: " + ax.first_failure);
    if (n.base.over_t) throw std::invalid_argument("scaled_mult_family: input already a family");
    BaseRing bt = n.base.with_t();
    NonunitalAlgebra r(bt, n.rank);
    RingEl t = ring_t(bt);
    for (size_t i = 0; i < n.mult.size(); ++i) r.mult[i] = n.mult[i] * t;
    return r;
}

Algebra constant_family(const Algebra& a) {
    if (a.base.over_t) throw std::invalid_argument("constant_family: already a family");
    Algebra r(a.base.with_t(), a.rank);
    for (size_t i = 0; i < a.rank; ++i) r.unit[i] = a.unit[i].map_domain(r.base.scalar_domain());
    for (size_t i = 0; i < a.mult.size(); ++i) r.mult[i] = a.mult[i].map_domain(r.base.scalar_domain());
    return r;
}

FiberProductResult fiber_product(const AlgebraHom& f, const AlgebraHom& g) {
    const Algebra& B = f.source;
    const Algebra& C = g.source;
    const Algebra& D = f.target;
    if (!(B.base == C.base && B.base == D.base))
        throw std::invalid_argument("fiber_product: base mismatch");
    if (B.base.over_t) throw std::invalid_argument("fiber_product: base must be a field or Z");
    if (!(g.target == D)) throw std::invalid_argument("fiber_product: f and g have different targets");
    AxiomReport hf = check_algebra_hom(f), hg = check_algebra_hom(g);
    if (!hf.ok) throw std::invalid_argument("fiber_product: f is not an algebra map: " + hf.first_failure);
    if (!hg.ok) throw std::invalid_argument("fiber_product: g is not an algebra map: " + hg.first_failure);

    const size_t db = B.rank, dc = C.rank, dd = D.rank;
    const size_t n = db + dc;
    const BaseRing& base = B.base;

    // Kernel of [f | -g]: B + C -> D, and a coordinate solver for it.
    std::vector<Vec> kernel;  // vectors of length n over the base
    std::function<Vec(const Vec&)> coords_in_kernel;

    if (base.leaf_is_field()) {
        Domain dom = base.scalar_domain();
        FieldMatrix m(dom, dd, n);
        for (size_t i = 0; i < dd; ++i) {
            for (size_t j = 0; j < db; ++j) m.at(i, j) = f.m(i, j).constant_value();
            for (size_t j = 0; j < dc; ++j) m.at(i, db + j) = -g.m(i, j).constant_value();
        }
        FieldMatrix fm(dom, dd, db);
        for (size_t i = 0; i < dd; ++i)
            for (size_t j = 0; j < db; ++j) fm.at(i, j) = f.m(i, j).constant_value();
        if (fm.rank() != dd) throw std::invalid_argument("fiber_product: f is not surjective");
        auto kb = m.kernel_basis();
        FieldMatrix kmat = FieldMatrix::from_columns(dom, kb);
        for (const auto& v : kb) kernel.push_back(vec_of_scalars(base, v));
        coords_in_kernel = [kmat, base](const Vec& v) {
            auto sol = kmat.solve(scalars_of_vec(v));
            if (!sol) throw std::logic_error("fiber_product: product escaped the kernel");
            return vec_of_scalars(base, *sol);
        };
    } else {
        IntMatrix m(dd, n);
        for (size_t i = 0; i < dd; ++i) {
            for (size_t j = 0; j < db; ++j) m.at(i, j) = f.m(i, j).constant_value().as_integer();
            for (size_t j = 0; j < dc; ++j) m.at(i, db + j) = -g.m(i, j).constant_value().as_integer();
        }
        IntMatrix fm(dd, db);
        for (size_t i = 0; i < dd; ++i)
            for (size_t j = 0; j < db; ++j) fm.at(i, j) = f.m(i, j).constant_value().as_integer();
        corealg::SmithForm sf = fm.smith_normal_form();
        for (size_t i = 0; i < dd; ++i)
            if (i >= std::min(dd, db) || sf.d.at(i, i) != 1)
                throw std::invalid_argument("fiber_product: f is not surjective over Z");
        auto kb = m.kernel_lattice();
        IntMatrix kmat(n, kb.size());
        for (size_t j = 0; j < kb.size(); ++j)
            for (size_t i = 0; i < n; ++i) kmat.at(i, j) = kb[j][i];
        for (const auto& v : kb) {
            Vec w;
            for (const auto& z : v) w.push_back(ring_scalar(base, Scalar::of_mpz(Domain::integers(), z)));
            kernel.push_back(std::move(w));
        }
        coords_in_kernel = [kmat, base](const Vec& v) {
            std::vector<mpz_class> rhs;
            for (const auto& e : v) rhs.push_back(e.constant_value().as_integer());
            auto sol = kmat.solve(rhs);
            if (!sol)
                throw std::invalid_argument(
                    "fiber_product: kernel fails to split over Z (cannot occur for surjective f)");
            Vec r;
            for (const auto& z : *sol) r.push_back(ring_scalar(base, Scalar::of_mpz(Domain::integers(), z)));
            return r;
        };
    }

    const size_t dp = kernel.size();
    Algebra P(base, dp);
    // componentwise product of kernel vectors, re-expressed in the kernel basis
    auto split = [&](const Vec& v) {
        Vec b(v.begin(), v.begin() + db), c(v.begin() + db, v.end());
        return std::make_pair(b, c);
    };
    for (size_t s = 0; s < dp; ++s)
        for (size_t u = s; u < dp; ++u) {
            auto [bs, cs] = split(kernel[s]);
            auto [bu, cu] = split(kernel[u]);
            Vec prod = B.multiply(bs, bu);
            Vec prodc = C.multiply(cs, cu);
            prod.insert(prod.end(), prodc.begin(), prodc.end());
            Vec coords = coords_in_kernel(prod);
            for (size_t k = 0; k < dp; ++k) {
                P.c(s, u, k) = coords[k];
                P.c(u, s, k) = coords[k];
            }
        }
    Vec both = B.unit;
    both.insert(both.end(), C.unit.begin(), C.unit.end());
    P.unit = coords_in_kernel(both);

    AlgebraHom to_b, to_c;
    to_b.source = P;
    to_b.target = B;
    to_b.matrix = vec_zero(base, db * dp);
    to_c.source = P;
    to_c.target = C;
    to_c.matrix = vec_zero(base, dc * dp);
    for (size_t j = 0; j < dp; ++j) {
        for (size_t i = 0; i < db; ++i) to_b.matrix[i * dp + j] = kernel[j][i];
        for (size_t i = 0; i < dc; ++i) to_c.matrix[i * dp + j] = kernel[j][db + i];
    }
    return FiberProductResult{std::move(P), std::move(to_b), std::move(to_c)};
}

Algebra product_algebra(const Algebra& a, const Algebra& b) {
    if (a.base != b.base) throw std::invalid_argument("product_algebra: base mismatch");
    Algebra r(a.base, a.rank + b.rank);
    for (size_t i = 0; i < a.rank; ++i) r.unit[i] = a.unit[i];
    for (size_t i = 0; i < b.rank; ++i) r.unit[a.rank + i] = b.unit[i];
    for (size_t i = 0; i < a.rank; ++i)
        for (size_t j = 0; j < a.rank; ++j)
            for (size_t k = 0; k < a.rank; ++k) r.c(i, j, k) = a.c(i, j, k);
    for (size_t i = 0; i < b.rank; ++i)
        for (size_t j = 0; j < b.rank; ++j)
            for (size_t k = 0; k < b.rank; ++k)
                r.c(a.rank + i, a.rank + j, a.rank + k) = b.c(i, j, k);
    return r;
}

Algebra tensor_product_algebra(const Algebra& a, const Algebra& b) {
    if (a.base != b.base) throw std::invalid_argument("tensor_product_algebra: base mismatch");
    const size_t ra = a.rank, rb = b.rank;
    Algebra r(a.base, ra * rb);
    for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < rb; ++j) r.unit[i * rb + j] = a.unit[i] * b.unit[j];
    for (size_t i1 = 0; i1 < ra; ++i1)
        for (size_t j1 = 0; j1 < rb; ++j1)
            for (size_t i2 = 0; i2 < ra; ++i2)
                for (size_t j2 = 0; j2 < rb; ++j2)
                    for (size_t k1 = 0; k1 < ra; ++k1)
                        for (size_t k2 = 0; k2 < rb; ++k2)
                            r.c(i1 * rb + j1, i2 * rb + j2, k1 * rb + k2) =
                                a.c(i1, i2, k1) * b.c(j1, j2, k2);
    return r;
}

Algebra truncated_polynomial_algebra(const BaseRing& base, size_t n) {
    if (n == 0) throw std::invalid_argument("truncated_polynomial_algebra: n must be >= 1");
    Algebra a(base, n);
    a.unit = vec_unit(base, n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i + j < n) a.c(i, j, i + j) = ring_one(base);
    return a;
}

Algebra quotient_polynomial_algebra(const BaseRing& base, const std::vector<Scalar>& coeffs) {
    Domain dom = base.scalar_domain();
    const size_t e = coeffs.size();
    if (e == 0) throw std::invalid_argument("quotient_polynomial_algebra: empty modulus");
    // x^e = -(c_0 + c_1 x + ... + c_{e-1} x^{e-1}); powers up to 2e-2.
    std::vector<std::vector<Scalar>> pow(2 * e - 1, std::vector<Scalar>(e, Scalar::zero(dom)));
    for (size_t k = 0; k < e; ++k) pow[k][k] = Scalar::one(dom);
    for (size_t k = e; k < 2 * e - 1; ++k) {
        // x^k = x * x^{k-1}, then reduce the overflow by the modulus
        std::vector<Scalar> shifted(e, Scalar::zero(dom));
        for (size_t i = 0; i + 1 < e; ++i) shifted[i + 1] = pow[k - 1][i];
        Scalar top = pow[k - 1][e - 1];
        for (size_t i = 0; i < e; ++i)
            shifted[i] = shifted[i] - top * coeffs[i].to_domain(dom);
        pow[k] = shifted;
    }
    Algebra a(base, e);
    a.unit = vec_unit(base, e, 0);
    for (size_t i = 0; i < e; ++i)
        for (size_t j = 0; j < e; ++j)
            for (size_t k = 0; k < e; ++k) a.c(i, j, k) = ring_scalar(base, pow[i + j][k]);
    return a;
}

Algebra field_extension_algebra(const mpz_class& p, const std::vector<long>& coeffs) {
    BaseRing base = BaseRing::Fp(p);
    std::vector<Scalar> cs;
    cs.reserve(coeffs.size());
    for (long c : coeffs) cs.push_back(Scalar::of_int(base.scalar_domain(), c));
    return quotient_polynomial_algebra(base, cs);
}

Algebra base_algebra(const BaseRing& base) {
    Algebra a(base, 1);
    a.unit = vec_unit(base, 1, 0);
    a.c(0, 0, 0) = ring_one(base);
    return a;
}

// --- witnesses --------------------------------------------------------------

static Vec matrix_multiply(const Vec& a, const Vec& b, size_t n) {
    Vec r(n * n, a[0].scaled(Scalar::zero(a[0].domain())));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) r[i * n + j] = r[i * n + j] + a[i * n + k] * b[k * n + j];
    return r;
}

ThreeLinesWitness three_lines_witness() {
    BaseRing bt = BaseRing::Z().with_t();
    Algebra fam(bt, 3);
    fam.unit = vec_unit(bt, 3, 0);
    RingEl one = ring_one(bt), t = ring_t(bt);
    for (size_t j = 0; j < 3; ++j) {
        fam.c(0, j, j) = one;
        if (j > 0) fam.c(j, 0, j) = one;
    }
    fam.c(1, 1, 1) = t;  // x^2 = t x
    fam.c(2, 2, 2) = t;  // y^2 = t y

    // 1 -> 1, x -> y, y -> t - x - y  (the cyclic symmetry of the glued lines)
    Vec c(9, ring_zero(bt));
    c[0 * 3 + 0] = one;
    c[0 * 3 + 2] = t;
    c[2 * 3 + 1] = one;
    c[1 * 3 + 2] = -one;
    c[2 * 3 + 2] = -one;

    AxiomReport ax = check_algebra_axioms(fam);
    if (!ax.ok) throw std::logic_error("three_lines_witness: family fails axioms: " + ax.first_failure);
    AlgebraHom h{fam, fam, c};
    AxiomReport hr = check_algebra_hom(h);
    if (!hr.ok) throw std::logic_error("three_lines_witness: c is not an algebra map: " + hr.first_failure);
    Vec c3 = matrix_multiply(matrix_multiply(c, c, 3), c, 3);
    Vec id(9, ring_zero(bt));
    id[0] = id[4] = id[8] = one;
    if (!vec_eq(c3, id)) throw std::logic_error("three_lines_witness: c^3 != id");
    // determinant of the block on {x, y}
    RingEl det = c[1 * 3 + 1] * c[2 * 3 + 2] - c[1 * 3 + 2] * c[2 * 3 + 1];
    if (det != one) throw std::logic_error("three_lines_witness: det(c|_V) != 1");
    if (!(specialize_family(fam, Scalar::of_int(Domain::integers(), 0)) ==
          square_zero_extension(2, BaseRing::Z())))
        throw std::logic_error("three_lines_witness: t=0 fiber is not the square-zero extension");
    return ThreeLinesWitness{std::move(fam), std::move(c)};
}

RobberWitness robber_witness() {
    BaseRing bt = BaseRing::Z().with_t();
    Algebra fam(bt, 2);
    fam.unit = vec_unit(bt, 2, 0);
    RingEl one = ring_one(bt), t = ring_t(bt);
    fam.c(0, 0, 0) = one;
    fam.c(0, 1, 1) = one;
    fam.c(1, 0, 1) = one;
    fam.c(1, 1, 1) = t;  // x^2 = t x

    AxiomReport ax = check_algebra_axioms(fam);
    if (!ax.ok) throw std::logic_error("robber_witness: family fails axioms: " + ax.first_failure);
    AlgebraHom marking = coordinate_augmentation(fam);
    AxiomReport hr = check_algebra_hom(marking);
    if (!hr.ok) throw std::logic_error("robber_witness: marking is not an algebra map: " + hr.first_failure);
    return RobberWitness{std::move(fam), std::move(marking)};
}

}  // namespace finalg
