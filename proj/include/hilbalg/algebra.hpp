#pragma once

#include <string>
#include <vector>

#include "hilbalg/matrix.hpp"
#include "hilbalg/multipoly.hpp"

namespace finalg {

using corealg::Domain;
using corealg::FieldMatrix;
using corealg::IntMatrix;
using corealg::MultiPoly;
using corealg::Scalar;

/// Base ring of an algebra: Z, Q, F_p, or a univariate polynomial ring
/// R0[t] over one of those.
struct BaseRing {
    enum class Leaf { Z, Q, Fp };

    Leaf leaf = Leaf::Z;
    mpz_class p;        // Leaf::Fp only
    bool over_t = false;

    static BaseRing Z() { return BaseRing{Leaf::Z, 0, false}; }
    static BaseRing Q() { return BaseRing{Leaf::Q, 0, false}; }
    static BaseRing Fp(const mpz_class& p);

    BaseRing inner() const { return BaseRing{leaf, p, false}; }
    BaseRing with_t() const { return BaseRing{leaf, p, true}; }
    Domain scalar_domain() const;
    bool leaf_is_field() const { return leaf != Leaf::Z; }
    std::string name() const;

    bool operator==(const BaseRing& o) const {
        return leaf == o.leaf && over_t == o.over_t && (leaf != Leaf::Fp || p == o.p);
    }
    bool operator!=(const BaseRing& o) const { return !(*this == o); }
};

/// Elements of a base ring are polynomials in the single variable "t" over
/// the leaf coefficient domain; t-free when the base is a leaf ring.
using RingEl = MultiPoly;
using Vec = std::vector<RingEl>;

RingEl ring_zero(const BaseRing& b);
RingEl ring_one(const BaseRing& b);
RingEl ring_t(const BaseRing& b);  // requires over_t
RingEl ring_scalar(const BaseRing& b, const Scalar& s);
RingEl ring_parse(const BaseRing& b, const std::string& text);
RingEl specialize_el(const RingEl& e, const Scalar& t0);

Vec vec_zero(const BaseRing& b, size_t n);
Vec vec_unit(const BaseRing& b, size_t n, size_t i);
bool vec_eq(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const RingEl& c, const Vec& v);
/// Coordinate vectors of scalars <-> ring elements (t-free entries only).
Vec vec_of_scalars(const BaseRing& b, const std::vector<Scalar>& v);
std::vector<Scalar> scalars_of_vec(const Vec& v);

/// A finite free commutative algebra presented by rank, unit vector, and
/// structure-constant tensor: e_i * e_j = sum_k c(i,j,k) e_k.
class Algebra {
public:
    BaseRing base;
    size_t rank = 0;
    Vec unit;
    Vec mult;  // rank^3 entries, index (i*rank + j)*rank + k

    Algebra() = default;
    Algebra(BaseRing b, size_t d);

    const RingEl& c(size_t i, size_t j, size_t k) const { return mult[(i * rank + j) * rank + k]; }
    RingEl& c(size_t i, size_t j, size_t k) { return mult[(i * rank + j) * rank + k]; }

    /// Product of two coordinate vectors.
    Vec multiply(const Vec& x, const Vec& y) const;
    Vec power(const Vec& x, unsigned long e) const;  // x^e, x^0 = unit
    /// Matrix of multiplication by x (columns = x * e_j), entries t-free scalars.
    FieldMatrix mult_operator(const std::vector<Scalar>& x) const;

    bool operator==(const Algebra& o) const {
        return base == o.base && rank == o.rank && unit == o.unit && mult == o.mult;
    }
};

/// Same data without a unit.
struct NonunitalAlgebra {
    BaseRing base;
    size_t rank = 0;
    Vec mult;

    NonunitalAlgebra() = default;
    NonunitalAlgebra(BaseRing b, size_t d);
    const RingEl& c(size_t i, size_t j, size_t k) const { return mult[(i * rank + j) * rank + k]; }
    RingEl& c(size_t i, size_t j, size_t k) { return mult[(i * rank + j) * rank + k]; }
    Vec multiply(const Vec& x, const Vec& y) const;
    bool operator==(const NonunitalAlgebra& o) const {
        return base == o.base && rank == o.rank && mult == o.mult;
    }
};

struct AxiomReport {
    bool ok = true;
    std::string first_failure;
};

/// Commutativity, associativity, and the unit law, in that order; identities
/// are checked as polynomial identities in t when the base is R0[t].
AxiomReport check_algebra_axioms(const Algebra& a);
AxiomReport check_nonunital_axioms(const NonunitalAlgebra& a);

/// Invertible base change; columns of fwd are the new basis in old coordinates.
struct BaseChange {
    size_t dim = 0;
    Vec fwd, inv;  // dim x dim, row-major

    const RingEl& f(size_t i, size_t j) const { return fwd[i * dim + j]; }
    const RingEl& g(size_t i, size_t j) const { return inv[i * dim + j]; }
    Vec new_coords(const Vec& old_coords) const;   // inv * v
    Vec old_coords(const Vec& new_coords) const;   // fwd * v
};

BaseChange base_change_identity(const BaseRing& b, size_t n);
BaseChange base_change_of_field(const FieldMatrix& m, const BaseRing& b);
BaseChange base_change_of_int(const IntMatrix& m, const BaseRing& b);

/// The same algebra written in the basis given by the columns of m.fwd.
Algebra conjugate(const Algebra& a, const BaseChange& m);

/// A linear map between algebras over a common base, as a matrix
/// (target.rank x source.rank).
struct AlgebraHom {
    Algebra source, target;
    Vec matrix;

    const RingEl& m(size_t i, size_t j) const { return matrix[i * source.rank + j]; }
    Vec apply(const Vec& x) const;
    Vec column(size_t j) const;  // image of e_j
};

/// Checks unit preservation and multiplicativity.
AxiomReport check_algebra_hom(const AlgebraHom& h);

// --- constructions ---------------------------------------------------------

/// R + V with V*V = 0: rank m+1, basis {1, e_1..e_m}.
Algebra square_zero_extension(size_t m, const BaseRing& base);

struct UnitQuotient {
    size_t quotient_rank;  // rank - 1
    BaseChange basis;      // column 0 = the unit; remaining columns complete it
};

/// Completes the unit to a basis, exhibiting A/(R*1) as free of rank d-1.
/// Over Z the unit must be primitive (checked by Smith normal form).
UnitQuotient quotient_by_unit(const Algebra& a);

struct ReesFamily {
    Algebra family;    // over base[t]; fiber at 1 = conjugate(input, basis)
    BaseChange basis;  // basis completion used for the filtration
};

/// Degeneration of A to its associated graded square-zero algebra along t.
ReesFamily rees_family(const Algebra& a);

/// Substitutes t := t0 in every structure constant.
Algebra specialize_family(const Algebra& family, const Scalar& t0);
Vec specialize_vec(const Vec& v, const Scalar& t0);

/// Adjoins a unit as basis vector 0.
Algebra unitalize(const NonunitalAlgebra& n);
/// Kernel of a rank-1 augmentation, as a nonunital algebra.
NonunitalAlgebra augmentation_ideal(const Algebra& a, const AlgebraHom& aug);
/// The projection onto the unit coordinate; valid for algebras with unit e_0
/// whose nonunit span is an ideal (e.g. anything produced by unitalize).
AlgebraHom coordinate_augmentation(const Algebra& a);

/// Structure constants scaled by t: zero multiplication at t=0, N at t=1.
NonunitalAlgebra scaled_mult_family(const NonunitalAlgebra& n);
Algebra constant_family(const Algebra& a);  // lift along R0 -> R0[t]

struct FiberProductResult {
    Algebra product;
    AlgebraHom to_b, to_c;
};

/// B x_D C along f: B -> D (surjective) and g: C -> D.
FiberProductResult fiber_product(const AlgebraHom& f, const AlgebraHom& g);

Algebra product_algebra(const Algebra& a, const Algebra& b);
Algebra tensor_product_algebra(const Algebra& a, const Algebra& b);
/// k[x]/x^n in the basis {1, x, .., x^{n-1}}.
Algebra truncated_polynomial_algebra(const BaseRing& base, size_t n);
/// R[x]/(f) for monic f = x^e + c_{e-1}x^{e-1} + .. + c_0 in the basis
/// {1, x, .., x^{e-1}}, given by the coefficients c_0..c_{e-1}.
Algebra quotient_polynomial_algebra(const BaseRing& base, const std::vector<Scalar>& coeffs);
/// F_p[x]/(f) for monic irreducible f, coefficients c_0..c_{e-1} as integers.
Algebra field_extension_algebra(const mpz_class& p, const std::vector<long>& coeffs);
/// The rank-1 algebra on the base ring itself.
Algebra base_algebra(const BaseRing& base);

// --- explicit degeneration witnesses ---------------------------------------

struct ThreeLinesWitness {
    Algebra family;     // over Z[t], basis {1, x, y}: x^2 = tx, y^2 = ty, xy = 0
    Vec automorphism;   // 3x3 over Z[t]: 1 -> 1, x -> y, y -> t - x - y
};

/// Three affine lines glued at the origin, fibered over the t-line, with the
/// cyclic symmetry of the t=0 fiber. Asserts: t=0 fiber is the rank-3
/// square-zero extension, the automorphism has determinant 1 on the
/// complement of the unit and order 3.
ThreeLinesWitness three_lines_witness();

struct RobberWitness {
    Algebra family;      // over Z[t], basis {1, x}: x^2 = tx
    AlgebraHom marking;  // augmentation x -> 0
};

/// Rank-2 family whose fiber at t=0 is Z[x]/x^2 and at t=1 splits off an
/// idempotent, together with its marking section.
RobberWitness robber_witness();

}  // namespace finalg
