#pragma once

#include "hilbalg/groebner.hpp"
#include "hilbalg/matrix.hpp"

namespace hilbpts {

/// dim_k Hom(I/I^2, O_S) for the zero-dimensional ideal I: images of the
/// generators subject to the reduced syzygy constraints, assembled as one
/// kernel computation over the coefficient field. Monomial ideals use the
/// Taylor syzygies; general ideals use Schreyer syzygies from the Buchberger
/// trace and are bounded to colength <= 6.
size_t tangent_space_dim(const IdealPoint& p);

/// Matrix of multiplication by (the class of) f on O_S = k[x]/I in the
/// standard-monomial basis.
corealg::FieldMatrix quotient_mult_operator(const MultiPoly& f, const std::vector<MultiPoly>& gb,
                                            const ColengthResult& col, MonomialOrder o);

/// Coordinates of NF(f) in the standard-monomial basis.
std::vector<corealg::Scalar> quotient_coords(const MultiPoly& f, const std::vector<MultiPoly>& gb,
                                             const ColengthResult& col, MonomialOrder o);

}  // namespace hilbpts
