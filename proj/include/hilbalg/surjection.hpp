#pragma once

#include "hilbalg/algebra.hpp"

namespace hilbpts {

using corealg::Scalar;
using finalg::Algebra;
using finalg::BaseChange;
using finalg::Vec;

/// A point of Hilb_d(A^n) presented as a surjection k[x_1..x_n] -> A:
/// the target algebra and the images of the variables.
struct SurjectionData {
    Algebra target;                           // over a field
    std::vector<std::vector<Scalar>> images;  // n coordinate vectors of length rank
};

/// True when 1 and the images generate the target as an algebra (span closure
/// under products; stabilizes within rank steps).
bool is_surjective(const SurjectionData& s);

/// One A^1-homotopy of surjections: images with entries in A[t], linear in t.
struct HomotopyStep {
    std::vector<std::vector<corealg::MultiPoly>> images_t;  // n x rank, polys in t
    std::string note;
};

/// The surjection at a parameter value.
SurjectionData step_at(const Algebra& target, const HomotopyStep& step, const Scalar& t0);

/// Greedy straightening: a sequence of homotopies after which the images of
/// x_1..x_{d-1} complete 1 to a basis and the images of x_j, j >= d, vanish.
/// Each step is certified surjective at both endpoints and stays surjective
/// at every specialization because it extends a fixed surjective restriction.
/// Requires n >= d - 1.
std::vector<HomotopyStep> straighten_coordinates(const SurjectionData& s);

struct ReesPath {
    Algebra family;             // rees family of the target in the marked basis
    std::vector<Vec> markings;  // n marked elements over base[t]
    BaseChange basis;           // change to the basis {1, pi(x_1)..pi(x_{d-1})}
};

/// The Rees homotopy x_i -> t * pi(x_i): at t=1 it recovers the surjection up
/// to the basis change, at t=0 it is the canonical square-zero basepoint with
/// markings (e_1, .., e_{d-1}, 0, .., 0), independent of the input.
/// Requires a straightened surjection.
ReesPath rees_path_to_basepoint(const SurjectionData& s);

/// The basepoint marking for comparison: e_1..e_{d-1} then zeros.
std::vector<std::vector<Scalar>> canonical_basepoint_markings(const finalg::BaseRing& base,
                                                              size_t rank, size_t n);

}  // namespace hilbpts
