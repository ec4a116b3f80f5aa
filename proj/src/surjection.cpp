#include "hilbalg/surjection.hpp"

#include "hilbalg/matrix.hpp"

namespace hilbpts {

using corealg::Domain;
using corealg::FieldMatrix;
using corealg::MultiPoly;
using finalg::BaseRing;
using finalg::ring_scalar;
using finalg::vec_of_scalars;
using finalg::scalars_of_vec;
using finalg::vec_unit;

namespace {

size_t span_rank(const Domain& dom, const std::vector<std::vector<Scalar>>& vecs) {
    if (vecs.empty()) return 0;
    return FieldMatrix::from_columns(dom, vecs).rank();
}

bool in_span(const Domain& dom, std::vector<std::vector<Scalar>> span, const std::vector<Scalar>& v) {
    size_t before = span_rank(dom, span);
    span.push_back(v);
    return span_rank(dom, span) == before;
}

}  // namespace

bool is_surjective(const SurjectionData& s) {
    const Algebra& a = s.target;
    if (!a.base.leaf_is_field() || a.base.over_t)
        throw std::invalid_argument("is_surjective: target must be an algebra over a field");
    Domain dom = a.base.scalar_domain();
    for (const auto& im : s.images)
        if (im.size() != a.rank) throw std::invalid_argument("is_surjective: image length mismatch");

    std::vector<std::vector<Scalar>> span{scalars_of_vec(a.unit)};
    for (const auto& im : s.images) span.push_back(im);
    size_t dim = span_rank(dom, span);
    // close under products; the rank can grow at most rank(A) times
    for (size_t round = 0; round < a.rank && dim < a.rank; ++round) {
        std::vector<std::vector<Scalar>> next = span;
        for (size_t i = 0; i < span.size(); ++i)
            for (size_t j = i; j < span.size(); ++j) {
                Vec prod = a.multiply(vec_of_scalars(a.base, span[i]), vec_of_scalars(a.base, span[j]));
                next.push_back(scalars_of_vec(prod));
            }
        size_t ndim = span_rank(dom, next);
        if (ndim == dim) break;
        span = std::move(next);
        dim = ndim;
    }
    return dim == a.rank;
}

SurjectionData step_at(const Algebra& target, const HomotopyStep& step, const Scalar& t0) {
    SurjectionData r;
    r.target = target;
    Scalar tv = t0.to_domain(target.base.scalar_domain());
    for (const auto& im : step.images_t) {
        std::vector<Scalar> v;
        v.reserve(im.size());
        for (const auto& e : im) v.push_back(e.substitute(0, tv).constant_value());
        r.images.push_back(std::move(v));
    }
    return r;
}

namespace {

// images as constant polynomials in t
std::vector<std::vector<MultiPoly>> constant_images(const BaseRing& base,
                                                    const std::vector<std::vector<Scalar>>& images) {
    std::vector<std::vector<MultiPoly>> r;
    for (const auto& im : images) {
        std::vector<MultiPoly> row;
        for (const auto& s : im) row.push_back(ring_scalar(base, s));
        r.push_back(std::move(row));
    }
    return r;
}

}  // namespace

std::vector<HomotopyStep> straighten_coordinates(const SurjectionData& s) {
    const Algebra& a = s.target;
    const size_t d = a.rank;
    const size_t n = s.images.size();
    if (!a.base.leaf_is_field() || a.base.over_t)
        throw std::invalid_argument("straighten_coordinates: target must be over a field");
    if (d == 0) throw std::invalid_argument("straighten_coordinates: rank-0 target");
    if (n + 1 < d)
        throw std::invalid_argument("straighten_coordinates: requires n >= d - 1, got n = " +
                                    std::to_string(n) + ", d = " + std::to_string(d));
    if (!is_surjective(s))
        throw std::invalid_argument("straighten_coordinates: input surjection is not surjective");

    Domain dom = a.base.scalar_domain();
    // Surjectivity at every specialization follows because each step extends
    // a fixed surjective restriction; the endpoints are checked directly.
    BaseRing bt = a.base.with_t();
    MultiPoly t = finalg::ring_t(bt);
    MultiPoly one_minus_t = finalg::ring_one(bt) - t;

    std::vector<HomotopyStep> steps;
    std::vector<std::vector<Scalar>> cur = s.images;
    std::vector<Scalar> unit = scalars_of_vec(a.unit);

    for (size_t idx = 0; idx + 1 < d && idx < n; ++idx) {
        std::vector<std::vector<Scalar>> prefix{unit};
        for (size_t k = 0; k < idx; ++k) prefix.push_back(cur[k]);
        std::vector<std::vector<Scalar>> with_cand = prefix;
        with_cand.push_back(cur[idx]);
        if (span_rank(dom, with_cand) == with_cand.size()) continue;  // already independent

        // dropping x_{idx+1} keeps surjectivity: its image lies in the span
        // of the images that stay fixed
        SurjectionData rest = s;
        rest.images = cur;
        rest.images.erase(rest.images.begin() + static_cast<long>(idx));
        if (!is_surjective(rest))
            throw std::logic_error("straighten_coordinates: restricted surjection lost surjectivity");

        // greedy choice: first structure-basis vector outside the current span
        std::vector<Scalar> a_new;
        for (size_t j = 0; j < d; ++j) {
            std::vector<Scalar> ej(d, Scalar::zero(dom));
            ej[j] = Scalar::one(dom);
            if (!in_span(dom, prefix, ej)) {
                a_new = ej;
                break;
            }
        }
        if (a_new.empty()) throw std::logic_error("straighten_coordinates: no vector outside the span");

        HomotopyStep step;
        step.images_t = constant_images(bt, cur);
        for (size_t c = 0; c < d; ++c)
            step.images_t[idx][c] =
                step.images_t[idx][c] * one_minus_t + ring_scalar(bt, a_new[c]) * t;
        step.note = "x_" + std::to_string(idx + 1) + " -> t*a + (1-t)*pi(x_" +
                    std::to_string(idx + 1) + ")";
        cur[idx] = a_new;

        if (!is_surjective(step_at(a, step, Scalar::zero(dom))) ||
            !is_surjective(step_at(a, step, Scalar::one(dom))))
            throw std::logic_error("straighten_coordinates: endpoint surjectivity lost");
        steps.push_back(std::move(step));
    }

    // zero the tail once the first d-1 images complete the unit to a basis
    bool tail_nonzero = false;
    for (size_t idx = d - 1; idx < n; ++idx)
        for (const auto& c : cur[idx])
            if (!c.is_zero()) tail_nonzero = true;
    if (tail_nonzero) {
        std::vector<std::vector<Scalar>> head{unit};
        for (size_t k = 0; k + 1 < d; ++k) head.push_back(cur[k]);
        if (span_rank(dom, head) != d)
            throw std::logic_error("straighten_coordinates: head does not span before tail step");
        HomotopyStep step;
        step.images_t = constant_images(bt, cur);
        for (size_t idx = d - 1; idx < n; ++idx)
            for (size_t c = 0; c < d; ++c)
                step.images_t[idx][c] = step.images_t[idx][c] * one_minus_t;
        step.note = "x_j -> (1-t)*pi(x_j) for j >= d";
        for (size_t idx = d - 1; idx < n; ++idx)
            cur[idx].assign(d, Scalar::zero(dom));
        if (!is_surjective(step_at(a, step, Scalar::one(dom))))
            throw std::logic_error("straighten_coordinates: tail step lost surjectivity");
        steps.push_back(std::move(step));
    }
    return steps;
}

std::vector<std::vector<Scalar>> canonical_basepoint_markings(const BaseRing& base, size_t rank,
                                                              size_t n) {
    Domain dom = base.scalar_domain();
    std::vector<std::vector<Scalar>> m;
    for (size_t i = 0; i < n; ++i) {
        std::vector<Scalar> v(rank, Scalar::zero(dom));
        if (i + 1 < rank) v[i + 1] = Scalar::one(dom);
        m.push_back(std::move(v));
    }
    return m;
}

ReesPath rees_path_to_basepoint(const SurjectionData& s) {
    const Algebra& a = s.target;
    const size_t d = a.rank;
    const size_t n = s.images.size();
    if (d == 0) throw std::invalid_argument("rees_path_to_basepoint: rank-0 target");
    Domain dom = a.base.scalar_domain();

    std::vector<std::vector<Scalar>> cols{scalars_of_vec(a.unit)};
    for (size_t k = 0; k + 1 < d; ++k) {
        if (k >= n) throw std::invalid_argument("rees_path_to_basepoint: too few images");
        cols.push_back(s.images[k]);
    }
    if (span_rank(dom, cols) != d)
        throw std::invalid_argument(
            "rees_path_to_basepoint: images of 1, x_1..x_{d-1} do not span the target");
    for (size_t idx = d >= 1 ? d - 1 : 0; idx < n; ++idx)
        for (const auto& c : s.images[idx])
            if (!c.is_zero())
                throw std::invalid_argument("rees_path_to_basepoint: image of x_" +
                                            std::to_string(idx + 1) + " is nonzero");

    BaseChange bc = finalg::base_change_of_field(FieldMatrix::from_columns(dom, cols), a.base);
    Algebra marked = finalg::conjugate(a, bc);
    finalg::ReesFamily rf = finalg::rees_family(marked);

    BaseRing bt = a.base.with_t();
    MultiPoly t = finalg::ring_t(bt);
    ReesPath path;
    path.family = rf.family;
    path.basis = bc;
    for (size_t i = 0; i < n; ++i) {
        Vec coords = bc.new_coords(vec_of_scalars(a.base, s.images[i]));
        // a = l_0*1 + sum l_k abar_k  ->  t*a = l_0*t*1 + sum l_k X_k
        Vec mark(d, finalg::ring_zero(bt));
        mark[0] = coords[0].map_domain(dom) * t;
        for (size_t k = 1; k < d; ++k) mark[k] = coords[k].map_domain(dom);
        path.markings.push_back(std::move(mark));
    }

    // t=1 markings must generate the fiber
    Algebra fiber1 = finalg::specialize_family(path.family, Scalar::of_int(Domain::integers(), 1));
    SurjectionData at1;
    at1.target = fiber1;
    for (const auto& m : path.markings)
        at1.images.push_back(scalars_of_vec(finalg::specialize_vec(m, Scalar::of_int(Domain::integers(), 1))));
    if (!is_surjective(at1))
        throw std::logic_error("rees_path_to_basepoint: t=1 markings do not generate the fiber");
    return path;
}

}  // namespace hilbpts
