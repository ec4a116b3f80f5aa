#include "hilbalg/matrix.hpp"

#include <algorithm>

namespace corealg {

FieldMatrix FieldMatrix::identity(const Domain& dom, size_t n) {
    FieldMatrix m(dom, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(dom);
    return m;
}

FieldMatrix FieldMatrix::from_columns(const Domain& dom,
                                      const std::vector<std::vector<Scalar>>& cols) {
    if (cols.empty()) return FieldMatrix(dom, 0, 0);
    FieldMatrix m(dom, cols[0].size(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows()) throw std::invalid_argument("from_columns: ragged columns");
        for (size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_ || dom_ != o.dom_) throw std::invalid_argument("FieldMatrix*: shape/domain mismatch");
    FieldMatrix r(dom_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

std::vector<Scalar> FieldMatrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("FieldMatrix::apply: size mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero(dom_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && dom_ == o.dom_ && a_ == o.a_;
}

std::vector<Scalar> FieldMatrix::column(size_t j) const {
    std::vector<Scalar> c(rows_, Scalar::zero(dom_));
    for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<size_t> FieldMatrix::rref(FieldMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols_ && row < m.rows_; ++col) {
        size_t pr = row;
        while (pr < m.rows_ && m.at(pr, col).is_zero()) ++pr;
        if (pr == m.rows_) continue;
        for (size_t j = 0; j < m.cols_; ++j) std::swap(m.at(row, j), m.at(pr, j));
        Scalar inv = m.at(row, col).inverse();
        for (size_t j = col; j < m.cols_; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (size_t i = 0; i < m.rows_; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (size_t j = col; j < m.cols_; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t FieldMatrix::rank() const {
    FieldMatrix m = *this;
    return rref(m).size();
}

std::vector<std::vector<Scalar>> FieldMatrix::kernel_basis() const {
    FieldMatrix m = *this;
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(dom_));
        v[f] = Scalar::one(dom_);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> FieldMatrix::solve(const std::vector<Scalar>& rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("solve: rhs size mismatch");
    FieldMatrix m(dom_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        m.at(i, cols_) = rhs[i];
    }
    std::vector<size_t> pivots = rref(m);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(cols_, Scalar::zero(dom_));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m.at(r, cols_);
    return x;
}

std::optional<FieldMatrix> FieldMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    FieldMatrix m(dom_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        m.at(i, cols_ + i) = Scalar::one(dom_);
    }
    std::vector<size_t> pivots = rref(m);
    if (pivots.size() != rows_) return std::nullopt;
    for (size_t r = 0; r < rows_; ++r)
        if (pivots[r] != r) return std::nullopt;
    FieldMatrix inv(dom_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = m.at(i, cols_ + j);
    return inv;
}

Scalar FieldMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: not square");
    FieldMatrix m = *this;
    Scalar d = Scalar::one(dom_);
    for (size_t col = 0; col < cols_; ++col) {
        size_t pr = col;
        while (pr < rows_ && m.at(pr, col).is_zero()) ++pr;
        if (pr == rows_) return Scalar::zero(dom_);
        if (pr != col) {
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(pr, j));
            d = -d;
        }
        d = d * m.at(col, col);
        Scalar inv = m.at(col, col).inverse();
        for (size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) * inv;
            for (size_t j = col; j < cols_; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return d;
}

// ---------------------------------------------------------------------------

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix*: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool IntMatrix::is_diagonal() const {
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
    std::vector<mpz_class> r(rows_, 0);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

SmithForm IntMatrix::smith_normal_form() const {
    IntMatrix d = *this;
    IntMatrix u = identity(rows_);
    IntMatrix v = identity(cols_);
    const size_t n = std::min(rows_, cols_);

    auto swap_rows = [&](size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < d.cols_; ++j) std::swap(d.at(a, j), d.at(b, j));
        for (size_t j = 0; j < u.cols_; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto swap_cols = [&](size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < d.rows_; ++i) std::swap(d.at(i, a), d.at(i, b));
        for (size_t i = 0; i < v.rows_; ++i) std::swap(v.at(i, a), v.at(i, b));
    };
    auto add_row = [&](size_t dst, size_t src, const mpz_class& f) {
        // row dst += f * row src
        for (size_t j = 0; j < d.cols_; ++j) d.at(dst, j) += f * d.at(src, j);
        for (size_t j = 0; j < u.cols_; ++j) u.at(dst, j) += f * u.at(src, j);
    };
    auto add_col = [&](size_t dst, size_t src, const mpz_class& f) {
        for (size_t i = 0; i < d.rows_; ++i) d.at(i, dst) += f * d.at(i, src);
        for (size_t i = 0; i < v.rows_; ++i) v.at(i, dst) += f * v.at(i, src);
    };
    auto negate_row = [&](size_t r) {
        for (size_t j = 0; j < d.cols_; ++j) d.at(r, j) = -d.at(r, j);
        for (size_t j = 0; j < u.cols_; ++j) u.at(r, j) = -u.at(r, j);
    };

    for (size_t s = 0; s < n; ++s) {
        while (true) {
            // Smallest nonzero |entry| in the trailing submatrix, first by
            // position on ties, keeps the reduction deterministic.
            size_t pi = s, pj = s;
            mpz_class best = 0;
            for (size_t i = s; i < rows_; ++i)
                for (size_t j = s; j < cols_; ++j) {
                    if (d.at(i, j) == 0) continue;
                    mpz_class a = abs(d.at(i, j));
                    if (best == 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break;  // submatrix is zero
            swap_rows(s, pi);
            swap_cols(s, pj);
            if (d.at(s, s) < 0) negate_row(s);

            bool clean = true;
            for (size_t i = s + 1; i < rows_; ++i) {
                if (d.at(i, s) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, s).get_mpz_t(), d.at(s, s).get_mpz_t());
                add_row(i, s, -q);
                if (d.at(i, s) != 0) clean = false;
            }
            for (size_t j = s + 1; j < cols_; ++j) {
                if (d.at(s, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(s, j).get_mpz_t(), d.at(s, s).get_mpz_t());
                add_col(j, s, -q);
                if (d.at(s, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce d_s | every trailing entry.
            bool divides_all = true;
            for (size_t i = s + 1; i < rows_ && divides_all; ++i)
                for (size_t j = s + 1; j < cols_ && divides_all; ++j)
                    if (d.at(i, j) % d.at(s, s) != 0) {
                        add_row(s, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
    }
    return SmithForm{std::move(d), std::move(u), std::move(v)};
}

mpz_class IntMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: not square");
    if (rows_ == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix m = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < rows_; ++k) {
        if (m.at(k, k) == 0) {
            size_t pr = k + 1;
            while (pr < rows_ && m.at(pr, k) == 0) ++pr;
            if (pr == rows_) return 0;
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(k, j), m.at(pr, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < rows_; ++i)
            for (size_t j = k + 1; j < cols_; ++j) {
                mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign * m.at(rows_ - 1, cols_ - 1);
}

size_t IntMatrix::rank() const {
    SmithForm s = smith_normal_form();
    size_t r = 0;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i)
        if (s.d.at(i, i) != 0) ++r;
    return r;
}

std::vector<std::vector<mpz_class>> IntMatrix::kernel_lattice() const {
    SmithForm s = smith_normal_form();
    size_t r = 0;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i)
        if (s.d.at(i, i) != 0) ++r;
    std::vector<std::vector<mpz_class>> basis;
    for (size_t j = r; j < cols_; ++j) {
        std::vector<mpz_class> v(cols_, 0);
        for (size_t i = 0; i < cols_; ++i) v[i] = s.v.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<mpz_class>> IntMatrix::solve(const std::vector<mpz_class>& rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("IntMatrix::solve: rhs size mismatch");
    SmithForm s = smith_normal_form();
    std::vector<mpz_class> b = s.u.apply(rhs);
    std::vector<mpz_class> y(cols_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        mpz_class di = (i < std::min(rows_, cols_)) ? s.d.at(i, i) : mpz_class(0);
        if (di == 0) {
            if (b[i] != 0) return std::nullopt;
        } else {
            if (b[i] % di != 0) return std::nullopt;
            y[i] = b[i] / di;
        }
    }
    return s.v.apply(y);
}

std::optional<IntMatrix> IntMatrix::inverse_unimodular() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse_unimodular: not square");
    SmithForm s = smith_normal_form();
    for (size_t i = 0; i < rows_; ++i)
        if (s.d.at(i, i) != 1) return std::nullopt;
    return s.v * s.u;  // U M V = I  =>  M^{-1} = V U
}

}  // namespace corealg
