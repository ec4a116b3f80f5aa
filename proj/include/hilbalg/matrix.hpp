#pragma once

#include <optional>
#include <vector>

#include "hilbalg/scalar.hpp"

namespace corealg {

/// Dense matrix over a field (Q or F_p).
class FieldMatrix {
public:
    FieldMatrix(Domain dom, size_t rows, size_t cols)
        : dom_(std::move(dom)), rows_(rows), cols_(cols),
          a_(rows * cols, Scalar::zero(dom_)) {
        if (!dom_.is_field()) throw std::invalid_argument("FieldMatrix: entries must lie in a field");
    }
    static FieldMatrix identity(const Domain& dom, size_t n);
    static FieldMatrix from_columns(const Domain& dom,
                                    const std::vector<std::vector<Scalar>>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Domain& domain() const { return dom_; }
    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    FieldMatrix operator*(const FieldMatrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    bool operator==(const FieldMatrix& o) const;

    size_t rank() const;
    /// Basis of the right kernel {v : M v = 0}; count = cols - rank.
    std::vector<std::vector<Scalar>> kernel_basis() const;
    /// One solution of M x = rhs, or nullopt if inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& rhs) const;
    std::optional<FieldMatrix> inverse() const;
    Scalar det() const;
    std::vector<Scalar> column(size_t j) const;

private:
    // Reduced row echelon form; returns pivot column per pivot row.
    static std::vector<size_t> rref(FieldMatrix& m);

    Domain dom_;
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

struct SmithForm;

/// Dense matrix over the integers.
class IntMatrix {
public:
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    static IntMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    mpz_class& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;
    bool is_diagonal() const;

    /// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
    SmithForm smith_normal_form() const;

    mpz_class det() const;  // Bareiss fraction-free elimination
    size_t rank() const;
    /// Basis of the full kernel lattice {v in Z^cols : M v = 0}.
    std::vector<std::vector<mpz_class>> kernel_lattice() const;
    /// Integer solution of M x = rhs, or nullopt if none exists.
    std::optional<std::vector<mpz_class>> solve(const std::vector<mpz_class>& rhs) const;
    /// Exact inverse when the matrix is unimodular, nullopt otherwise.
    std::optional<IntMatrix> inverse_unimodular() const;
    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;

private:
    size_t rows_, cols_;
    std::vector<mpz_class> a_;
};

struct SmithForm {
    IntMatrix d, u, v;
};

}  // namespace corealg
