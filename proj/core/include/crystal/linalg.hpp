#pragma once

#include <vector>

#include "crystal/rational.hpp"

namespace crystal {

// Dense integer matrix, row major. Sizes here are desk scale (at most a few
// dozen rows/cols), so the algorithms below favor exactness and determinism
// over asymptotics.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    IntMatrix transposed() const;
    IntMatrix mul(const IntMatrix& o) const;
    std::vector<Int> mul_vec(const std::vector<Int>& x) const;
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct SmithResult {
    IntMatrix s; // diagonal, nonnegative, divisibility chain
    IntMatrix u; // unimodular, rows x rows
    IntMatrix v; // unimodular, cols x cols; u * m * v == s
};

struct HermiteResult {
    IntMatrix h; // row-style HNF of m, same shape, zero rows at the bottom
    IntMatrix u; // unimodular; u * m == h
    int rank = 0;
};

SmithResult smith_normal_form(const IntMatrix& m);
HermiteResult hermite_normal_form(const IntMatrix& m);

// HNF with zero rows dropped: the canonical key for a row lattice.
IntMatrix hnf_canonical(const IntMatrix& m);

Int bareiss_determinant(const IntMatrix& m); // square input
int rank_int(const IntMatrix& m);

// Basis of { x in Z^cols : m x = 0 }, as columns. Always a saturated lattice.
IntMatrix integer_kernel(const IntMatrix& m);

// Basis (rows) of the saturation of the row lattice of m inside Z^cols.
IntMatrix saturate_rows(const IntMatrix& m);

// Inverse of a unimodular matrix (|det| = 1), exact.
IntMatrix unimodular_inverse(const IntMatrix& u);

bool is_unimodular(const IntMatrix& u);

// Dense rational matrix with exact Gauss-Jordan elimination.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static RatMatrix identity(int n);
    static RatMatrix from_int(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    RatMatrix transposed() const;
    RatMatrix mul(const RatMatrix& o) const;
    std::vector<Rational> mul_vec(const std::vector<Rational>& x) const;

    // In-place reduced row echelon form; returns pivot column indices.
    // Deterministic: scans columns left to right, takes the first nonzero
    // entry at or below the current row as pivot.
    std::vector<int> rref();

    int rank() const;

    // Basis of the right nullspace, one vector per free column in ascending
    // column order, each with coefficient 1 at its free column.
    std::vector<std::vector<Rational>> nullspace() const;

    // Solves m x = rhs; errors if the system is inconsistent (internal use on
    // full-rank systems only).
    std::vector<Rational> solve(const std::vector<Rational>& rhs) const;

    RatMatrix inverse() const; // square nonsingular

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

} // namespace crystal
