#include "crystal/linalg.hpp"

#include <utility>

#include "crystal/error.hpp"

namespace crystal {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    check_internal(cols_ == o.rows_, "IntMatrix::mul shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& s = at(i, k);
            if (sgn(s) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += s * o.at(k, j);
        }
    return r;
}

std::vector<Int> IntMatrix::mul_vec(const std::vector<Int>& x) const {
    check_internal(static_cast<int>(x.size()) == cols_, "IntMatrix::mul_vec shape mismatch");
    std::vector<Int> y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

namespace {

// row_i -= q * row_t, applied to m
void row_axpy(IntMatrix& m, int i, int t, const Int& q) {
    if (sgn(q) == 0) return;
    for (int k = 0; k < m.cols(); ++k) m.at(i, k) -= q * m.at(t, k);
}

void col_axpy(IntMatrix& m, int j, int t, const Int& q) {
    if (sgn(q) == 0) return;
    for (int k = 0; k < m.rows(); ++k) m.at(k, j) -= q * m.at(k, t);
}

void negate_row(IntMatrix& m, int i) {
    for (int k = 0; k < m.cols(); ++k) m.at(i, k) = -m.at(i, k);
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const int r = m.rows(), c = m.cols();
    SmithResult res{m, IntMatrix::identity(r), IntMatrix::identity(c)};
    IntMatrix& s = res.s;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const int steps = std::min(r, c);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing submatrix into (t, t)
            int pi = -1, pj = -1;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    if (sgn(s.at(i, j)) == 0) continue;
                    if (pi < 0 || abs_int(s.at(i, j)) < abs_int(s.at(pi, pj))) { pi = i; pj = j; }
                }
            if (pi < 0) { t = steps; break; } // trailing block is zero
            if (pi != t) { s.swap_rows(pi, t); u.swap_rows(pi, t); }
            if (pj != t) { s.swap_cols(pj, t); v.swap_cols(pj, t); }

            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (sgn(s.at(i, t)) == 0) continue;
                Int q = floor_div(s.at(i, t), s.at(t, t));
                row_axpy(s, i, t, q);
                row_axpy(u, i, t, q);
                if (sgn(s.at(i, t)) != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (sgn(s.at(t, j)) == 0) continue;
                Int q = floor_div(s.at(t, j), s.at(t, t));
                col_axpy(s, j, t, q);
                col_axpy(v, j, t, q);
                if (sgn(s.at(t, j)) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: the pivot must divide every later entry
            bool fixed = false;
            for (int i = t + 1; i < r && !fixed; ++i)
                for (int j = t + 1; j < c && !fixed; ++j)
                    if (!mpz_divisible_p(s.at(i, j).get_mpz_t(), s.at(t, t).get_mpz_t())) {
                        // fold row i into row t and restart the pivot hunt
                        Int minus_one(-1);
                        row_axpy(s, t, i, minus_one);
                        row_axpy(u, t, i, minus_one);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (t >= steps) break;
        if (sgn(s.at(t, t)) < 0) { negate_row(s, t); negate_row(u, t); }
    }
    return res;
}

HermiteResult hermite_normal_form(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    HermiteResult res{m, IntMatrix::identity(rows), 0};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    int r = 0;

    for (int j = 0; j < cols && r < rows; ++j) {
        for (;;) {
            int best = -1;
            for (int i = r; i < rows; ++i) {
                if (sgn(h.at(i, j)) == 0) continue;
                if (best < 0 || abs_int(h.at(i, j)) < abs_int(h.at(best, j))) best = i;
            }
            if (best < 0) break;
            if (best != r) { h.swap_rows(best, r); u.swap_rows(best, r); }
            bool any = false;
            for (int i = r + 1; i < rows; ++i) {
                if (sgn(h.at(i, j)) == 0) continue;
                Int q = floor_div(h.at(i, j), h.at(r, j));
                row_axpy(h, i, r, q);
                row_axpy(u, i, r, q);
                if (sgn(h.at(i, j)) != 0) any = true;
            }
            if (!any) break;
        }
        if (sgn(h.at(r, j)) == 0) continue;
        if (sgn(h.at(r, j)) < 0) { negate_row(h, r); negate_row(u, r); }
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, j), h.at(r, j));
            row_axpy(h, i, r, q);
            row_axpy(u, i, r, q);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

IntMatrix hnf_canonical(const IntMatrix& m) {
    HermiteResult hr = hermite_normal_form(m);
    IntMatrix out(hr.rank, m.cols());
    for (int i = 0; i < hr.rank; ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = hr.h.at(i, j);
    return out;
}

Int bareiss_determinant(const IntMatrix& m) {
    check_internal(m.rows() == m.cols(), "bareiss_determinant needs a square matrix");
    const int n = m.rows();
    if (n == 0) return Int(1);
    IntMatrix b = m;
    int sign_flips = 0;
    Int prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (sgn(b.at(k, k)) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (sgn(b.at(i, k)) != 0) { piv = i; break; }
            if (piv < 0) return Int(0);
            b.swap_rows(k, piv);
            ++sign_flips;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
                mpz_divexact(b.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = b.at(k, k);
    }
    Int det = b.at(n - 1, n - 1);
    return (sign_flips % 2 == 0) ? det : Int(-det);
}

int rank_int(const IntMatrix& m) { return hermite_normal_form(m).rank; }

IntMatrix integer_kernel(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    IntMatrix w = m;
    IntMatrix v = IntMatrix::identity(cols);
    int done = 0;

    for (int i = 0; i < rows && done < cols; ++i) {
        for (;;) {
            int best = -1;
            for (int j = done; j < cols; ++j) {
                if (sgn(w.at(i, j)) == 0) continue;
                if (best < 0 || abs_int(w.at(i, j)) < abs_int(w.at(i, best))) best = j;
            }
            if (best < 0) break;
            if (best != done) { w.swap_cols(best, done); v.swap_cols(best, done); }
            bool any = false;
            for (int j = done + 1; j < cols; ++j) {
                if (sgn(w.at(i, j)) == 0) continue;
                Int q = floor_div(w.at(i, j), w.at(i, done));
                col_axpy(w, j, done, q);
                col_axpy(v, j, done, q);
                if (sgn(w.at(i, j)) != 0) any = true;
            }
            if (!any) break;
        }
        if (sgn(w.at(i, done)) != 0) ++done;
        if (done == cols) break;
    }

    IntMatrix kernel(cols, cols - done);
    for (int j = done; j < cols; ++j)
        for (int i = 0; i < cols; ++i) kernel.at(i, j - done) = v.at(i, j);
    return kernel;
}

IntMatrix saturate_rows(const IntMatrix& m) {
    IntMatrix b = integer_kernel(m);              // cols x k
    IntMatrix sat_cols = integer_kernel(b.transposed()); // cols x r
    return sat_cols.transposed();
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    check_internal(u.rows() == u.cols(), "unimodular_inverse needs a square matrix");
    const int n = u.rows();
    Int det = bareiss_determinant(u);
    check_internal(det == 1 || det == -1, "unimodular_inverse of a non-unimodular matrix");
    IntMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc) = u.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = bareiss_determinant(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(i, j) = cof * det; // dividing by det == multiplying, det is +-1
        }
    return inv;
}

bool is_unimodular(const IntMatrix& u) {
    if (u.rows() != u.cols()) return false;
    Int det = bareiss_determinant(u);
    return det == 1 || det == -1;
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rational(m.at(i, j));
    return r;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::mul(const RatMatrix& o) const {
    check_internal(cols_ == o.rows_, "RatMatrix::mul shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& s = at(i, k);
            if (sgn(s) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += s * o.at(k, j);
        }
    return r;
}

std::vector<Rational> RatMatrix::mul_vec(const std::vector<Rational>& x) const {
    check_internal(static_cast<int>(x.size()) == cols_, "RatMatrix::mul_vec shape mismatch");
    std::vector<Rational> y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

std::vector<int> RatMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int piv = -1;
        for (int i = row; i < rows_; ++i)
            if (sgn(at(i, col)) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int k = 0; k < cols_; ++k) std::swap(at(piv, k), at(row, k));
        Rational inv = 1 / at(row, col);
        for (int k = col; k < cols_; ++k) at(row, k) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || sgn(at(i, col)) == 0) continue;
            Rational f = at(i, col);
            for (int k = col; k < cols_; ++k) at(i, k) -= f * at(row, k);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int RatMatrix::rank() const {
    RatMatrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

std::vector<std::vector<Rational>> RatMatrix::nullspace() const {
    RatMatrix r = *this;
    std::vector<int> pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> vec(cols_);
        vec[free] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            vec[pivots[pr]] = -r.at(static_cast<int>(pr), free);
        basis.push_back(std::move(vec));
    }
    return basis;
}

std::vector<Rational> RatMatrix::solve(const std::vector<Rational>& rhs) const {
    check_internal(static_cast<int>(rhs.size()) == rows_, "RatMatrix::solve shape mismatch");
    RatMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = rhs[i];
    }
    std::vector<int> pivots = aug.rref();
    for (int p : pivots)
        check_internal(p != cols_, "RatMatrix::solve on an inconsistent system");
    std::vector<Rational> x(cols_);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(static_cast<int>(pr), cols_);
    return x;
}

RatMatrix RatMatrix::inverse() const {
    check_internal(rows_ == cols_, "RatMatrix::inverse needs a square matrix");
    RatMatrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    std::vector<int> pivots = aug.rref();
    check_internal(static_cast<int>(pivots.size()) == rows_ && pivots.back() == rows_ - 1,
                   "RatMatrix::inverse of a singular matrix");
    RatMatrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

} // namespace crystal
