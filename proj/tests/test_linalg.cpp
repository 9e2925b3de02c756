#include <random>
#include <vector>

#include "doctest.h"

#include "crystal/linalg.hpp"
#include "support/oracles.hpp"

using namespace crystal;
using namespace crystal::testing;

namespace {

IntMatrix random_int_matrix(std::mt19937_64& rng, int maxdim, long span) {
    int r = static_cast<int>(rng() % maxdim) + 1;
    int c = static_cast<int>(rng() % maxdim) + 1;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = Int(static_cast<long>(rng() % (2 * span + 1)) - span);
    return m;
}

bool is_snf_shape(const IntMatrix& s) {
    std::vector<Int> diag;
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j) {
            if (i == j) diag.push_back(s.at(i, j));
            else if (sign(s.at(i, j)) != 0) return false;
        }
    for (size_t k = 0; k + 1 < diag.size(); ++k) {
        if (sign(diag[k]) < 0 || sign(diag[k + 1]) < 0) return false;
        if (sign(diag[k]) == 0 && sign(diag[k + 1]) != 0) return false;
        if (sign(diag[k]) != 0 && sign(Int(diag[k + 1] % diag[k])) != 0) return false;
    }
    return true;
}

bool is_hnf_shape(const IntMatrix& h) {
    int prev = -1;
    bool seen_zero = false;
    for (int i = 0; i < h.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < h.cols(); ++j)
            if (sign(h.at(i, j)) != 0) { p = j; break; }
        if (p < 0) { seen_zero = true; continue; }
        if (seen_zero) return false; // zero rows must sit at the bottom
        if (p <= prev) return false;
        if (sign(h.at(i, p)) <= 0) return false;
        for (int k = 0; k < i; ++k)
            if (sign(h.at(k, p)) < 0 || h.at(k, p) >= h.at(i, p)) return false;
        prev = p;
    }
    return true;
}

} // namespace

TEST_CASE("bareiss determinant matches cofactor expansion") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        int n = static_cast<int>(rng() % 6) + 1;
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = Int(static_cast<long>(rng() % 19) - 9);
        CHECK(bareiss_determinant(m) == cofactor_determinant(m));
    }
    CHECK(bareiss_determinant(IntMatrix::identity(4)) == 1);
}

TEST_CASE("smith normal form: exact factorization, unimodular transforms") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 150; ++t) {
        IntMatrix m = random_int_matrix(rng, 5, 6);
        SmithResult s = smith_normal_form(m);
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
        CHECK(s.u.mul(m).mul(s.v) == s.s);
        CHECK(is_snf_shape(s.s));
        // idempotence: the SNF of an SNF is itself
        CHECK(smith_normal_form(s.s).s == s.s);
    }
}

TEST_CASE("hermite normal form: exact factorization, canonical shape") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 150; ++t) {
        IntMatrix m = random_int_matrix(rng, 5, 6);
        HermiteResult h = hermite_normal_form(m);
        CHECK(is_unimodular(h.u));
        CHECK(h.u.mul(m) == h.h);
        CHECK(is_hnf_shape(h.h));
        CHECK(h.rank == rank_int(m));
        // idempotence on the canonical form
        IntMatrix c = hnf_canonical(m);
        CHECK(hnf_canonical(c) == c);
        CHECK(c.rows() == h.rank);
    }
}

TEST_CASE("hnf canonical is a lattice invariant") {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 100; ++t) {
        IntMatrix m = random_int_matrix(rng, 4, 5);
        // act by a random unimodular matrix on the left: same row lattice
        int r = m.rows();
        IntMatrix u = IntMatrix::identity(r);
        for (int k = 0; k < 6; ++k) {
            int i = static_cast<int>(rng() % r), j = static_cast<int>(rng() % r);
            if (i == j) continue;
            Int f(static_cast<long>(rng() % 5) - 2);
            for (int c = 0; c < r; ++c) u.at(i, c) += f * u.at(j, c);
        }
        CHECK(is_unimodular(u));
        CHECK(hnf_canonical(u.mul(m)) == hnf_canonical(m));
    }
}

TEST_CASE("integer kernel is a saturated exact kernel") {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 120; ++t) {
        IntMatrix m = random_int_matrix(rng, 4, 4);
        IntMatrix k = integer_kernel(m);
        CHECK(k.rows() == m.cols());
        CHECK(k.cols() == m.cols() - rank_int(m));
        if (k.cols() == 0) continue;
        IntMatrix prod = m.mul(k);
        for (int i = 0; i < prod.rows(); ++i)
            for (int j = 0; j < prod.cols(); ++j) CHECK(sign(prod.at(i, j)) == 0);
        CHECK(brute_minor_gcd(k.transposed()) == 1);
    }
}

TEST_CASE("saturate_rows yields a direct summand containing the rows") {
    std::mt19937_64 rng(26);
    for (int t = 0; t < 120; ++t) {
        IntMatrix m = random_int_matrix(rng, 4, 5);
        int r = rank_int(m);
        if (r == 0) continue;
        IntMatrix s = saturate_rows(m);
        CHECK(s.rows() == r);
        CHECK(s.cols() == m.cols());
        CHECK(brute_minor_gcd(s) == 1);
        // every original row lies in the saturation
        for (int i = 0; i < m.rows(); ++i) {
            std::vector<Int> row(m.cols());
            for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
            std::vector<Int> coeff;
            CHECK(hnf_coefficients(hnf_canonical(s), row, &coeff));
        }
    }
}

TEST_CASE("unimodular inverse") {
    std::mt19937_64 rng(27);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng() % 4) + 1;
        IntMatrix u = IntMatrix::identity(n);
        for (int k = 0; k < 8; ++k) {
            int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
            if (i == j) continue;
            Int f(static_cast<long>(rng() % 7) - 3);
            for (int c = 0; c < n; ++c) u.at(i, c) += f * u.at(j, c);
        }
        IntMatrix inv = unimodular_inverse(u);
        CHECK(u.mul(inv) == IntMatrix::identity(n));
        CHECK(inv.mul(u) == IntMatrix::identity(n));
    }
    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    CHECK(!is_unimodular(two));
}

TEST_CASE("rational rref, solve, inverse, nullspace") {
    std::mt19937_64 rng(28);
    for (int t = 0; t < 80; ++t) {
        int n = static_cast<int>(rng() % 4) + 1;
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = make_rational(static_cast<long>(rng() % 11) - 5,
                                           static_cast<long>(rng() % 3) + 1);
        if (m.rank() < n) {
            // singular square matrix: nullspace vectors must be annihilated
            for (const auto& v : m.nullspace()) {
                std::vector<Rational> mv = m.mul_vec(v);
                for (const auto& x : mv) CHECK(sign(x) == 0);
            }
            continue;
        }
        RatMatrix inv = m.inverse();
        CHECK(m.mul(inv) == RatMatrix::identity(n));
        std::vector<Rational> rhs(n);
        for (int i = 0; i < n; ++i) rhs[i] = make_rational(static_cast<long>(rng() % 9) - 4);
        std::vector<Rational> x = m.solve(rhs);
        CHECK(m.mul_vec(x) == rhs);
    }
}

TEST_CASE("nullspace dimension complements rank") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 80; ++t) {
        int r = static_cast<int>(rng() % 4) + 1, c = static_cast<int>(rng() % 4) + 1;
        RatMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                m.at(i, j) = make_rational(static_cast<long>(rng() % 7) - 3);
        CHECK(static_cast<int>(m.nullspace().size()) == c - m.rank());
    }
}
