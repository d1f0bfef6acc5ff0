#include "framehs/linalg.hpp"
#include "framehs/random.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace framehs;

namespace {
const cplx I{0.0, 1.0};
} // namespace

TEST_CASE("frobenius_inner") {
    CHECK(frobenius_inner(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == cplx(2.0));
    CHECK(frobenius_inner(ComplexMatrix{{1, 2}, {3, 4}}, ComplexMatrix::identity(2)) == cplx(5.0));
    CHECK(frobenius_inner(ComplexMatrix{{I, 0}, {0, 0}}, ComplexMatrix{{I, 0}, {0, 0}}) == cplx(1.0));
    CHECK_THROWS_AS(frobenius_inner(ComplexMatrix(2, 2), ComplexMatrix(2, 3)), DimensionError);

    SUBCASE("self inner product is the squared vec norm") {
        Rng rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            const ComplexMatrix a = random_matrix(1 + trial % 5, 1 + trial % 3, rng);
            const cplx self = frobenius_inner(a, a);
            const double vn = norm(vec_cols(a));
            CHECK(self.imag() == 0.0);
            CHECK(self.real() >= 0.0);
            CHECK(std::abs(self.real() - vn * vn) <= 1e-13 * vn * vn);
        }
    }
    SUBCASE("linear in the first slot, conjugate linear in the second") {
        Rng rng(12);
        const ComplexMatrix a = random_matrix(3, 2, rng);
        const ComplexMatrix b = random_matrix(3, 2, rng);
        const cplx alpha{0.3, -1.2};
        CHECK(std::abs(frobenius_inner(alpha * a, b) - alpha * frobenius_inner(a, b)) < 1e-12);
        CHECK(std::abs(frobenius_inner(a, alpha * b) - std::conj(alpha) * frobenius_inner(a, b)) <
              1e-12);
    }
}

TEST_CASE("vec_cols and mat_cols") {
    const cplx a{1, 1}, b{2, -1}, c{0.5, 0}, d{-3, 2}, e{4, 0}, f{0, -7};
    CHECK(vec_cols(ComplexMatrix{{1, 2}, {3, 4}}) == ComplexVector{1, 3, 2, 4});
    CHECK(vec_cols(ComplexMatrix{{a, b, c}}) == ComplexVector{a, b, c});
    CHECK(vec_cols(ComplexMatrix{{a}, {b}, {c}}) == ComplexVector{a, b, c});

    CHECK(mat_cols(ComplexVector{1, 3, 2, 4}, 2) == ComplexMatrix{{1, 2}, {3, 4}});
    CHECK(mat_cols(ComplexVector{a, b, c}, 3) == ComplexMatrix{{a}, {b}, {c}});
    CHECK(mat_cols(ComplexVector{a, b, c, d, e, f}, 3) == ComplexMatrix{{a, d}, {b, e}, {c, f}});
    CHECK_THROWS_AS(mat_cols(ComplexVector{1, 2, 3}, 2), DimensionError);
    CHECK_THROWS_AS(mat_cols(ComplexVector{1, 2}, 0), DimensionError);

    SUBCASE("round trip is bit exact for every shape up to 8x8") {
        Rng rng(3);
        for (std::size_t r = 1; r <= 8; ++r) {
            for (std::size_t cols = 1; cols <= 8; ++cols) {
                const ComplexMatrix m = random_matrix(r, cols, rng);
                CHECK(mat_cols(vec_cols(m), r) == m);
            }
        }
    }
}

TEST_CASE("kronecker") {
    const ComplexMatrix b{{1, 2}, {3, I}};
    const ComplexMatrix blockdiag{{1, 2, 0, 0}, {3, I, 0, 0}, {0, 0, 1, 2}, {0, 0, 3, I}};
    CHECK(kronecker(ComplexMatrix::identity(2), b) == blockdiag);
    const ComplexMatrix a{{1, -2, I}, {0.5, 3, 1}};
    CHECK(kronecker(a, ComplexMatrix{{1}}) == a);

    SUBCASE("index formula C(i,j) = a(i/r, j/s) b(i%r, j%s)") {
        Rng rng(5);
        const ComplexMatrix x = random_matrix(2, 3, rng);
        const ComplexMatrix y = random_matrix(3, 2, rng);
        const ComplexMatrix k = kronecker(x, y);
        REQUIRE(k.rows() == 6);
        REQUIRE(k.cols() == 6);
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                CHECK(k(i, j) == x(i / 3, j / 2) * y(i % 3, j % 2));
            }
        }
    }

    SUBCASE("(A^T (x) B) vec(C) = vec(B C A)") {
        Rng rng(17);
        for (int trial = 0; trial < 200; ++trial) {
            std::uniform_int_distribution<std::size_t> dim(1, 6);
            const std::size_t p = dim(rng), q = dim(rng), r = dim(rng), s = dim(rng);
            const ComplexMatrix a = random_matrix(r, s, rng);
            const ComplexMatrix b = random_matrix(p, q, rng);
            const ComplexMatrix c = random_matrix(q, r, rng);
            const ComplexVector lhs = kronecker(a.transpose(), b) * vec_cols(c);
            const ComplexVector rhs = vec_cols(oracle::matmul(oracle::matmul(b, c), a));
            const double scale = 1.0 + frobenius_norm(b) * frobenius_norm(c) * frobenius_norm(a);
            CHECK(norm(lhs - rhs) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("pinv") {
    SUBCASE("invertible matrix") {
        const ComplexMatrix m{{2, 1}, {I, 3}};
        const ComplexMatrix p = pinv(m);
        CHECK(frobenius_norm(oracle::matmul(p, m) - ComplexMatrix::identity(2)) <= 1e-12);
    }
    SUBCASE("zero matrix gives zero of transposed shape") {
        const ComplexMatrix p = pinv(ComplexMatrix(2, 3));
        CHECK(p.rows() == 3);
        CHECK(p.cols() == 2);
        CHECK(frobenius_norm(p) == 0.0);
    }
    SUBCASE("rank one u v^H maps to v u^H") {
        Rng rng(21);
        ComplexVector u = random_vector(4, rng);
        ComplexVector v = random_vector(3, rng);
        u = (1.0 / norm(u)) * u;
        v = (1.0 / norm(v)) * v;
        ComplexMatrix uvh(4, 3), vuh(3, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                uvh(i, j) = u[i] * std::conj(v[j]);
                vuh(j, i) = v[j] * std::conj(u[i]);
            }
        }
        const ComplexMatrix p = pinv(uvh);
        CHECK(oracle::max_abs_diff(p, vuh) <= 1e-12);
        CHECK(frobenius_norm(oracle::matmul(oracle::matmul(uvh, p), uvh) - uvh) <= 1e-12);
    }
    SUBCASE("Penrose identities on random rank-deficient matrices") {
        Rng rng(22);
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<std::size_t> dim(1, 7);
            const std::size_t rows = dim(rng), cols = dim(rng), inner = dim(rng);
            const ComplexMatrix m =
                oracle::matmul(random_matrix(rows, inner, rng), random_matrix(inner, cols, rng));
            const ComplexMatrix p = pinv(m);
            const ComplexMatrix mp = oracle::matmul(m, p);
            const ComplexMatrix pm = oracle::matmul(p, m);
            CHECK(frobenius_norm(oracle::matmul(mp, m) - m) <= 1e-10 * frobenius_norm(m));
            CHECK(frobenius_norm(oracle::matmul(pm, p) - p) <= 1e-10 * frobenius_norm(p));
            CHECK(frobenius_norm(mp - mp.adjoint()) <= 1e-10);
            CHECK(frobenius_norm(pm - pm.adjoint()) <= 1e-10);
        }
    }
    SUBCASE("truncation threshold") {
        const ComplexMatrix m{{1, 0}, {0, 1e-9}};
        CHECK(numerical_rank(m) == 2);
        CHECK(numerical_rank(m, 1e-6) == 1);
        CHECK(std::abs(pinv(m, 1e-6)(1, 1)) == 0.0);
    }
}

TEST_CASE("counted kernels: documented examples") {
    OpCount ctr;
    counted_inner(ComplexVector{I}, ComplexVector{2}, ctr);
    CHECK(ctr.count == 1);
    ctr.reset();
    counted_inner(ComplexVector{1, 2, 3, 4}, ComplexVector{1, 1, 1, 1}, ctr);
    CHECK(ctr.count == 7);
    ctr.reset();
    CHECK(counted_inner(ComplexVector{1, 0, 0}, ComplexVector{0, 1, 0}, ctr) == cplx(0.0));
    CHECK(ctr.count == 5);

    ctr.reset();
    counted_matvec(ComplexMatrix(2, 3, 1.0), ComplexVector{1, 2, 3}, ctr);
    CHECK(ctr.count == 10);
    ctr.reset();
    const ComplexVector x{1, I, -2};
    CHECK(counted_matvec(ComplexMatrix::identity(3), x, ctr) == x);
    ctr.reset();
    counted_matvec(ComplexMatrix{{2}}, ComplexVector{3}, ctr);
    CHECK(ctr.count == 1);

    ctr.reset();
    counted_matmat(ComplexMatrix(2, 2, 1.0), ComplexMatrix(2, 2, 1.0), ctr);
    CHECK(ctr.count == 12);
    ctr.reset();
    const ComplexMatrix a{{1, 2}, {I, 4}, {5, -6}};
    CHECK(counted_matmat(a, ComplexMatrix::identity(2), ctr) == a);
    ctr.reset();
    counted_matmat(ComplexMatrix(3, 2, 1.0), ComplexMatrix(2, 4, 1.0), ctr);
    CHECK(ctr.count == 36);

    ctr.reset();
    counted_kron(ComplexMatrix(2, 2, 1.0), ComplexMatrix(2, 2, 1.0), ctr);
    CHECK(ctr.count == 16);
    ctr.reset();
    counted_kron(ComplexMatrix{{2}}, ComplexMatrix{{3}}, ctr);
    CHECK(ctr.count == 1);

    CHECK_THROWS_AS(counted_inner(ComplexVector{1}, ComplexVector{1, 2}, ctr), DimensionError);
    CHECK_THROWS_AS(counted_matvec(ComplexMatrix(2, 2), ComplexVector{1}, ctr), DimensionError);
    CHECK_THROWS_AS(counted_matmat(ComplexMatrix(2, 3), ComplexMatrix(2, 3), ctr), DimensionError);
}

TEST_CASE("counted kernels: closed forms over the full (p, q, r, s) grid") {
    Rng rng(8);
    for (std::uint64_t p = 1; p <= 6; ++p) {
        for (std::uint64_t q = 1; q <= 6; ++q) {
            for (std::uint64_t r = 1; r <= 6; ++r) {
                for (std::uint64_t s = 1; s <= 6; ++s) {
                    const ComplexMatrix a = random_matrix(p, q, rng);
                    const ComplexMatrix b = random_matrix(q, r, rng);
                    const ComplexMatrix c = random_matrix(r, s, rng);
                    OpCount inner_ctr, mv, mm, kr;
                    counted_inner(a.col(0), a.col(0), inner_ctr);
                    counted_matvec(a, b.col(0), mv);
                    const ComplexMatrix ab = counted_matmat(a, b, mm);
                    const ComplexMatrix ac = counted_kron(a, c, kr);
                    REQUIRE(inner_ctr.count == 2 * p - 1);
                    REQUIRE(mv.count == p * (2 * q - 1));
                    REQUIRE(mm.count == p * r * (2 * q - 1));
                    REQUIRE(kr.count == p * q * r * s);
                    CHECK(oracle::max_abs_diff(ab, oracle::matmul(a, b)) <= 1e-12 * (1.0 + q));
                    CHECK(ac == kronecker(a, c));
                }
            }
        }
    }
}

TEST_CASE("matrix construction") {
    CHECK_THROWS_AS(ComplexMatrix(0, 3), DimensionError);
    CHECK_THROWS_AS((ComplexMatrix{{1, 2}, {3}}), DimensionError);
    const ComplexMatrix m{{1, I}, {2, 3}};
    CHECK(m.adjoint()(0, 1) == cplx(2.0));
    CHECK(m.adjoint()(1, 0) == -I);
    CHECK(m.transpose()(1, 0) == I);
    CHECK(all_finite(m));
}
