#pragma once

// Test-only reference computations. Nothing here calls into the framehs
// kernels it is used to check; everything is plain loops over std::complex.

#include "framehs/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using framehs::cplx;
using Vec = std::vector<cplx>;

inline double max_abs_diff(const framehs::ComplexMatrix& a, const framehs::ComplexMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

inline double max_abs_diff(const framehs::ComplexVector& a, const framehs::ComplexVector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

inline double max_abs(const framehs::ComplexMatrix& a) {
    double worst = 0.0;
    for (const auto& z : a.raw()) {
        worst = std::max(worst, std::abs(z));
    }
    return worst;
}

// Dense product by the textbook triple loop.
inline framehs::ComplexMatrix matmul(const framehs::ComplexMatrix& a,
                                     const framehs::ComplexMatrix& b) {
    framehs::ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                acc += a(i, k) * b(k, j);
            }
            c(i, j) = acc;
        }
    }
    return c;
}

// Distance from `target` to span(columns) by modified Gram-Schmidt with one
// reorthogonalization pass; directions whose remaining norm falls below
// drop_tol relative to their original norm are treated as dependent.
inline double least_squares_residual(const std::vector<Vec>& columns, const Vec& target,
                                     double drop_tol = 1e-10) {
    std::vector<Vec> basis;
    auto dot = [](const Vec& x, const Vec& y) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            acc += std::conj(y[i]) * x[i];
        }
        return acc;
    };
    auto nrm = [&](const Vec& x) { return std::sqrt(std::abs(dot(x, x))); };
    for (Vec v : columns) {
        const double original = nrm(v);
        if (original == 0.0) {
            continue;
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (const Vec& q : basis) {
                const cplx c = dot(v, q);
                for (std::size_t i = 0; i < v.size(); ++i) {
                    v[i] -= c * q[i];
                }
            }
        }
        const double left = nrm(v);
        if (left <= drop_tol * original) {
            continue;
        }
        for (auto& z : v) {
            z /= left;
        }
        basis.push_back(std::move(v));
    }
    Vec r = target;
    for (int pass = 0; pass < 2; ++pass) {
        for (const Vec& q : basis) {
            const cplx c = dot(r, q);
            for (std::size_t i = 0; i < r.size(); ++i) {
                r[i] -= c * q[i];
            }
        }
    }
    return nrm(r);
}

// Unitary DFT by direct summation.
inline Vec unitary_dft(const Vec& x) {
    const std::size_t n = x.size();
    Vec out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % n) /
                                 static_cast<double>(n);
            acc += x[j] * std::polar(1.0, angle);
        }
        out[k] = acc / std::sqrt(static_cast<double>(n));
    }
    return out;
}

} // namespace oracle
