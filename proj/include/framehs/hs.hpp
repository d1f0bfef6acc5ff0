#pragma once

// Hilbert-Schmidt (Frobenius) machinery: rank-one operators, four ways of
// computing <T, g (x) conj(h)>_HS with exact operation counts, the frame
// characterization of the HS norm, and the lower symbol.

#include "framehs/frames.hpp"
#include "framehs/linalg.hpp"

#include <cstdint>
#include <string_view>

namespace framehs {

using Symbol = ComplexVector;

// f (x) conj(g): the operator h -> <h, g> f, as the matrix f g^H.
struct RankOne {
    ComplexVector left;
    ComplexVector right;

    ComplexMatrix matrix() const;
    ComplexVector apply(const ComplexVector& h) const;
};

// M(i, j) = f_i conj(g_j); charges m*n multiplies.
ComplexMatrix rank_one_matrix(const ComplexVector& f, const ComplexVector& g);
ComplexMatrix rank_one_matrix(const ComplexVector& f, const ComplexVector& g, OpCount& ctr);

enum class HsMethod { VecPair, Direct, AllPairsSandwich, KroneckerVec };

std::string_view method_name(HsMethod m);

struct HsInnerReport {
    cplx value;
    OpCount ops; // increment charged by this call
    HsMethod method;
};

// Closed-form operation counts.
namespace hs_cost {
constexpr std::uint64_t vec_pair(std::uint64_t m, std::uint64_t n) { return 3 * m * n + m - 1; }
constexpr std::uint64_t direct(std::uint64_t m, std::uint64_t n) { return 2 * m * n + m - 1; }
constexpr std::uint64_t all_pairs(std::uint64_t m, std::uint64_t n, std::uint64_t k,
                                  std::uint64_t l) {
    return l * (2 * m * n - m + 2 * m * k - k);
}
constexpr std::uint64_t kron(std::uint64_t m, std::uint64_t n, std::uint64_t k, std::uint64_t l) {
    return k * l * (3 * m * n - 1);
}
} // namespace hs_cost

// <vec(T), vec(g (x) conj(h))>, with T m x n, g in C^m, h in C^n.
HsInnerReport hs_inner_vec_pair(const ComplexMatrix& t, const ComplexVector& g,
                                const ComplexVector& h, OpCount& ctr);
// <T h, g>.
HsInnerReport hs_inner_direct(const ComplexMatrix& t, const ComplexVector& g,
                              const ComplexVector& h, OpCount& ctr);

struct HsTable {
    ComplexMatrix table; // L x K, table(l, k) = <T, g_k (x) conj(h_l)>
    OpCount ops;
};

struct HsStacked {
    ComplexVector values; // length K*L, index k + l*K
    OpCount ops;
};

// C_G T D_H, then transposed into the L x K layout.
HsTable hs_inner_all_pairs(const ComplexMatrix& t, const Frame& g, const Frame& h, OpCount& ctr);
// (D_H^T (x) C_G) vec(T).
HsStacked hs_inner_kron(const ComplexMatrix& t, const Frame& g, const Frame& h, OpCount& ctr);

// The full table through any of the four methods (single-pair methods are
// looped over all pairs).
HsTable hs_inner_table(const ComplexMatrix& t, const Frame& g, const Frame& h, HsMethod method,
                       OpCount& ctr);

// sigma_L(T)_k = <T f_k, g_k>, T m x n, g_k in C^m, f_k in C^n, via the direct
// method for every pair.
Symbol lower_symbol(const ComplexMatrix& t, const Frame& g, const Frame& f);
Symbol lower_symbol(const ComplexMatrix& t, const Frame& g, const Frame& f, OpCount& ctr);

struct HsNormCheck {
    double frame_sum = 0.0; // sqrt(sum_k ||T f_k||^2)
    double hs_norm = 0.0;
    double lower = 0.0;     // sqrt(A) ||T||_HS
    double upper = 0.0;     // sqrt(B) ||T||_HS
    FrameBounds bounds;

    bool within(double slack = 1e-9) const noexcept {
        return frame_sum >= lower - slack && frame_sum <= upper + slack;
    }
};

// Requires a frame spanning C^d; throws DimensionError otherwise.
HsNormCheck hs_norm_via_frame(const ComplexMatrix& t, const Frame& f);

} // namespace framehs
