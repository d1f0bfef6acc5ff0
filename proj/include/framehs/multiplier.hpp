#pragma once

// Frame multipliers M = sum_k sigma_k f_k (x) conj(g_k) and the best
// Frobenius-norm approximation of a matrix by one.
//
// Role convention: for an m x n target, `g` is the analysis frame in C^n and
// `f` the synthesis frame in C^m, both with K elements. The rank-one family
// spanning the multipliers is R_k = f_k (x) conj(g_k).

#include "framehs/frames.hpp"
#include "framehs/hs.hpp"
#include "framehs/linalg.hpp"

namespace framehs {

// sum_k sigma_k <x, g_k> f_k.
ComplexVector apply_multiplier(const Symbol& sigma, const Frame& g, const Frame& f,
                               const ComplexVector& x);

// D_F diag(sigma) D_G^H.
ComplexMatrix multiplier_matrix(const Symbol& sigma, const Frame& g, const Frame& f);

// Gram of the rank-one family: entry (l, k) = <R_k, R_l>_HS = <f_k, f_l> <g_l, g_k>.
ComplexMatrix hs_gram(const Frame& g, const Frame& f);
// Same-frame case, entry (l, k) = |<g_k, g_l>|^2.
ComplexMatrix hs_gram(const Frame& g);

struct MultiplierApproximation {
    Symbol upper_symbol;
    ComplexMatrix approximant;
    double residual_fro = 0.0;
    Symbol lower_symbol;
    ComplexMatrix hs_gram;
};

// Orthogonal projection of T onto span{R_k}: sigma = pinv(G_HS) sigma_L(T).
// A negative pinv_tol selects the pinv default for the K x K Gram.
MultiplierApproximation best_multiplier_approx(const ComplexMatrix& t, const Frame& g,
                                               const Frame& f, double pinv_tol = -1.0);
// f = g, using the specialized Gram.
MultiplierApproximation best_multiplier_approx(const ComplexMatrix& t, const Frame& g,
                                               double pinv_tol = -1.0);

// D pinv(G) C x: orthogonal projection onto span(g_k) without forming a dual.
ComplexVector project_onto_frame_sequence(const ComplexVector& x, const Frame& f);

struct IdentityDiagnosis {
    bool is_identity_representable = false;
    Symbol symbol;
    bool is_tight = false;          // tight on the span
    bool is_tight_frame = false;    // tight and spanning C^d
    double residual = 0.0;
    // Best constant symbol c 1 for the identity, and its residual.
    cplx constant_symbol;
    double constant_residual = 0.0;
    // Tight frame <=> the identity is reproduced by a constant symbol.
    bool constant_symbol_consistent = false;
};

IdentityDiagnosis identity_multiplier_diagnosis(const Frame& f, double rel_tol = 1e-10);

} // namespace framehs
