#include "framehs/multiplier.hpp"

#include <string>

namespace framehs {

namespace {

void require_same_count(const Frame& g, const Frame& f, const char* op) {
    if (g.count() != f.count()) {
        throw DimensionError(std::string(op) + ": frames have " + std::to_string(g.count()) +
                             " and " + std::to_string(f.count()) + " elements");
    }
}

void require_symbol(const Symbol& sigma, const Frame& g, const char* op) {
    if (sigma.size() != g.count()) {
        throw DimensionError(std::string(op) + ": symbol of length " +
                             std::to_string(sigma.size()) + " for " +
                             std::to_string(g.count()) + " elements");
    }
}

MultiplierApproximation project(const ComplexMatrix& t, const Frame& g, const Frame& f,
                                ComplexMatrix gram_hs, double pinv_tol) {
    MultiplierApproximation out;
    out.lower_symbol = lower_symbol(t, f, g);
    out.upper_symbol = pinv(gram_hs, pinv_tol) * out.lower_symbol;
    out.approximant = multiplier_matrix(out.upper_symbol, g, f);
    out.residual_fro = frobenius_norm(t - out.approximant);
    out.hs_gram = std::move(gram_hs);
    return out;
}

} // namespace

ComplexVector apply_multiplier(const Symbol& sigma, const Frame& g, const Frame& f,
                               const ComplexVector& x) {
    require_same_count(g, f, "apply_multiplier");
    require_symbol(sigma, g, "apply_multiplier");
    ComplexVector c = analysis(g, x);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] *= sigma[k];
    }
    return synthesis(f, c);
}

ComplexMatrix multiplier_matrix(const Symbol& sigma, const Frame& g, const Frame& f) {
    require_same_count(g, f, "multiplier_matrix");
    require_symbol(sigma, g, "multiplier_matrix");
    const ComplexMatrix& df = f.synthesis();
    const ComplexMatrix& dg = g.synthesis();
    ComplexMatrix m(f.dim(), g.dim());
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        for (std::size_t i = 0; i < f.dim(); ++i) {
            const cplx a = sigma[k] * df(i, k);
            for (std::size_t j = 0; j < g.dim(); ++j) {
                m(i, j) += a * std::conj(dg(j, k));
            }
        }
    }
    return m;
}

ComplexMatrix hs_gram(const Frame& g, const Frame& f) {
    require_same_count(g, f, "hs_gram");
    const ComplexMatrix gf = gram(f); // (l, k) = <f_k, f_l>
    const ComplexMatrix gg = gram(g); // (l, k) = <g_k, g_l>
    ComplexMatrix out(g.count(), g.count());
    for (std::size_t l = 0; l < g.count(); ++l) {
        for (std::size_t k = 0; k < g.count(); ++k) {
            out(l, k) = gf(l, k) * gg(k, l);
        }
    }
    return out;
}

ComplexMatrix hs_gram(const Frame& g) {
    const ComplexMatrix gg = gram(g);
    ComplexMatrix out(g.count(), g.count());
    for (std::size_t l = 0; l < g.count(); ++l) {
        for (std::size_t k = 0; k < g.count(); ++k) {
            out(l, k) = std::norm(gg(l, k));
        }
    }
    return out;
}

MultiplierApproximation best_multiplier_approx(const ComplexMatrix& t, const Frame& g,
                                               const Frame& f, double pinv_tol) {
    require_same_count(g, f, "best_multiplier_approx");
    return project(t, g, f, hs_gram(g, f), pinv_tol);
}

MultiplierApproximation best_multiplier_approx(const ComplexMatrix& t, const Frame& g,
                                               double pinv_tol) {
    return project(t, g, g, hs_gram(g), pinv_tol);
}

ComplexVector project_onto_frame_sequence(const ComplexVector& x, const Frame& f) {
    const ComplexVector c = analysis(f, x);
    return synthesis(f, pinv(gram(f)) * c);
}

IdentityDiagnosis identity_multiplier_diagnosis(const Frame& f, double rel_tol) {
    const ComplexMatrix id = ComplexMatrix::identity(f.dim());
    const MultiplierApproximation best = best_multiplier_approx(id, f);
    const FrameBounds bounds = frame_bounds(f);

    IdentityDiagnosis out;
    out.symbol = best.upper_symbol;
    out.residual = best.residual_fro;
    out.is_identity_representable = best.residual_fro <= rel_tol;
    out.is_tight = is_tight(bounds);
    out.is_tight_frame = out.is_tight && bounds.spans();

    // With a constant symbol c the multiplier is c S; the best c is
    // <I, S> / <S, S>.
    const ComplexMatrix s = frame_operator(f);
    out.constant_symbol = frobenius_inner(id, s) / frobenius_inner(s, s);
    out.constant_residual = frobenius_norm(id - out.constant_symbol * s);
    const bool constant_reproduces = out.constant_residual <= rel_tol;
    out.constant_symbol_consistent = constant_reproduces == out.is_tight_frame;
    return out;
}

} // namespace framehs
