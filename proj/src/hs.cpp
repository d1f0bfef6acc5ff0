#include "framehs/hs.hpp"

#include <cmath>
#include <string>

namespace framehs {

namespace {

void require_operator_shape(const ComplexMatrix& t, std::size_t m, std::size_t n,
                            const char* op) {
    if (t.rows() != m || t.cols() != n) {
        throw DimensionError(std::string(op) + ": operator is " + shape_string(t) +
                             " but the vectors need " + std::to_string(m) + "x" +
                             std::to_string(n));
    }
}

} // namespace

ComplexMatrix RankOne::matrix() const {
    return rank_one_matrix(left, right);
}

ComplexVector RankOne::apply(const ComplexVector& h) const {
    return inner(h, right) * left;
}

ComplexMatrix rank_one_matrix(const ComplexVector& f, const ComplexVector& g) {
    OpCount unused;
    return rank_one_matrix(f, g, unused);
}

ComplexMatrix rank_one_matrix(const ComplexVector& f, const ComplexVector& g, OpCount& ctr) {
    ComplexMatrix m(f.size(), g.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            m(i, j) = f[i] * std::conj(g[j]);
        }
    }
    ctr.add(f.size() * g.size());
    return m;
}

std::string_view method_name(HsMethod m) {
    switch (m) {
    case HsMethod::VecPair:
        return "vec-pair";
    case HsMethod::Direct:
        return "direct";
    case HsMethod::AllPairsSandwich:
        return "all-pairs";
    case HsMethod::KroneckerVec:
        return "kronecker";
    }
    return "unknown";
}

HsInnerReport hs_inner_vec_pair(const ComplexMatrix& t, const ComplexVector& g,
                                const ComplexVector& h, OpCount& ctr) {
    require_operator_shape(t, g.size(), h.size(), "hs_inner_vec_pair");
    OpCount local;
    // <vec T, vec(g conj(h)^T)> = sum T_ij conj(g_i) h_j: conjugate g once,
    // build the conjugated rank-one matrix, then an unconjugated dot.
    const ComplexVector gc = counted_conj(g, local);
    ComplexMatrix r(g.size(), h.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < h.size(); ++j) {
            r(i, j) = gc[i] * h[j];
        }
    }
    local.add(g.size() * h.size());
    const cplx value = counted_dotu(vec_cols(t), vec_cols(r), local);
    ctr.add(local.count);
    return {value, local, HsMethod::VecPair};
}

HsInnerReport hs_inner_direct(const ComplexMatrix& t, const ComplexVector& g,
                              const ComplexVector& h, OpCount& ctr) {
    require_operator_shape(t, g.size(), h.size(), "hs_inner_direct");
    OpCount local;
    const ComplexVector th = counted_matvec(t, h, local);
    const cplx value = counted_inner(th, g, local);
    ctr.add(local.count);
    return {value, local, HsMethod::Direct};
}

HsTable hs_inner_all_pairs(const ComplexMatrix& t, const Frame& g, const Frame& h,
                           OpCount& ctr) {
    require_operator_shape(t, g.dim(), h.dim(), "hs_inner_all_pairs");
    OpCount local;
    const ComplexMatrix td = counted_matmat(t, h.synthesis(), local);
    const ComplexMatrix ctd = counted_matmat(g.synthesis().adjoint(), td, local);
    ctr.add(local.count);
    return {ctd.transpose(), local};
}

HsStacked hs_inner_kron(const ComplexMatrix& t, const Frame& g, const Frame& h, OpCount& ctr) {
    require_operator_shape(t, g.dim(), h.dim(), "hs_inner_kron");
    OpCount local;
    const ComplexMatrix op = counted_kron(h.synthesis().transpose(), g.synthesis().adjoint(), local);
    ComplexVector values = counted_matvec(op, vec_cols(t), local);
    ctr.add(local.count);
    return {std::move(values), local};
}

HsTable hs_inner_table(const ComplexMatrix& t, const Frame& g, const Frame& h, HsMethod method,
                       OpCount& ctr) {
    switch (method) {
    case HsMethod::AllPairsSandwich:
        return hs_inner_all_pairs(t, g, h, ctr);
    case HsMethod::KroneckerVec: {
        HsStacked s = hs_inner_kron(t, g, h, ctr);
        return {mat_cols(s.values, g.count()).transpose(), s.ops};
    }
    case HsMethod::VecPair:
    case HsMethod::Direct:
        break;
    }
    require_operator_shape(t, g.dim(), h.dim(), "hs_inner_table");
    HsTable out{ComplexMatrix(h.count(), g.count()), {}};
    for (std::size_t l = 0; l < h.count(); ++l) {
        const ComplexVector hl = h.element(l);
        for (std::size_t k = 0; k < g.count(); ++k) {
            const ComplexVector gk = g.element(k);
            out.table(l, k) = method == HsMethod::VecPair
                                  ? hs_inner_vec_pair(t, gk, hl, out.ops).value
                                  : hs_inner_direct(t, gk, hl, out.ops).value;
        }
    }
    ctr.add(out.ops.count);
    return out;
}

Symbol lower_symbol(const ComplexMatrix& t, const Frame& g, const Frame& f) {
    OpCount unused;
    return lower_symbol(t, g, f, unused);
}

Symbol lower_symbol(const ComplexMatrix& t, const Frame& g, const Frame& f, OpCount& ctr) {
    if (g.count() != f.count()) {
        throw DimensionError("lower_symbol: frames have " + std::to_string(g.count()) + " and " +
                             std::to_string(f.count()) + " elements");
    }
    require_operator_shape(t, g.dim(), f.dim(), "lower_symbol");
    Symbol sigma(g.count());
    for (std::size_t k = 0; k < g.count(); ++k) {
        sigma[k] = hs_inner_direct(t, g.element(k), f.element(k), ctr).value;
    }
    return sigma;
}

HsNormCheck hs_norm_via_frame(const ComplexMatrix& t, const Frame& f) {
    if (t.rows() != t.cols() || t.cols() != f.dim()) {
        throw DimensionError("hs_norm_via_frame: operator " + shape_string(t) +
                             " does not act on C^" + std::to_string(f.dim()));
    }
    HsNormCheck out;
    out.bounds = frame_bounds(f);
    if (!out.bounds.spans()) {
        throw DimensionError("hs_norm_via_frame: frame has rank " +
                             std::to_string(out.bounds.rank) + " < " +
                             std::to_string(f.dim()));
    }
    out.frame_sum = frobenius_norm(t * f.synthesis());
    out.hs_norm = frobenius_norm(t);
    out.lower = std::sqrt(out.bounds.lower) * out.hs_norm;
    out.upper = std::sqrt(out.bounds.upper) * out.hs_norm;
    return out;
}

} // namespace framehs
