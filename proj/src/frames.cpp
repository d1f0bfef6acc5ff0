#include "framehs/frames.hpp"

#include <algorithm>
#include <string>

namespace framehs {

Frame::Frame(ComplexMatrix synthesis, Check check) : synthesis_(std::move(synthesis)) {
    if (synthesis_.rows() == 0 || synthesis_.cols() == 0) {
        throw DimensionError("Frame: synthesis matrix must be non-empty");
    }
    if (!all_finite(synthesis_)) {
        throw NumericalError("Frame: synthesis matrix has non-finite entries");
    }
    if (check == Check::Strict) {
        for (std::size_t k = 0; k < count(); ++k) {
            if (norm(synthesis_.col(k)) == 0.0) {
                throw DimensionError("Frame: element " + std::to_string(k) + " is zero");
            }
        }
    }
}

ComplexVector analysis(const Frame& f, const ComplexVector& x) {
    if (x.size() != f.dim()) {
        throw DimensionError("analysis: vector of length " + std::to_string(x.size()) +
                             " for a frame in dimension " + std::to_string(f.dim()));
    }
    const ComplexMatrix& d = f.synthesis();
    ComplexVector c(f.count());
    for (std::size_t k = 0; k < f.count(); ++k) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < f.dim(); ++i) {
            acc += x[i] * std::conj(d(i, k));
        }
        c[k] = acc;
    }
    return c;
}

ComplexVector synthesis(const Frame& f, const ComplexVector& c) {
    if (c.size() != f.count()) {
        throw DimensionError("synthesis: " + std::to_string(c.size()) + " coefficients for " +
                             std::to_string(f.count()) + " elements");
    }
    return f.synthesis() * c;
}

ComplexMatrix frame_operator(const Frame& f) {
    return f.synthesis() * f.synthesis().adjoint();
}

ComplexMatrix gram(const Frame& f) {
    return f.synthesis().adjoint() * f.synthesis();
}

ComplexMatrix cross_gram(const Frame& f, const Frame& g) {
    if (f.dim() != g.dim()) {
        throw DimensionError("cross_gram: frames live in C^" + std::to_string(f.dim()) +
                             " and C^" + std::to_string(g.dim()));
    }
    return g.synthesis().adjoint() * f.synthesis();
}

FrameBounds frame_bounds(const Frame& f) {
    const auto sigma = singular_values(f.synthesis());
    if (sigma.empty() || sigma.front() == 0.0) {
        throw NumericalError("frame_bounds: synthesis matrix is zero");
    }
    const double cutoff = default_pinv_tolerance(f.synthesis()) * sigma.front();
    FrameBounds b;
    b.dim = f.dim();
    b.upper = sigma.front() * sigma.front();
    for (double s : sigma) {
        if (s > cutoff) {
            ++b.rank;
            b.lower = s * s;
        }
    }
    return b;
}

Frame canonical_dual(const Frame& f) {
    return Frame(pinv(f.synthesis()).adjoint());
}

bool is_tight(const FrameBounds& b, double rel_tol) {
    return (b.upper - b.lower) / b.upper <= rel_tol;
}

bool is_tight(const Frame& f, double rel_tol) {
    return is_tight(frame_bounds(f), rel_tol);
}

} // namespace framehs
