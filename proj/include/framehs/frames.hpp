#pragma once

#include "framehs/linalg.hpp"

#include <cstddef>

namespace framehs {

// A finite sequence of K vectors in C^d, held as the d x K synthesis matrix
// whose column k is the element g_k.
class Frame {
  public:
    enum class Check { Lenient, Strict };

    // Strict rejects all-zero columns; Lenient keeps them as Bessel elements.
    explicit Frame(ComplexMatrix synthesis, Check check = Check::Lenient);

    std::size_t dim() const noexcept { return synthesis_.rows(); }
    std::size_t count() const noexcept { return synthesis_.cols(); }
    const ComplexMatrix& synthesis() const noexcept { return synthesis_; }
    ComplexVector element(std::size_t k) const { return synthesis_.col(k); }

  private:
    ComplexMatrix synthesis_;
};

// Optimal bounds of sum_k |<f, g_k>|^2 over unit f in span(g_k).
struct FrameBounds {
    enum class Kind { Frame, FrameSequence };

    double lower = 0.0;
    double upper = 0.0;
    std::size_t rank = 0;
    std::size_t dim = 0;

    Kind kind() const noexcept { return rank == dim ? Kind::Frame : Kind::FrameSequence; }
    bool spans() const noexcept { return rank == dim; }
    // No lower bound holds on all of C^d.
    bool bessel_only() const noexcept { return !spans(); }
    double ratio() const noexcept { return upper / lower; }
};

inline constexpr double kDefaultTightTolerance = 1e-8;

ComplexVector analysis(const Frame& f, const ComplexVector& x);
ComplexVector synthesis(const Frame& f, const ComplexVector& c);

// S = D D^H.
ComplexMatrix frame_operator(const Frame& f);
// gram(F) = D^H D, entry (j, m) = <f_m, f_j>.
ComplexMatrix gram(const Frame& f);
// Entry (j, m) = <f_m, g_j> for f_m in `f` and g_j in `g`.
ComplexMatrix cross_gram(const Frame& f, const Frame& g);

// Bounds from the squared singular values of the synthesis matrix. Throws
// NumericalError for an all-zero synthesis matrix.
FrameBounds frame_bounds(const Frame& f);

// Dual synthesis (D^+)^H; on a proper span this is the dual within the span.
Frame canonical_dual(const Frame& f);

bool is_tight(const Frame& f, double rel_tol = kDefaultTightTolerance);
bool is_tight(const FrameBounds& b, double rel_tol = kDefaultTightTolerance);

} // namespace framehs
