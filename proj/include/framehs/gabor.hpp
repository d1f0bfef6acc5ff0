#pragma once

#include "framehs/frames.hpp"
#include "framehs/linalg.hpp"
#include "framehs/multiplier.hpp"

#include <cstddef>
#include <filesystem>

namespace framehs::gabor {

// Unit-norm periodized Gaussian exp(-pi t^2 / n), centered at index 0. This
// width makes the window invariant under the unitary DFT.
ComplexVector gauss_window(std::size_t n);

struct GaborSystem {
    std::size_t n = 0;
    std::size_t a = 0; // time step
    std::size_t b = 0; // frequency step
    ComplexVector window;
    Frame frame;

    std::size_t time_shifts() const noexcept { return n / a; }
    std::size_t freq_shifts() const noexcept { return n / b; }
    // Column of element (p, q) in the synthesis matrix.
    std::size_t index(std::size_t p, std::size_t q) const noexcept { return p * freq_shifts() + q; }
};

// Elements g_{p,q}[j] = window[(j - p a) mod n] exp(2 pi i q b j / n), ordered
// p outer, q inner. Throws DimensionError unless a and b divide n.
GaborSystem gabor_frame(const ComplexVector& window, std::size_t a, std::size_t b);

struct IdentityExperiment {
    GaborSystem system;
    FrameBounds bounds;
    MultiplierApproximation approximation;

    double relative_residual() const;
};

IdentityExperiment gabor_identity_experiment(std::size_t n, std::size_t a, std::size_t b);

// 8-bit binary PGM of |m(i, j)|, scaled so the largest magnitude maps to 255.
void write_magnitude_pgm(const std::filesystem::path& path, const ComplexMatrix& m);

} // namespace framehs::gabor
