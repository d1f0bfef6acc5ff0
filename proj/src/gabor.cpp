#include "framehs/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

namespace framehs::gabor {

namespace {

// Periodization terms on each side; the first omitted term is below 1e-40
// for n >= 8.
constexpr int kPeriods = 3;

} // namespace

ComplexVector gauss_window(std::size_t n) {
    if (n == 0) {
        throw DimensionError("gauss_window: length must be positive");
    }
    const double len = static_cast<double>(n);
    ComplexVector g(n);
    double energy = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        // Index j holds sample t in [-n/2, n/2).
        const double t = 2 * j < n ? static_cast<double>(j) : static_cast<double>(j) - len;
        double v = 0.0;
        for (int r = -kPeriods; r <= kPeriods; ++r) {
            const double x = t + r * len;
            v += std::exp(-std::numbers::pi * x * x / len);
        }
        g[j] = v;
        energy += v * v;
    }
    const double scale = 1.0 / std::sqrt(energy);
    for (auto& z : g) {
        z *= scale;
    }
    return g;
}

GaborSystem gabor_frame(const ComplexVector& window, std::size_t a, std::size_t b) {
    const std::size_t n = window.size();
    if (n == 0 || a == 0 || b == 0 || n % a != 0 || n % b != 0) {
        throw DimensionError("gabor_frame: lattice (a=" + std::to_string(a) +
                             ", b=" + std::to_string(b) + ") must divide n=" + std::to_string(n));
    }
    const std::size_t tshifts = n / a;
    const std::size_t fshifts = n / b;
    ComplexMatrix d(n, tshifts * fshifts);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t p = 0; p < tshifts; ++p) {
        for (std::size_t q = 0; q < fshifts; ++q) {
            const std::size_t col = p * fshifts + q;
            for (std::size_t j = 0; j < n; ++j) {
                // Reduce the phase index mod n before scaling.
                const std::size_t phase = (q * b * j) % n;
                const cplx mod = std::polar(1.0, step * static_cast<double>(phase));
                d(j, col) = window[(j + n - (p * a) % n) % n] * mod;
            }
        }
    }
    return GaborSystem{n, a, b, window, Frame(std::move(d))};
}

double IdentityExperiment::relative_residual() const {
    return approximation.residual_fro / std::sqrt(static_cast<double>(system.n));
}

IdentityExperiment gabor_identity_experiment(std::size_t n, std::size_t a, std::size_t b) {
    GaborSystem sys = gabor_frame(gauss_window(n), a, b);
    FrameBounds bounds = frame_bounds(sys.frame);
    MultiplierApproximation approx =
        best_multiplier_approx(ComplexMatrix::identity(n), sys.frame);
    return {std::move(sys), bounds, std::move(approx)};
}

void write_magnitude_pgm(const std::filesystem::path& path, const ComplexMatrix& m) {
    double peak = 0.0;
    for (const auto& z : m.raw()) {
        peak = std::max(peak, std::abs(z));
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << "P5\n" << m.cols() << ' ' << m.rows() << "\n255\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const double level = peak > 0.0 ? std::abs(m(i, j)) / peak : 0.0;
            out.put(static_cast<char>(static_cast<unsigned char>(std::lround(level * 255.0))));
        }
    }
}

} // namespace framehs::gabor
