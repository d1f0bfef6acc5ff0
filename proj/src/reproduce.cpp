#include "framehs/reproduce.hpp"

#include "framehs/gabor.hpp"
#include "framehs/hs.hpp"
#include "framehs/multiplier.hpp"
#include "framehs/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace framehs::reproduce {

namespace {

std::string fmt(const char* pattern, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

double max_abs(const ComplexMatrix& m) {
    double peak = 0.0;
    for (const auto& z : m.raw()) {
        peak = std::max(peak, std::abs(z));
    }
    return peak;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return max_abs(a - b);
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

} // namespace

Frame rotated_onb() {
    const double r3 = std::sqrt(3.0);
    return Frame(ComplexMatrix{{0.5, r3 / 2}, {r3 / 2, -0.5}});
}

Frame three_element_frame() {
    const double c = std::cos(std::numbers::pi / 6);
    const double s = std::sin(std::numbers::pi / 6);
    return Frame(ComplexMatrix{{c, 1.0, 0.0}, {s, 1.0, -1.0}});
}

std::vector<Check> check_rotated_basis(const Options& opt) {
    const double tol = 5e-5 * opt.tol_scale;
    const ComplexMatrix target{{3.0, 0.0}, {0.0, 5.0}};
    const auto approx = best_multiplier_approx(target, rotated_onb());
    const ComplexMatrix expected{{3.7500, 0.4330}, {0.4330, 4.2500}};
    const double err = max_abs_diff(approx.approximant, expected);
    return {{1, "rotated-basis approximant", err <= tol, fmt("max_err=%.3e tol=%.1e", err, tol)}};
}

std::vector<Check> check_three_element_identity(const Options& opt) {
    const double tol = 5e-5 * opt.tol_scale;
    const Frame frame = three_element_frame();
    const FrameBounds b = frame_bounds(frame);
    const double bound_err = std::max(std::abs(b.lower - 0.5453), std::abs(b.upper - 3.4547));

    const auto approx = best_multiplier_approx(ComplexMatrix::identity(2), frame);
    const std::array<double, 3> expected{3.1547, -1.3660, 1.5774};
    double sym_err = 0.0;
    for (std::size_t k = 0; k < expected.size(); ++k) {
        sym_err = std::max(sym_err, std::abs(approx.upper_symbol[k] - expected[k]));
    }
    const double res_tol = 1e-9 * opt.tol_scale;
    return {
        {2, "three-element frame bounds", bound_err <= tol, fmt("max_err=%.3e tol=%.1e", bound_err, tol)},
        {2, "three-element upper symbol", sym_err <= tol, fmt("max_err=%.3e tol=%.1e", sym_err, tol)},
        {2, "three-element residual", approx.residual_fro <= res_tol,
         fmt("residual=%.3e tol=%.1e", approx.residual_fro, res_tol)},
    };
}

std::vector<Check> check_gabor_bounds(const Options& opt) {
    const double tol = 1e-4 * opt.tol_scale;
    struct Case {
        std::size_t step;
        double lower; // 0 when only the Bessel bound is reported
        double upper;
    };
    constexpr std::array<Case, 4> cases{{
        {2, 7.99989, 8.00011},
        {4, 1.66925, 2.36068},
        {8, 0.0, 1.18034},
        {16, 0.0, 1.00001},
    }};
    const ComplexVector window = gabor::gauss_window(32);
    std::vector<Check> out;
    for (const Case& c : cases) {
        const auto sys = gabor::gabor_frame(window, c.step, c.step);
        const FrameBounds b = frame_bounds(sys.frame);
        const std::string label = "gabor a=b=" + std::to_string(c.step);
        const double up = rel_err(b.upper, c.upper);
        if (c.lower > 0.0) {
            const double lo = rel_err(b.lower, c.lower);
            out.push_back({3, label + " bounds", b.spans() && std::max(lo, up) <= tol,
                           fmt("rel_err(A)=%.3e rel_err(B)=%.3e", lo, up)});
        } else {
            out.push_back({3, label + " Bessel bound", b.bessel_only() && up <= tol,
                           fmt("rank=%.0f rel_err(B)=%.3e", static_cast<double>(b.rank), up)});
        }
    }
    return out;
}

std::vector<Check> check_op_counts(const Options&) {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    Rng rng(4);
    auto expect = [&](std::uint64_t got, std::uint64_t want) {
        ++cases;
        failures += got != want ? 1 : 0;
    };
    for (std::size_t m = 1; m <= 5; ++m) {
        for (std::size_t n = 1; n <= 5; ++n) {
            const ComplexMatrix t = random_matrix(m, n, rng);
            for (std::size_t k = 1; k <= 5; ++k) {
                for (std::size_t l = 1; l <= 5; ++l) {
                    const Frame g = random_frame(m, k, rng);
                    const Frame h = random_frame(n, l, rng);
                    OpCount c1, c2, c3, c4;
                    hs_inner_vec_pair(t, g.element(0), h.element(0), c1);
                    hs_inner_direct(t, g.element(0), h.element(0), c2);
                    hs_inner_all_pairs(t, g, h, c3);
                    hs_inner_kron(t, g, h, c4);
                    expect(c1.count, hs_cost::vec_pair(m, n));
                    expect(c2.count, hs_cost::direct(m, n));
                    expect(c3.count, hs_cost::all_pairs(m, n, k, l));
                    expect(c4.count, hs_cost::kron(m, n, k, l));

                    // Primitive kernels with (p, q, r, s) = (m, n, k, l).
                    const ComplexMatrix a = random_matrix(m, n, rng);
                    const ComplexMatrix bm = random_matrix(n, k, rng);
                    const ComplexMatrix c = random_matrix(k, l, rng);
                    OpCount p1, p2, p3, p4;
                    counted_inner(a.col(0), a.col(0), p1);
                    counted_matvec(a, bm.col(0), p2);
                    counted_matmat(a, bm, p3);
                    counted_kron(a, c, p4);
                    expect(p1.count, 2 * m - 1);
                    expect(p2.count, m * (2 * n - 1));
                    expect(p3.count, m * k * (2 * n - 1));
                    expect(p4.count, m * n * k * l);
                }
            }
        }
    }
    return {{4, "exact op-count identities", failures == 0,
             fmt("identities=%.0f failures=%.0f", static_cast<double>(cases),
                 static_cast<double>(failures))}};
}

std::vector<Check> check_method_agreement(const Options& opt) {
    const double tol = 1e-10 * opt.tol_scale;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Rng rng(seed);
        std::uniform_int_distribution<std::size_t> small(1, 5);
        std::uniform_int_distribution<std::size_t> count(1, 7);
        const std::size_t m = small(rng), n = small(rng), k = count(rng), l = count(rng);
        const ComplexMatrix t = random_matrix(m, n, rng);
        const Frame g = random_frame(m, k, rng);
        const Frame h = random_frame(n, l, rng);
        OpCount ops;
        const ComplexMatrix ref = hs_inner_table(t, g, h, HsMethod::AllPairsSandwich, ops).table;
        const double scale = std::max(max_abs(ref), 1e-300);
        for (HsMethod method : {HsMethod::VecPair, HsMethod::Direct, HsMethod::KroneckerVec}) {
            const ComplexMatrix other = hs_inner_table(t, g, h, method, ops).table;
            worst = std::max(worst, max_abs_diff(ref, other) / scale);
        }
    }
    return {{5, "four-method agreement (20 seeds)", worst <= tol,
             fmt("max_rel_err=%.3e tol=%.1e", worst, tol)}};
}

std::vector<Check> run_all(const Options& opt) {
    std::vector<Check> out;
    for (auto* fn : {check_rotated_basis, check_three_element_identity, check_gabor_bounds, check_op_counts,
                     check_method_agreement}) {
        auto part = fn(opt);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool all_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void print_table(std::ostream& out, const std::vector<Check>& checks) {
    for (const Check& c : checks) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << "criterion " << c.criterion << ": " << c.name
            << " (" << c.detail << ")\n";
    }
}

} // namespace framehs::reproduce
