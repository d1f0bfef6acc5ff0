#pragma once

// Reference fixtures and the one-shot reproduction checks behind the
// `reproduce-paper` subcommand.

#include "framehs/frames.hpp"
#include "framehs/linalg.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace framehs::reproduce {

// ONB {(1/2, sqrt3/2), (sqrt3/2, -1/2)} of C^2.
Frame rotated_onb();
// Columns (cos 30deg, sin 30deg), (1, 1), (0, -1).
Frame three_element_frame();

struct Check {
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

// Multiplies every floating-point tolerance; integer op-count identities are
// exact regardless.
struct Options {
    double tol_scale = 1.0;
};

std::vector<Check> check_rotated_basis(const Options& opt);
std::vector<Check> check_three_element_identity(const Options& opt);
std::vector<Check> check_gabor_bounds(const Options& opt);
std::vector<Check> check_op_counts(const Options& opt);
std::vector<Check> check_method_agreement(const Options& opt);

std::vector<Check> run_all(const Options& opt);

bool all_passed(const std::vector<Check>& checks);
void print_table(std::ostream& out, const std::vector<Check>& checks);

} // namespace framehs::reproduce
