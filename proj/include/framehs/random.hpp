#pragma once

// Seeded random fixtures with independent standard normal real and imaginary parts.

#include "framehs/frames.hpp"
#include "framehs/linalg.hpp"

#include <random>

namespace framehs {

using Rng = std::mt19937_64;

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
ComplexVector random_vector(std::size_t len, Rng& rng);
ComplexMatrix random_real_matrix(std::size_t rows, std::size_t cols, Rng& rng);
Frame random_frame(std::size_t dim, std::size_t count, Rng& rng);

} // namespace framehs
