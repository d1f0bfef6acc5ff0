#include "framehs/random.hpp"

namespace framehs {

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> dist;
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double re = dist(rng);
            m(i, j) = {re, dist(rng)};
        }
    }
    return m;
}

ComplexVector random_vector(std::size_t len, Rng& rng) {
    return random_matrix(len, 1, rng).col(0);
}

ComplexMatrix random_real_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> dist;
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = dist(rng);
        }
    }
    return m;
}

Frame random_frame(std::size_t dim, std::size_t count, Rng& rng) {
    return Frame(random_matrix(dim, count, rng));
}

} // namespace framehs
