#pragma once

// Dense complex linear algebra used throughout framehs.
//
// Matrices are stored row-major; every public accessor is index based, so the
// storage order never leaks out. Shapes are checked eagerly and violations are
// reported with DimensionError.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace framehs {

using cplx = std::complex<double>;

class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ComplexVector {
  public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t len, cplx fill = {}) : data_(len, fill) {}
    ComplexVector(std::initializer_list<cplx> values) : data_(values) {}
    explicit ComplexVector(std::vector<cplx> values) : data_(std::move(values)) {}

    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    cplx& operator[](std::size_t i) { return data_[i]; }
    const cplx& operator[](std::size_t i) const { return data_[i]; }

    std::span<cplx> span() noexcept { return data_; }
    std::span<const cplx> span() const noexcept { return data_; }

    auto begin() noexcept { return data_.begin(); }
    auto end() noexcept { return data_.end(); }
    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    bool operator==(const ComplexVector&) const = default;

  private:
    std::vector<cplx> data_;
};

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols, cplx fill = {});
    // Row-by-row literal, e.g. {{1, 2}, {3, 4}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    // Single column holding v.
    static ComplexMatrix column(const ComplexVector& v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexVector col(std::size_t j) const;
    void set_col(std::size_t j, const ComplexVector& v);

    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix conj() const;

    std::span<const cplx> raw() const noexcept { return data_; }

    bool operator==(const ComplexMatrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

std::string shape_string(const ComplexMatrix& m);

// Arithmetic (uncounted).
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x);
ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator-(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator*(cplx s, const ComplexVector& v);

// <x, y> = sum x_k conj(y_k), linear in the first argument.
cplx inner(const ComplexVector& x, const ComplexVector& y);
double norm(const ComplexVector& x);
double frobenius_norm(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

// <A, B>_fro = sum A_ij conj(B_ij).
cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// Column stacking: vec(M)[i + j*rows] = M(i, j).
ComplexVector vec_cols(const ComplexMatrix& m);
// Inverse of vec_cols for the given row count.
ComplexMatrix mat_cols(const ComplexVector& x, std::size_t rows);

// Block layout: block (u, v) of the result is a(u, v) * b.
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

// Thin SVD, singular values in non-increasing order.
struct Svd {
    ComplexMatrix u;              // rows x r
    std::vector<double> sigma;    // r = min(rows, cols)
    ComplexMatrix v;              // cols x r
};
Svd svd(const ComplexMatrix& m);
std::vector<double> singular_values(const ComplexMatrix& m);

double default_pinv_tolerance(const ComplexMatrix& m);
// Moore-Penrose pseudoinverse. Singular values <= rel_tol * sigma_max are
// treated as zero. A negative rel_tol selects default_pinv_tolerance(m).
ComplexMatrix pinv(const ComplexMatrix& m, double rel_tol = -1.0);
// Numerical rank under the same truncation rule as pinv.
std::size_t numerical_rank(const ComplexMatrix& m, double rel_tol = -1.0);

// Counts complex scalar operations: one per multiply, add or conjugation.
struct OpCount {
    std::uint64_t count = 0;

    void add(std::uint64_t n) noexcept { count += n; }
    void reset() noexcept { count = 0; }
};

// Instrumented kernels. Each increments ctr by exactly its closed-form cost:
//   inner      2p - 1
//   dotu       2p - 1       (no conjugation)
//   matvec     p (2q - 1)
//   matmat     p r (2q - 1)
//   kron       p q r s
//   conj       p            (standalone conjugation pass)
cplx counted_inner(const ComplexVector& x, const ComplexVector& y, OpCount& ctr);
cplx counted_dotu(const ComplexVector& x, const ComplexVector& y, OpCount& ctr);
ComplexVector counted_matvec(const ComplexMatrix& a, const ComplexVector& x, OpCount& ctr);
ComplexMatrix counted_matmat(const ComplexMatrix& a, const ComplexMatrix& b, OpCount& ctr);
ComplexMatrix counted_kron(const ComplexMatrix& a, const ComplexMatrix& b, OpCount& ctr);
ComplexVector counted_conj(const ComplexVector& x, OpCount& ctr);

} // namespace framehs
