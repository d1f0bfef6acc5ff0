#include "framehs/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace framehs {

namespace {

using EigenMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " + shape_string(a) + " vs " +
                             shape_string(b));
    }
}

void require_same_length(const ComplexVector& x, const ComplexVector& y, const char* op) {
    if (x.size() != y.size()) {
        throw DimensionError(std::string(op) + ": length mismatch " + std::to_string(x.size()) +
                             " vs " + std::to_string(y.size()));
    }
}

EigenMatrix to_eigen(const ComplexMatrix& m) {
    EigenMatrix e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            e(i, j) = m(i, j);
        }
    }
    return e;
}

template <typename Derived>
ComplexMatrix from_eigen(const Eigen::MatrixBase<Derived>& e) {
    ComplexMatrix m(e.rows(), e.cols());
    for (Eigen::Index i = 0; i < e.rows(); ++i) {
        for (Eigen::Index j = 0; j < e.cols(); ++j) {
            m(i, j) = e(i, j);
        }
    }
    return m;
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, cplx fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("ComplexMatrix: dimensions must be positive, got " +
                             std::to_string(rows) + "x" + std::to_string(cols));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("ComplexMatrix: empty literal");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ComplexMatrix: ragged literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::column(const ComplexVector& v) {
    ComplexMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        m(i, 0) = v[i];
    }
    return m;
}

ComplexVector ComplexMatrix::col(std::size_t j) const {
    ComplexVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        v[i] = (*this)(i, j);
    }
    return v;
}

void ComplexMatrix::set_col(std::size_t j, const ComplexVector& v) {
    if (v.size() != rows_ || j >= cols_) {
        throw DimensionError("set_col: column " + std::to_string(j) + " of length " +
                             std::to_string(v.size()) + " does not fit " + shape_string(*this));
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, j) = v[i];
    }
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = std::conj((*this)(i, j));
        }
    }
    return t;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix c = *this;
    for (auto& z : c.data_) {
        z = std::conj(z);
    }
    return c;
}

std::string shape_string(const ComplexMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator+");
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) + b(i, j);
        }
    }
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator-");
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) - b(i, j);
        }
    }
    return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions differ " + shape_string(a) + " * " +
                             shape_string(b));
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) *= s;
        }
    }
    return c;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x) {
    if (a.cols() != x.size()) {
        throw DimensionError("matvec: " + shape_string(a) + " times vector of length " +
                             std::to_string(x.size()));
    }
    ComplexVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            acc += a(i, j) * x[j];
        }
        y[i] = acc;
    }
    return y;
}

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
    require_same_length(a, b, "operator+");
    ComplexVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] + b[i];
    }
    return c;
}

ComplexVector operator-(const ComplexVector& a, const ComplexVector& b) {
    require_same_length(a, b, "operator-");
    ComplexVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] - b[i];
    }
    return c;
}

ComplexVector operator*(cplx s, const ComplexVector& v) {
    ComplexVector c = v;
    for (auto& z : c) {
        z *= s;
    }
    return c;
}

cplx inner(const ComplexVector& x, const ComplexVector& y) {
    require_same_length(x, y, "inner");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += x[i] * std::conj(y[i]);
    }
    return acc;
}

double norm(const ComplexVector& x) {
    double acc = 0.0;
    for (const auto& z : x) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

double frobenius_norm(const ComplexMatrix& m) {
    double acc = 0.0;
    for (const auto& z : m.raw()) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

bool all_finite(const ComplexMatrix& m) {
    return std::all_of(m.raw().begin(), m.raw().end(), [](const cplx& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "frobenius_inner");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            acc += a(i, j) * std::conj(b(i, j));
        }
    }
    return acc;
}

ComplexVector vec_cols(const ComplexMatrix& m) {
    ComplexVector v(m.size());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            v[i + j * m.rows()] = m(i, j);
        }
    }
    return v;
}

ComplexMatrix mat_cols(const ComplexVector& x, std::size_t rows) {
    if (rows == 0 || x.empty() || x.size() % rows != 0) {
        throw DimensionError("mat_cols: length " + std::to_string(x.size()) +
                             " is not a positive multiple of rows=" + std::to_string(rows));
    }
    const std::size_t cols = x.size() / rows;
    ComplexMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
            m(i, j) = x[i + j * rows];
        }
    }
    return m;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    OpCount unused;
    return counted_kron(a, b, unused);
}

Svd svd(const ComplexMatrix& m) {
    const EigenMatrix e = to_eigen(m);
    Eigen::BDCSVD<Eigen::MatrixXcd> solver(e, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("svd: decomposition did not converge for " + shape_string(m));
    }
    Svd out{from_eigen(solver.matrixU()), {}, from_eigen(solver.matrixV())};
    const auto& s = solver.singularValues();
    out.sigma.assign(s.data(), s.data() + s.size());
    for (double sv : out.sigma) {
        if (!std::isfinite(sv)) {
            throw NumericalError("svd: non-finite singular value for " + shape_string(m));
        }
    }
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    const EigenMatrix e = to_eigen(m);
    Eigen::BDCSVD<Eigen::MatrixXcd> solver(e);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("singular_values: decomposition did not converge for " +
                             shape_string(m));
    }
    const auto& s = solver.singularValues();
    return {s.data(), s.data() + s.size()};
}

double default_pinv_tolerance(const ComplexMatrix& m) {
    return static_cast<double>(std::max(m.rows(), m.cols())) *
           std::numeric_limits<double>::epsilon();
}

ComplexMatrix pinv(const ComplexMatrix& m, double rel_tol) {
    if (rel_tol < 0.0) {
        rel_tol = default_pinv_tolerance(m);
    }
    const Svd d = svd(m);
    ComplexMatrix out(m.cols(), m.rows());
    if (d.sigma.empty() || d.sigma.front() == 0.0) {
        return out;
    }
    const double cutoff = rel_tol * d.sigma.front();
    // out = V diag(1/sigma) U^H over the retained singular values.
    for (std::size_t r = 0; r < d.sigma.size(); ++r) {
        if (d.sigma[r] <= cutoff) {
            break;
        }
        const double inv = 1.0 / d.sigma[r];
        for (std::size_t i = 0; i < m.cols(); ++i) {
            const cplx vi = d.v(i, r) * inv;
            for (std::size_t j = 0; j < m.rows(); ++j) {
                out(i, j) += vi * std::conj(d.u(j, r));
            }
        }
    }
    return out;
}

std::size_t numerical_rank(const ComplexMatrix& m, double rel_tol) {
    if (rel_tol < 0.0) {
        rel_tol = default_pinv_tolerance(m);
    }
    const auto s = singular_values(m);
    if (s.empty() || s.front() == 0.0) {
        return 0;
    }
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [&](double v) { return v > rel_tol * s.front(); }));
}

cplx counted_inner(const ComplexVector& x, const ComplexVector& y, OpCount& ctr) {
    require_same_length(x, y, "counted_inner");
    if (x.empty()) {
        throw DimensionError("counted_inner: vectors must be non-empty");
    }
    cplx acc = x[0] * std::conj(y[0]);
    for (std::size_t i = 1; i < x.size(); ++i) {
        acc += x[i] * std::conj(y[i]);
    }
    ctr.add(2 * x.size() - 1);
    return acc;
}

cplx counted_dotu(const ComplexVector& x, const ComplexVector& y, OpCount& ctr) {
    require_same_length(x, y, "counted_dotu");
    if (x.empty()) {
        throw DimensionError("counted_dotu: vectors must be non-empty");
    }
    cplx acc = x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
        acc += x[i] * y[i];
    }
    ctr.add(2 * x.size() - 1);
    return acc;
}

ComplexVector counted_matvec(const ComplexMatrix& a, const ComplexVector& x, OpCount& ctr) {
    if (a.cols() != x.size()) {
        throw DimensionError("counted_matvec: " + shape_string(a) + " times vector of length " +
                             std::to_string(x.size()));
    }
    ComplexVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx acc = a(i, 0) * x[0];
        for (std::size_t j = 1; j < a.cols(); ++j) {
            acc += a(i, j) * x[j];
        }
        y[i] = acc;
    }
    ctr.add(a.rows() * (2 * a.cols() - 1));
    return y;
}

ComplexMatrix counted_matmat(const ComplexMatrix& a, const ComplexMatrix& b, OpCount& ctr) {
    if (a.cols() != b.rows()) {
        throw DimensionError("counted_matmat: inner dimensions differ " + shape_string(a) +
                             " * " + shape_string(b));
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx acc = a(i, 0) * b(0, j);
            for (std::size_t k = 1; k < a.cols(); ++k) {
                acc += a(i, k) * b(k, j);
            }
            c(i, j) = acc;
        }
    }
    ctr.add(a.rows() * b.cols() * (2 * a.cols() - 1));
    return c;
}

ComplexMatrix counted_kron(const ComplexMatrix& a, const ComplexMatrix& b, OpCount& ctr) {
    const std::size_t r = b.rows();
    const std::size_t s = b.cols();
    ComplexMatrix c(a.rows() * r, a.cols() * s);
    for (std::size_t u = 0; u < a.rows(); ++u) {
        for (std::size_t v = 0; v < a.cols(); ++v) {
            const cplx auv = a(u, v);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < s; ++j) {
                    c(u * r + i, v * s + j) = auv * b(i, j);
                }
            }
        }
    }
    ctr.add(a.size() * b.size());
    return c;
}

ComplexVector counted_conj(const ComplexVector& x, OpCount& ctr) {
    ComplexVector c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        c[i] = std::conj(x[i]);
    }
    ctr.add(x.size());
    return c;
}

} // namespace framehs
