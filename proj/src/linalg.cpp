#include "dckrr/linalg.hpp"

#include <Eigen/Cholesky>
#include <cmath>

#include "dckrr/parallel.hpp"

namespace dckrr {

SymMatrix gram(const KernelSpec& kernel, const Matrix& points, unsigned workers) {
    const Eigen::Index n = points.rows();
    if (n < 1) throw std::invalid_argument("gram: need at least one point");
    if (points.cols() != kernel.dim) {
        throw std::invalid_argument("gram: point dimension does not match kernel dim");
    }
    SymMatrix g;
    g.entries.resize(n, n);
    parallel_for(static_cast<std::size_t>(n), workers, [&](std::size_t row) {
        const auto i = static_cast<Eigen::Index>(row);
        for (Eigen::Index j = i; j < n; ++j) {
            const double v = kernel_eval(kernel, points.row(i), points.row(j));
            g.entries(i, j) = v;
            g.entries(j, i) = v;
        }
    });
    return g;
}

Matrix cross_gram(const KernelSpec& kernel, const Matrix& a, const Matrix& b, unsigned workers) {
    if (a.cols() != kernel.dim || b.cols() != kernel.dim) {
        throw std::invalid_argument("cross_gram: point dimension does not match kernel dim");
    }
    Matrix k(a.rows(), b.rows());
    parallel_for(static_cast<std::size_t>(a.rows()), workers, [&](std::size_t row) {
        const auto i = static_cast<Eigen::Index>(row);
        for (Eigen::Index j = 0; j < b.rows(); ++j) {
            k(i, j) = kernel_eval(kernel, a.row(i), b.row(j));
        }
    });
    return k;
}

namespace {

double relative_residual(const Matrix& a, double shift, const Matrix& x, const Matrix& b) {
    const double bnorm = b.norm();
    if (bnorm == 0.0) return 0.0;
    const Matrix r = b - (a * x + shift * x);
    return r.norm() / bnorm;
}

}  // namespace

Matrix spd_solve(const SymMatrix& a, double shift, const Matrix& b) {
    const Eigen::Index n = a.order();
    if (n == 0) throw std::invalid_argument("spd_solve: empty matrix");
    if (b.rows() != n) throw std::invalid_argument("spd_solve: rhs row count mismatch");
    if (shift < 0.0) throw std::invalid_argument("spd_solve: shift must be >= 0");

    constexpr double kResidualTol = 1e-8;
    const double scale = a.entries.trace() / static_cast<double>(n);
    double jitter = 0.0;

    for (int attempt = 0; attempt <= 7; ++attempt) {
        // attempt 0: no jitter; then delta = 1e-12 * 10^(attempt-1), up to 1e-6.
        jitter = attempt == 0 ? 0.0 : std::pow(10.0, -13 + attempt) * scale;
        Eigen::LLT<Matrix> llt;
        llt.compute(a.entries + (shift + jitter) * Matrix::Identity(n, n));
        if (llt.info() != Eigen::Success) continue;

        Matrix x = llt.solve(b);
        // Up to two refinement sweeps against the unjittered system.
        for (int sweep = 0; sweep < 2; ++sweep) {
            if (relative_residual(a.entries, shift, x, b) <= kResidualTol) return x;
            x += llt.solve(b - (a.entries * x + shift * x));
        }
        if (relative_residual(a.entries, shift, x, b) <= kResidualTol) return x;
    }
    throw SingularMatrixError("spd_solve: factorization failed up to maximum jitter", jitter);
}

}  // namespace dckrr
