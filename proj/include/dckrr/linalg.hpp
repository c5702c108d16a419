#pragma once

#include <stdexcept>

#include "dckrr/kernels.hpp"
#include "dckrr/types.hpp"

namespace dckrr {

/// Thrown when a regularized system cannot be factorized even at the maximum
/// jitter level; carries the last jitter that was attempted.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, double attempted_jitter)
        : std::runtime_error(what), attempted_jitter_(attempted_jitter) {}
    double attempted_jitter() const { return attempted_jitter_; }

private:
    double attempted_jitter_;
};

/// Dense symmetric matrix. Assembly writes both triangles from a single
/// kernel evaluation, so entries(i,j) == entries(j,i) holds exactly.
struct SymMatrix {
    Matrix entries;

    Eigen::Index order() const { return entries.rows(); }
};

/// Gram matrix G[i][j] = K(x_i, x_j). Row-block parallel when workers > 1;
/// every entry is a pure function of the inputs, so the result is
/// bit-identical for any worker count.
SymMatrix gram(const KernelSpec& kernel, const Matrix& points, unsigned workers = 1);

/// Cross-kernel matrix K[i][j] = K(a_i, b_j) (rows over a, columns over b).
Matrix cross_gram(const KernelSpec& kernel, const Matrix& a, const Matrix& b,
                  unsigned workers = 1);

/// Solves (A + shift I) X = B for symmetric positive definite A + shift I.
///
/// Cholesky with jitter fallback: on factorization failure (or an accepted
/// factor whose refined solution still misses the residual target), adds
/// delta * (tr(A)/n) * I with delta escalating 1e-12, 1e-11, ..., 1e-6, then
/// throws SingularMatrixError. Accepted solutions satisfy
/// ||(A + shift I) X - B||_F <= 1e-8 ||B||_F.
Matrix spd_solve(const SymMatrix& a, double shift, const Matrix& b);

}  // namespace dckrr
