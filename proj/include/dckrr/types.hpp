#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>

namespace dckrr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A labeled sample {(x_i, y_i)}: one covariate row per sample.
struct Dataset {
    Matrix x;  // N x dim
    Vector y;  // N

    Eigen::Index size() const { return x.rows(); }
    Eigen::Index dim() const { return x.cols(); }

    Dataset rows(const std::vector<std::int64_t>& idx) const {
        Dataset out;
        out.x.resize(static_cast<Eigen::Index>(idx.size()), x.cols());
        out.y.resize(static_cast<Eigen::Index>(idx.size()));
        for (std::size_t k = 0; k < idx.size(); ++k) {
            out.x.row(static_cast<Eigen::Index>(k)) = x.row(idx[k]);
            out.y[static_cast<Eigen::Index>(k)] = y[idx[k]];
        }
        return out;
    }
};

}  // namespace dckrr
