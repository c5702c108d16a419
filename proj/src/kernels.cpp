#include "dckrr/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dckrr/rng.hpp"

namespace dckrr {

KernelSpec KernelSpec::sobolev1() {
    KernelSpec k;
    k.family = KernelFamily::Sobolev1;
    k.dim = 1;
    return k;
}

KernelSpec KernelSpec::gaussian(double sigma, int dim) {
    if (sigma <= 0.0) throw std::invalid_argument("gaussian kernel: sigma must be > 0");
    if (dim < 1) throw std::invalid_argument("gaussian kernel: dim must be >= 1");
    KernelSpec k;
    k.family = KernelFamily::Gaussian;
    k.sigma = sigma;
    k.dim = dim;
    return k;
}

KernelSpec KernelSpec::linear(int dim) {
    if (dim < 1) throw std::invalid_argument("linear kernel: dim must be >= 1");
    KernelSpec k;
    k.family = KernelFamily::Linear;
    k.dim = dim;
    return k;
}

KernelSpec KernelSpec::polynomial(int degree, double offset, int dim) {
    if (degree < 1) throw std::invalid_argument("polynomial kernel: degree must be >= 1");
    if (offset < 0.0) throw std::invalid_argument("polynomial kernel: offset must be >= 0");
    if (dim < 1) throw std::invalid_argument("polynomial kernel: dim must be >= 1");
    KernelSpec k;
    k.family = KernelFamily::Polynomial;
    k.degree = degree;
    k.offset = offset;
    k.dim = dim;
    return k;
}

std::string KernelSpec::family_name() const {
    switch (family) {
        case KernelFamily::Sobolev1: return "sobolev1";
        case KernelFamily::Gaussian: return "gaussian";
        case KernelFamily::Linear: return "linear";
        case KernelFamily::Polynomial: return "polynomial";
    }
    return "?";
}

double kernel_eval(const KernelSpec& k, const Eigen::Ref<const Eigen::RowVectorXd>& x,
                   const Eigen::Ref<const Eigen::RowVectorXd>& y) {
    if (x.size() != k.dim || y.size() != k.dim) {
        throw std::invalid_argument("kernel_eval: point dimension does not match kernel dim");
    }
    switch (k.family) {
        case KernelFamily::Sobolev1: {
            const double a = x[0];
            const double b = y[0];
            if (a < 0.0 || a > 1.0 || b < 0.0 || b > 1.0) {
                throw std::invalid_argument("sobolev1 kernel: inputs must lie in [0,1]");
            }
            return 1.0 + std::min(a, b);
        }
        case KernelFamily::Gaussian: {
            const double d2 = (x - y).squaredNorm();
            return std::exp(-d2 / (2.0 * k.sigma * k.sigma));
        }
        case KernelFamily::Linear:
            return x.dot(y);
        case KernelFamily::Polynomial:
            return std::pow(k.offset + x.dot(y), k.degree);
    }
    return 0.0;
}

SpectralDecay SpectralDecay::finite_rank(std::vector<double> mu) {
    if (mu.empty()) throw std::invalid_argument("finite_rank decay: need at least one eigenvalue");
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] <= 0.0) throw std::invalid_argument("finite_rank decay: eigenvalues must be > 0");
        if (i > 0 && mu[i] > mu[i - 1]) {
            throw std::invalid_argument("finite_rank decay: eigenvalues must be nonincreasing");
        }
    }
    SpectralDecay d;
    d.variant = DecayVariant::FiniteRank;
    d.mu = std::move(mu);
    return d;
}

SpectralDecay SpectralDecay::polynomial(double nu, double c) {
    if (!(nu > 0.5)) throw std::invalid_argument("polynomial decay: nu must be > 1/2");
    if (c <= 0.0) throw std::invalid_argument("polynomial decay: c must be > 0");
    SpectralDecay d;
    d.variant = DecayVariant::Polynomial;
    d.nu = nu;
    d.c = c;
    return d;
}

SpectralDecay SpectralDecay::exponential(double c1, double c2) {
    if (c1 <= 0.0 || c2 <= 0.0) throw std::invalid_argument("exponential decay: c1, c2 must be > 0");
    SpectralDecay d;
    d.variant = DecayVariant::Exponential;
    d.c1 = c1;
    d.c2 = c2;
    return d;
}

double SpectralDecay::eigenvalue(double j) const {
    switch (variant) {
        case DecayVariant::FiniteRank: {
            const auto idx = static_cast<std::size_t>(j);
            return idx >= 1 && idx <= mu.size() ? mu[idx - 1] : 0.0;
        }
        case DecayVariant::Polynomial:
            return c * std::pow(j, -2.0 * nu);
        case DecayVariant::Exponential:
            return c1 * std::exp(-c2 * j * j);
    }
    return 0.0;
}

SpectralDecay default_decay(const KernelSpec& k) {
    switch (k.family) {
        case KernelFamily::Sobolev1:
            return SpectralDecay::polynomial(1.0, 1.0);
        case KernelFamily::Gaussian:
            return SpectralDecay::exponential(1.0, 1.0);
        case KernelFamily::Linear:
            return SpectralDecay::finite_rank(std::vector<double>(k.dim, 1.0));
        case KernelFamily::Polynomial:
            return SpectralDecay::finite_rank(std::vector<double>(k.degree + 1, 1.0));
    }
    throw std::invalid_argument("default_decay: unknown kernel family");
}

double median_bandwidth(const Matrix& x, std::uint64_t seed) {
    const Eigen::Index n = std::min<Eigen::Index>(x.rows(), 1000);
    if (x.rows() < 2) throw std::invalid_argument("median_bandwidth: need at least two points");

    std::vector<std::int64_t> idx(static_cast<std::size_t>(x.rows()));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::int64_t>(i);
    Rng rng(derive_seed(seed, 0x6d656469616eULL));
    rng.shuffle(idx);
    idx.resize(static_cast<std::size_t>(n));

    std::vector<double> dist;
    dist.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            dist.push_back((x.row(idx[i]) - x.row(idx[j])).norm());
        }
    }
    const auto mid = dist.begin() + static_cast<std::ptrdiff_t>(dist.size() / 2);
    std::nth_element(dist.begin(), mid, dist.end());
    return *mid;
}

}  // namespace dckrr
