#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dckrr/types.hpp"

namespace dckrr {

enum class KernelFamily { Sobolev1, Gaussian, Linear, Polynomial };

/// A positive-semidefinite kernel family with its parameters.
///
/// sobolev1 is the first-order Sobolev kernel K(x,x') = 1 + min{x,x'} on
/// scalar inputs in [0,1]; gaussian is exp(-|x-x'|^2 / (2 sigma^2));
/// linear is <x,x'>; polynomial is (offset + <x,x'>)^degree.
struct KernelSpec {
    KernelFamily family = KernelFamily::Sobolev1;
    int dim = 1;
    double sigma = 1.0;   // gaussian bandwidth
    int degree = 1;       // polynomial degree
    double offset = 1.0;  // polynomial offset

    static KernelSpec sobolev1();
    static KernelSpec gaussian(double sigma, int dim);
    static KernelSpec linear(int dim);
    static KernelSpec polynomial(int degree, double offset, int dim);

    std::string family_name() const;
};

double kernel_eval(const KernelSpec& k, const Eigen::Ref<const Eigen::RowVectorXd>& x,
                   const Eigen::Ref<const Eigen::RowVectorXd>& y);

enum class DecayVariant { FiniteRank, Polynomial, Exponential };

/// Eigenvalue-profile model of the kernel integral operator: finite rank
/// (mu_1 >= ... >= mu_r > 0, zero beyond), polynomial decay mu_j = c j^(-2 nu),
/// or exponential decay mu_j = c1 exp(-c2 j^2).
struct SpectralDecay {
    DecayVariant variant = DecayVariant::Polynomial;
    std::vector<double> mu;  // finite rank eigenvalues, nonincreasing
    double nu = 1.0;         // polynomial exponent, > 1/2
    double c = 1.0;          // polynomial scale
    double c1 = 1.0;         // exponential scale
    double c2 = 1.0;         // exponential rate

    static SpectralDecay finite_rank(std::vector<double> mu);
    static SpectralDecay polynomial(double nu, double c);
    static SpectralDecay exponential(double c1, double c2);

    int rank() const { return static_cast<int>(mu.size()); }

    /// j-th eigenvalue of the profile, 1-based; 0 beyond a finite rank.
    double eigenvalue(double j) const;
};

/// Default decay profile per kernel family. The gaussian constants are a
/// placeholder profile (the distribution-dependent values are not pinned
/// down by the decay law); callers may override.
SpectralDecay default_decay(const KernelSpec& k);

/// Median of pairwise distances over a subsample of at most 1000 points;
/// the usual bandwidth default when none is given.
double median_bandwidth(const Matrix& x, std::uint64_t seed);

}  // namespace dckrr
