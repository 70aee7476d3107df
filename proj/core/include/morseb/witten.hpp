#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "morseb/cohomology.hpp"

namespace morseb {

using SparseMat = Eigen::SparseMatrix<double>;

/// Potential lifted to simplices: the arithmetic mean of the vertex values.
/// Any degreewise conjugation-equivalent lift preserves kernel dimensions.
struct SimplexPotential {
    std::vector<Eigen::VectorXd> value; // per degree, aligned with rcc basis
};

SimplexPotential simplex_potential(const SimplicialComplex& complex,
                                   const RelativeCochainComplex& rcc);

/// d_s^k = E_{-s}^{(k+1)} d^k E_s^{(k)} with E_s = diag(exp(s * potential)).
/// Throws ScaleOverflowError if |s * potential| exceeds 300 anywhere.
std::vector<SparseMat> deformed_coboundary(const RelativeCochainComplex& rcc,
                                           const SimplexPotential& potential,
                                           double s);

/// Strictly positive diagonal inner-product weights per degree.
std::vector<Eigen::VectorXd> unit_weights(const RelativeCochainComplex& rcc);

/// Volume-proxy weights: a k-simplex is weighted by the number of top
/// simplices containing it.
std::vector<Eigen::VectorXd> top_count_weights(const SimplicialComplex& complex,
                                               const RelativeCochainComplex& rcc);

/// Symmetric realization of Delta_s^k = delta_s d_s + d_s delta_s where
/// delta_s is the W-adjoint of d_s, conjugated by W^{1/2} so the matrix is
/// symmetric positive semidefinite with the spectrum of Delta_s^k.
struct DeformedLaplacian {
    int degree = 0;
    double s = 0.0;
    SparseMat matrix;

    int size() const { return static_cast<int>(matrix.rows()); }
    Eigen::MatrixXd dense() const { return Eigen::MatrixXd(matrix); }
};

DeformedLaplacian assemble_laplacian(const std::vector<SparseMat>& d_s,
                                     const std::vector<Eigen::VectorXd>& weights,
                                     int k, double s);

/// Normalized coboundary B_k = W_{k+1}^{1/2} d_s^k W_k^{-1/2}; the Laplacian
/// is B_k^T B_k + B_{k-1} B_{k-1}^T.
SparseMat normalized_coboundary(const std::vector<SparseMat>& d_s,
                                const std::vector<Eigen::VectorXd>& weights, int k);

/// Orthonormal kernel basis of Delta_s^k extracted from the singular value
/// decomposition of the stacked first-order operator [B_k; B_{k-1}^T], so the
/// vectors satisfy both d_s v = 0 and delta_s v = 0 to near machine accuracy.
Eigen::MatrixXd kernel_basis(const std::vector<SparseMat>& d_s,
                             const std::vector<Eigen::VectorXd>& weights, int k);

} // namespace morseb
