#include "morseb/witten.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace morseb {

namespace {

void check_weights(const std::vector<Eigen::VectorXd>& weights) {
    for (const auto& w : weights)
        for (int i = 0; i < w.size(); ++i)
            if (!(w[i] > 0.0))
                throw NonpositiveWeightError("inner-product weights must be strictly positive");
}

} // namespace

SimplexPotential simplex_potential(const SimplicialComplex& complex,
                                   const RelativeCochainComplex& rcc) {
    if (!complex.has_morse_values())
        throw MissingMorseValuesError("simplex potential needs vertex Morse values");
    SimplexPotential out;
    out.value.resize(rcc.n + 1);
    for (int k = 0; k <= rcc.n; ++k) {
        out.value[k].resize(rcc.basis_count(k));
        for (int i = 0; i < rcc.basis_count(k); ++i) {
            const Simplex& s = complex.faces[k][rcc.basis[k][i]];
            double sum = 0.0;
            for (int v : s) sum += complex.morse_value(v);
            out.value[k][i] = sum / static_cast<double>(s.size());
        }
    }
    return out;
}

std::vector<SparseMat> deformed_coboundary(const RelativeCochainComplex& rcc,
                                           const SimplexPotential& potential, double s) {
    if (s < 0.0) throw Error("deformation scale must be non-negative");
    for (int k = 0; k <= rcc.n; ++k)
        for (int i = 0; i < potential.value[k].size(); ++i)
            if (std::abs(s * potential.value[k][i]) > 300.0)
                throw ScaleOverflowError("|s * potential| exceeds 300; the conjugation would overflow");

    std::vector<SparseMat> out;
    for (int k = 0; k < rcc.n; ++k) {
        std::vector<Eigen::Triplet<double>> triplets;
        for (const auto& e : rcc.coboundary[k].entries) {
            const double scale =
                std::exp(s * (potential.value[k][e.col] - potential.value[k + 1][e.row]));
            triplets.push_back({e.row, e.col, static_cast<double>(e.value) * scale});
        }
        SparseMat d(rcc.coboundary[k].rows, rcc.coboundary[k].cols);
        d.setFromTriplets(triplets.begin(), triplets.end());
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<Eigen::VectorXd> unit_weights(const RelativeCochainComplex& rcc) {
    std::vector<Eigen::VectorXd> out;
    for (int k = 0; k <= rcc.n; ++k) out.push_back(Eigen::VectorXd::Ones(rcc.basis_count(k)));
    return out;
}

std::vector<Eigen::VectorXd> top_count_weights(const SimplicialComplex& complex,
                                               const RelativeCochainComplex& rcc) {
    std::vector<Eigen::VectorXd> out;
    for (int k = 0; k <= rcc.n; ++k) {
        Eigen::VectorXd w(rcc.basis_count(k));
        for (int i = 0; i < rcc.basis_count(k); ++i) {
            const Simplex& s = complex.faces[k][rcc.basis[k][i]];
            int count = 0;
            for (int t : complex.star_of_vertex(s[0])) {
                const Simplex& top = complex.top_simplices[t];
                if (std::includes(top.begin(), top.end(), s.begin(), s.end())) ++count;
            }
            w[i] = static_cast<double>(count);
        }
        out.push_back(std::move(w));
    }
    return out;
}

SparseMat normalized_coboundary(const std::vector<SparseMat>& d_s,
                                const std::vector<Eigen::VectorXd>& weights, int k) {
    const SparseMat& d = d_s[k];
    std::vector<Eigen::Triplet<double>> triplets;
    for (int col = 0; col < d.outerSize(); ++col)
        for (SparseMat::InnerIterator it(d, col); it; ++it)
            triplets.push_back({static_cast<int>(it.row()), col,
                                it.value() * std::sqrt(weights[k + 1][it.row()]) /
                                    std::sqrt(weights[k][col])});
    SparseMat out(d.rows(), d.cols());
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

DeformedLaplacian assemble_laplacian(const std::vector<SparseMat>& d_s,
                                     const std::vector<Eigen::VectorXd>& weights, int k,
                                     double s) {
    check_weights(weights);
    const int n = static_cast<int>(d_s.size()); // degrees with a coboundary: 0..n-1
    const int size = static_cast<int>(weights[k].size());

    SparseMat laplacian(size, size);
    if (k < n) {
        const SparseMat b = normalized_coboundary(d_s, weights, k);
        laplacian = SparseMat(b.transpose()) * b;
    }
    if (k > 0) {
        const SparseMat b = normalized_coboundary(d_s, weights, k - 1);
        laplacian = laplacian + b * SparseMat(b.transpose());
    }
    laplacian.prune(0.0);

    DeformedLaplacian out;
    out.degree = k;
    out.s = s;
    out.matrix = std::move(laplacian);
    return out;
}

Eigen::MatrixXd kernel_basis(const std::vector<SparseMat>& d_s,
                             const std::vector<Eigen::VectorXd>& weights, int k) {
    check_weights(weights);
    const int n = static_cast<int>(d_s.size());
    const int size = static_cast<int>(weights[k].size());
    if (size == 0) return Eigen::MatrixXd(0, 0);

    int stacked_rows = 0;
    Eigen::MatrixXd up, down;
    if (k < n) {
        up = Eigen::MatrixXd(normalized_coboundary(d_s, weights, k));
        stacked_rows += static_cast<int>(up.rows());
    }
    if (k > 0) {
        down = Eigen::MatrixXd(normalized_coboundary(d_s, weights, k - 1)).transpose();
        stacked_rows += static_cast<int>(down.rows());
    }
    if (stacked_rows == 0) return Eigen::MatrixXd::Identity(size, size);

    Eigen::MatrixXd stacked(stacked_rows, size);
    int at = 0;
    if (up.rows() > 0) {
        stacked.middleRows(at, up.rows()) = up;
        at += static_cast<int>(up.rows());
    }
    if (down.rows() > 0) stacked.middleRows(at, down.rows()) = down;

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = 1e-6 * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
    int kernel_dim = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] <= cut) ++kernel_dim;
    const int rank = static_cast<int>(sv.size()) - kernel_dim;
    // columns of V beyond the rank span the null space; V may have more
    // columns than singular values when rows < cols
    const Eigen::MatrixXd v = svd.matrixV();
    return v.rightCols(v.cols() - rank);
}

} // namespace morseb
