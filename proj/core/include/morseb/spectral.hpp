#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "morseb/witten.hpp"

namespace morseb {

enum class SolverMode { Dense, IterativeLowest };

struct SpectrumReport {
    int degree = 0;
    double s = 0.0;
    std::vector<double> eigenvalues; // ascending; full spectrum in dense mode
    SolverMode mode = SolverMode::Dense;
    double kernel_tol = 0.0;
    int kernel_dim = 0;
    bool gap_ambiguous = false;
};

/// Kernel rule: an eigenvalue counts as zero when lambda <= 1e-8 * max(1,
/// lambda_max); a multiplicative gap >= 1e3 to the first retained eigenvalue
/// is required, otherwise the report is flagged gap-ambiguous.
struct KernelCut {
    double tol = 0.0;
    int dim = 0;
    bool ambiguous = false;
};
KernelCut kernel_cut(const std::vector<double>& ascending_eigenvalues);

struct EigensolveOptions {
    int lowest = 0;           // iterative mode: number of eigenvalues
    double tol = 1e-10;       // iterative residual tolerance (relative to ||A||)
    int max_iterations = 0;   // 0 = automatic
    int dense_cap = 3000;
};

/// Dense mode returns the full spectrum (size <= dense_cap); iterative mode
/// runs Lanczos with full reorthogonalization and returns the lowest
/// `options.lowest` eigenvalues. Throws ConvergenceFailureError with the
/// achieved residual when the iteration cap is exceeded.
SpectrumReport eigensolve(const DeformedLaplacian& laplacian, SolverMode mode,
                          const EigensolveOptions& options = {});
SpectrumReport eigensolve_matrix(const SparseMat& matrix, int degree, double s,
                                 SolverMode mode, const EigensolveOptions& options = {});

/// Lanczos with full reorthogonalization against all previous basis vectors.
/// Deterministic start vector. Returns the `lowest` smallest Ritz values.
std::vector<double> lanczos_lowest(const SparseMat& matrix, int lowest,
                                   double tol, int max_iterations = 0);

/// Counting function family: heat(t): exp(-t lambda); gaussian(m):
/// exp(-m lambda^2). Parameter must be positive; phi(0) = 1 and phi is
/// non-negative and decreasing on [0, inf).
struct CountingFunction {
    enum class Family { Heat, Gaussian };
    Family family = Family::Heat;
    double param = 1.0;

    double operator()(double lambda) const;
    std::string name() const; // "heat:1" / "gaussian:4"
    static CountingFunction heat(double t);
    static CountingFunction gaussian(double m);
    static CountingFunction parse(const std::string& text); // throws ParseError
};

/// nu = sum_i phi(lambda_i) over the full spectrum. Throws
/// RequiresFullSpectrumError on an iterative-mode report.
double nu(const SpectrumReport& spectrum, const CountingFunction& phi);

/// One cluster of matching nonzero eigenvalues across degrees.
struct EigenvalueCluster {
    double lambda_low = 0.0;
    double lambda_high = 0.0;
    std::vector<int> multiplicity; // per degree 0..n
    long long alternating_sum = 0;
};

/// Clusters the nonzero eigenvalues of all degrees by single linkage at the
/// given relative gap and reports the alternating multiplicity sum per
/// cluster; exactness of the eigenspace complexes makes every sum zero.
/// Throws ClusterAmbiguityError when a cluster's relative diameter exceeds
/// 100x the clustering tolerance.
std::vector<EigenvalueCluster> multiplicity_alternation(
    const std::vector<SpectrumReport>& spectra_by_degree, double cluster_tol = 1e-6);

} // namespace morseb
