#include "morseb/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace morseb {

KernelCut kernel_cut(const std::vector<double>& eigs) {
    KernelCut out;
    if (eigs.empty()) return out;
    const double lambda_max = eigs.back();
    out.tol = 1e-8 * std::max(1.0, lambda_max);
    int dim = 0;
    while (dim < static_cast<int>(eigs.size()) && eigs[dim] <= out.tol) ++dim;
    out.dim = dim;
    // conjugation can shrink spectral gaps at large s; demand a clean cut
    if (dim > 0 && dim < static_cast<int>(eigs.size())) {
        const double largest_zero = eigs[dim - 1];
        const double first_kept = eigs[dim];
        if (largest_zero > 0.0 && first_kept / largest_zero < 1e3) out.ambiguous = true;
    }
    return out;
}

std::vector<double> lanczos_lowest(const SparseMat& matrix, int lowest, double tol,
                                   int max_iterations) {
    const int n = static_cast<int>(matrix.rows());
    if (lowest <= 0) throw Error("lanczos needs a positive eigenvalue count");
    lowest = std::min(lowest, n);

    // deterministic pseudo-random start vector
    auto seeded_vector = [&](std::uint64_t salt) {
        Eigen::VectorXd v(n);
        std::uint64_t state = 0x2545f4914f6cdd1dULL + salt;
        for (int i = 0; i < n; ++i) {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            v[i] = 0.5 + static_cast<double>(state % 1000003) / 1000003.0;
        }
        v.normalize();
        return v;
    };

    const int cap = (max_iterations > 0)
                        ? std::min(max_iterations, n)
                        : std::min(n, std::max(8 * lowest + 160, 300));

    std::vector<Eigen::VectorXd> basis;
    std::vector<double> alpha, beta; // beta[j] couples step j to j+1
    Eigen::VectorXd v = seeded_vector(0);
    double norm_estimate = 1.0;
    double achieved_residual = std::numeric_limits<double>::infinity();
    std::uint64_t restart_salt = 1;

    auto full_reorthogonalize = [&](Eigen::VectorXd& w) {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) w -= q.dot(w) * q;
    };

    for (int j = 0; j < cap; ++j) {
        basis.push_back(v);
        Eigen::VectorXd w = matrix * v;
        const double a = v.dot(w);
        alpha.push_back(a);
        full_reorthogonalize(w);
        double b = w.norm();

        norm_estimate = std::max(norm_estimate, std::abs(a) + b);

        const bool breakdown = b <= 1e-13 * norm_estimate;
        const int m = static_cast<int>(alpha.size());

        // Ritz values and residual bounds from the tridiagonal section
        if (!breakdown && m < lowest && m < n) {
            beta.push_back(b);
            v = w / b;
            continue;
        }

        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            t(i, i) = alpha[i];
            if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);

        if (m >= lowest) {
            double worst = 0.0;
            for (int i = 0; i < lowest; ++i)
                worst = std::max(worst, std::abs(b * es.eigenvectors()(m - 1, i)));
            achieved_residual = worst;
            const bool exhausted = (m == n) || breakdown;
            if (worst <= tol * norm_estimate || (exhausted && m == n)) {
                std::vector<double> out(es.eigenvalues().data(),
                                        es.eigenvalues().data() + lowest);
                return out;
            }
        }

        if (breakdown) {
            if (m >= n) {
                std::vector<double> out(es.eigenvalues().data(),
                                        es.eigenvalues().data() + std::min(lowest, m));
                return out;
            }
            // invariant subspace found: continue with a fresh direction
            Eigen::VectorXd fresh = seeded_vector(restart_salt++);
            full_reorthogonalize(fresh);
            const double fn = fresh.norm();
            if (fn <= 1e-12) break;
            beta.push_back(0.0);
            v = fresh / fn;
            continue;
        }

        beta.push_back(b);
        v = w / b;
    }

    std::ostringstream msg;
    msg << "lanczos did not reach residual " << tol << " (achieved "
        << achieved_residual / norm_estimate << " relative) within " << cap << " iterations";
    throw ConvergenceFailureError(msg.str());
}

SpectrumReport eigensolve_matrix(const SparseMat& matrix, int degree, double s, SolverMode mode,
                                 const EigensolveOptions& options) {
    SpectrumReport report;
    report.degree = degree;
    report.s = s;
    report.mode = mode;

    const int n = static_cast<int>(matrix.rows());
    if (mode == SolverMode::Dense) {
        if (n > options.dense_cap)
            throw Error("matrix size " + std::to_string(n) + " exceeds the dense cap " +
                        std::to_string(options.dense_cap));
        if (n > 0) {
            const Eigen::MatrixXd dense(matrix);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
            report.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
        }
    } else {
        const int p = options.lowest > 0 ? options.lowest : std::min(n, 6);
        report.eigenvalues = lanczos_lowest(matrix, p, options.tol, options.max_iterations);
    }
    std::sort(report.eigenvalues.begin(), report.eigenvalues.end());

    const KernelCut cut = kernel_cut(report.eigenvalues);
    report.kernel_tol = cut.tol;
    report.kernel_dim = cut.dim;
    report.gap_ambiguous = cut.ambiguous;
    return report;
}

SpectrumReport eigensolve(const DeformedLaplacian& laplacian, SolverMode mode,
                          const EigensolveOptions& options) {
    return eigensolve_matrix(laplacian.matrix, laplacian.degree, laplacian.s, mode, options);
}

double CountingFunction::operator()(double lambda) const {
    const double x = std::max(lambda, 0.0);
    switch (family) {
        case Family::Heat: return std::exp(-param * x);
        case Family::Gaussian: return std::exp(-param * x * x);
    }
    return 0.0;
}

std::string CountingFunction::name() const {
    std::ostringstream out;
    out << (family == Family::Heat ? "heat:" : "gaussian:") << param;
    return out.str();
}

CountingFunction CountingFunction::heat(double t) {
    if (!(t > 0.0)) throw Error("heat parameter must be positive");
    return CountingFunction{Family::Heat, t};
}

CountingFunction CountingFunction::gaussian(double m) {
    if (!(m > 0.0)) throw Error("gaussian parameter must be positive");
    return CountingFunction{Family::Gaussian, m};
}

CountingFunction CountingFunction::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("counting function must look like heat:<t> or gaussian:<m>");
    const std::string family = text.substr(0, colon);
    double param = 0.0;
    try {
        param = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw ParseError("bad counting-function parameter in '" + text + "'");
    }
    if (!(param > 0.0)) throw ParseError("counting-function parameter must be positive");
    if (family == "heat") return heat(param);
    if (family == "gaussian") return gaussian(param);
    throw ParseError("unknown counting-function family '" + family + "'");
}

double nu(const SpectrumReport& spectrum, const CountingFunction& phi) {
    if (spectrum.mode != SolverMode::Dense)
        throw RequiresFullSpectrumError("nu needs the full spectrum (dense mode)");
    double sum = 0.0;
    for (double lambda : spectrum.eigenvalues) sum += phi(lambda);
    return sum;
}

std::vector<EigenvalueCluster> multiplicity_alternation(
    const std::vector<SpectrumReport>& spectra_by_degree, double cluster_tol) {
    std::vector<std::pair<double, int>> nonzero; // (eigenvalue, degree)
    for (std::size_t k = 0; k < spectra_by_degree.size(); ++k) {
        const SpectrumReport& r = spectra_by_degree[k];
        if (r.mode != SolverMode::Dense)
            throw RequiresFullSpectrumError("multiplicity alternation needs dense spectra");
        for (std::size_t i = r.kernel_dim; i < r.eigenvalues.size(); ++i)
            nonzero.push_back({r.eigenvalues[i], static_cast<int>(k)});
    }
    std::sort(nonzero.begin(), nonzero.end());

    std::vector<EigenvalueCluster> clusters;
    const int degrees = static_cast<int>(spectra_by_degree.size());
    std::size_t i = 0;
    while (i < nonzero.size()) {
        std::size_t j = i + 1;
        while (j < nonzero.size() &&
               nonzero[j].first - nonzero[j - 1].first <= cluster_tol * nonzero[j].first)
            ++j;
        EigenvalueCluster c;
        c.lambda_low = nonzero[i].first;
        c.lambda_high = nonzero[j - 1].first;
        c.multiplicity.assign(degrees, 0);
        for (std::size_t t = i; t < j; ++t) c.multiplicity[nonzero[t].second] += 1;
        c.alternating_sum = 0;
        for (int k = 0; k < degrees; ++k)
            c.alternating_sum += (k % 2 == 0 ? 1 : -1) * c.multiplicity[k];
        if (c.lambda_high - c.lambda_low > 100.0 * cluster_tol * c.lambda_high)
            throw ClusterAmbiguityError("eigenvalue cluster near " +
                                        std::to_string(c.lambda_low) +
                                        " cannot be separated at the clustering tolerance");
        clusters.push_back(std::move(c));
        i = j;
    }
    return clusters;
}

} // namespace morseb
