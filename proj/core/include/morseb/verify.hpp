#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morseb/instance.hpp"
#include "morseb/spectral.hpp"

namespace morseb {

struct InequalityRow {
    int k = 0;
    long long lhs = 0; // mu_k - mu_{k-1} + ... +- mu_0
    long long rhs = 0; // same alternating sum of beta
    bool holds = false;
    bool equality_required = false; // k = n
    bool equality_holds = false;
};

struct AnalyticInequalityRow {
    int k = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    bool equality_required = false;
    bool equality_holds = false; // |lhs-rhs| <= 1e-8 relative at k = n
};

struct EulerRecord {
    long long lhs = 0;           // sum (-1)^k c_k
    long long lhs_printed = 0;   // sum (-1)^(n-k) c_k
    long long rhs_corrected = 0; // chi(M,N_r) - chi(N_a+) + chi(N_r-)
    long long rhs_printed = 0;   // chi(M,N_r) + chi(N_a+) - chi(N_r-)
    bool corrected_holds = false;
    bool printed_holds = false;
};

struct DualityRecord {
    bool applicable = false;
    std::string skip_reason;
    bool holds = false;
    std::vector<int> beta_relative; // N_r = labeled relative part A
    std::vector<int> beta_complement; // N_r = boundary minus A
};

struct ParityRecord {
    bool applicable = false;
    std::string skip_reason;
    long long chi_boundary = 0;
    long long chi_m = 0;
    bool derived_holds = false; // chi(dM) = 2 chi(M)
    bool printed_holds = false; // chi(dM) = -2 chi(M)
    bool parity_mod2_holds = false;
};

struct SpectralRecord {
    double s = 0.0;
    std::string phi;
    std::vector<double> nu_values;  // per degree
    std::vector<int> kernel_dims;   // per degree
    bool kernel_match = false;      // kernel_dims == beta
    bool gap_ambiguity = false;
    std::vector<AnalyticInequalityRow> analytic;
    bool analytic_hold = false;
    int clusters_checked = 0;
    bool exactness_holds = false;
};

struct VerificationReport {
    std::string instance;
    int n = 0;
    std::vector<int> beta;
    std::vector<int> gamma;
    std::vector<int> eta;
    std::vector<long long> c;
    std::vector<long long> mu;
    std::vector<InequalityRow> inequalities;
    EulerRecord euler;
    std::vector<SpectralRecord> spectral;
    DualityRecord duality;
    ParityRecord parity;
};

std::vector<InequalityRow> check_morse_inequalities(const std::vector<long long>& mu,
                                                    const std::vector<int>& beta);

EulerRecord check_euler_relation(const std::vector<long long>& c,
                                 const SimplicialComplex& complex,
                                 const BoundaryDecomposition& decomposition,
                                 std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

std::vector<AnalyticInequalityRow> check_analytic_inequalities(
    const std::vector<double>& nu_by_degree, const std::vector<int>& beta);

DualityRecord check_duality(const SimplicialComplex& complex,
                            const BoundaryDecomposition& decomposition,
                            std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

ParityRecord check_parity_corollary(const SimplicialComplex& complex,
                                    const BoundaryDecomposition& decomposition,
                                    const std::vector<long long>& c,
                                    std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

struct VerifyOptions {
    bool spectral = false;
    std::vector<double> s_values{0.0, 1.0, 5.0, 25.0};
    CountingFunction phi = CountingFunction::heat(1.0);
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    bool strict_manifold = false;
    int workers = 0; // 0 = hardware concurrency
};

/// Full pipeline: cohomology -> Morse counts -> Theorem checks; the spectral
/// track (deformed Laplacians at every s in s_values) when requested.
VerificationReport verify_instance(const Instance& instance, const VerifyOptions& options = {});

/// Every normative check: inequalities + k = n equality, corrected Euler
/// relation, duality (when applicable), kernel identity / exactness /
/// analytic inequalities for each spectral record. The paper-printed Euler
/// and parity forms are descriptive only.
bool normative_pass(const VerificationReport& report);

std::string report_to_json(const VerificationReport& report); // deterministic layout
VerificationReport report_from_json(const std::string& text);

} // namespace morseb
