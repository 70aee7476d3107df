#include "morseb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include <json.hpp>

#include "morseb/cohomology.hpp"
#include "morseb/witten.hpp"

namespace morseb {

using ordered_json = nlohmann::ordered_json;

namespace {

template <typename T>
std::vector<T> alternating_prefix(const std::vector<T>& values) {
    // out[k] = values[k] - values[k-1] + ... +- values[0]
    std::vector<T> out(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        T sum = T(0);
        int sign = 1;
        for (int j = static_cast<int>(k); j >= 0; --j) {
            sum += sign * values[j];
            sign = -sign;
        }
        out[k] = sum;
    }
    return out;
}

std::vector<BoundaryClass> flip_condition(const std::vector<BoundaryClass>& classes) {
    std::vector<BoundaryClass> out = classes;
    for (BoundaryClass& c : out) {
        switch (c) {
            case BoundaryClass::APlus: c = BoundaryClass::RPlus; break;
            case BoundaryClass::RPlus: c = BoundaryClass::APlus; break;
            case BoundaryClass::AMinus: c = BoundaryClass::RMinus; break;
            case BoundaryClass::RMinus: c = BoundaryClass::AMinus; break;
        }
    }
    return out;
}

} // namespace

std::vector<InequalityRow> check_morse_inequalities(const std::vector<long long>& mu,
                                                    const std::vector<int>& beta) {
    if (mu.size() != beta.size())
        throw LengthMismatchError("mu and beta must both have n+1 entries");
    const int n = static_cast<int>(mu.size()) - 1;
    std::vector<long long> beta_ll(beta.begin(), beta.end());
    const auto lhs = alternating_prefix(mu);
    const auto rhs = alternating_prefix(beta_ll);

    std::vector<InequalityRow> rows;
    for (int k = 0; k <= n; ++k) {
        InequalityRow row;
        row.k = k;
        row.lhs = lhs[k];
        row.rhs = rhs[k];
        row.holds = lhs[k] >= rhs[k];
        row.equality_required = (k == n);
        row.equality_holds = (lhs[k] == rhs[k]);
        rows.push_back(row);
    }
    return rows;
}

EulerRecord check_euler_relation(const std::vector<long long>& c,
                                 const SimplicialComplex& complex,
                                 const BoundaryDecomposition& decomposition,
                                 std::uint64_t seed) {
    (void)seed; // both Euler modes agree; the counting mode is exact and fast
    EulerRecord record;
    const int n = complex.n;
    for (std::size_t k = 0; k < c.size(); ++k) {
        record.lhs += (k % 2 == 0 ? 1 : -1) * c[k];
        record.lhs_printed += ((n - static_cast<int>(k)) % 2 == 0 ? 1 : -1) * c[k];
    }

    const long long chi_rel =
        euler(relative_cochain_complex(complex, decomposition), EulerMode::SimplexCount);
    auto piece_chi = [&](bool (*select)(BoundaryClass)) -> long long {
        bool any = false;
        for (BoundaryClass cls : decomposition.classes) any = any || select(cls);
        if (!any) return 0;
        return boundary_subcomplex(complex, decomposition, select).euler_characteristic_by_count();
    };
    const long long chi_aplus = piece_chi([](BoundaryClass c) { return c == BoundaryClass::APlus; });
    const long long chi_rminus = piece_chi([](BoundaryClass c) { return c == BoundaryClass::RMinus; });

    record.rhs_corrected = chi_rel - chi_aplus + chi_rminus;
    record.rhs_printed = chi_rel + chi_aplus - chi_rminus;
    record.corrected_holds = (record.lhs == record.rhs_corrected);
    record.printed_holds = (record.lhs_printed == record.rhs_printed);
    return record;
}

std::vector<AnalyticInequalityRow> check_analytic_inequalities(
    const std::vector<double>& nu_by_degree, const std::vector<int>& beta) {
    if (nu_by_degree.size() != beta.size())
        throw LengthMismatchError("nu and beta must both have n+1 entries");
    const int n = static_cast<int>(beta.size()) - 1;
    std::vector<double> beta_d(beta.begin(), beta.end());
    const auto lhs = alternating_prefix(nu_by_degree);
    const auto rhs = alternating_prefix(beta_d);

    std::vector<AnalyticInequalityRow> rows;
    for (int k = 0; k <= n; ++k) {
        AnalyticInequalityRow row;
        row.k = k;
        row.lhs = lhs[k];
        row.rhs = rhs[k];
        const double tol = 1e-8 * std::max({1.0, std::abs(lhs[k]), std::abs(rhs[k])});
        row.holds = lhs[k] >= rhs[k] - tol;
        row.equality_required = (k == n);
        row.equality_holds = std::abs(lhs[k] - rhs[k]) <= tol;
        rows.push_back(row);
    }
    return rows;
}

DualityRecord check_duality(const SimplicialComplex& complex,
                            const BoundaryDecomposition& decomposition, std::uint64_t seed) {
    DualityRecord record;
    if (!is_orientable(complex)) {
        record.applicable = false;
        record.skip_reason = "non-orientable";
        return record;
    }
    record.applicable = true;

    record.beta_relative = betti(relative_cochain_complex(complex, decomposition), seed);
    BoundaryDecomposition complement = decomposition;
    complement.classes = flip_condition(decomposition.classes);
    record.beta_complement = betti(relative_cochain_complex(complex, complement), seed ^ 0x5bd1u);

    record.holds = true;
    const int n = complex.n;
    for (int k = 0; k <= n; ++k)
        record.holds = record.holds && (record.beta_relative[k] == record.beta_complement[n - k]);
    return record;
}

ParityRecord check_parity_corollary(const SimplicialComplex& complex,
                                    const BoundaryDecomposition& decomposition,
                                    const std::vector<long long>& c, std::uint64_t seed) {
    (void)seed;
    if (complex.n % 2 == 0)
        throw NotOddDimensionalError("the parity corollary needs odd dimension");
    (void)c;

    ParityRecord record;
    record.applicable = true;
    record.chi_m = complex.euler_characteristic_by_count();
    if (decomposition.components.empty()) {
        record.chi_boundary = 0;
    } else {
        record.chi_boundary =
            boundary_subcomplex(complex, decomposition, [](BoundaryClass) { return true; })
                .euler_characteristic_by_count();
    }
    record.derived_holds = (record.chi_boundary == 2 * record.chi_m);
    record.printed_holds = (record.chi_boundary == -2 * record.chi_m);
    record.parity_mod2_holds = ((record.chi_boundary - 2 * record.chi_m) % 2 == 0);
    return record;
}

namespace {

CriticalInventory inventory_for(const Instance& instance,
                                const BoundaryDecomposition& decomposition, std::uint64_t seed) {
    const int n = instance.complex.n;
    CriticalInventory inventory;
    if (!instance.critical_points.empty()) {
        inventory.interior.assign(n + 1, 0);
        for (const auto& [vertex, index] : instance.critical_points) {
            if (index < 0 || index > n)
                throw ParseError("critical point index out of range");
            inventory.interior[index] += 1;
            inventory.located.push_back({vertex, index});
        }
    } else {
        inventory = classify_pl_critical(instance.complex, decomposition.components, seed);
    }
    if (instance.boundary_morse && instance.boundary_morse->mode == BoundaryMorseMode::General) {
        inventory.mode = BoundaryMorseMode::General;
        inventory.boundary = instance.boundary_morse->inventory;
    }
    return inventory;
}

SpectralRecord spectral_record(const std::vector<SpectrumReport>& spectra, double s,
                               const CountingFunction& phi, const std::vector<int>& beta) {
    SpectralRecord record;
    record.s = s;
    record.phi = phi.name();
    record.kernel_match = true;
    for (std::size_t k = 0; k < spectra.size(); ++k) {
        record.nu_values.push_back(nu(spectra[k], phi));
        record.kernel_dims.push_back(spectra[k].kernel_dim);
        record.gap_ambiguity = record.gap_ambiguity || spectra[k].gap_ambiguous;
        record.kernel_match = record.kernel_match && (spectra[k].kernel_dim == beta[k]);
    }
    record.analytic = check_analytic_inequalities(record.nu_values, beta);
    record.analytic_hold = true;
    for (const auto& row : record.analytic) {
        record.analytic_hold = record.analytic_hold && row.holds;
        if (row.equality_required) record.analytic_hold = record.analytic_hold && row.equality_holds;
    }
    const auto clusters = multiplicity_alternation(spectra);
    record.clusters_checked = static_cast<int>(clusters.size());
    record.exactness_holds = true;
    for (const auto& cluster : clusters)
        record.exactness_holds = record.exactness_holds && (cluster.alternating_sum == 0);
    return record;
}

} // namespace

VerificationReport verify_instance(const Instance& instance, const VerifyOptions& options) {
    VerificationReport report;
    report.instance = instance.name;
    report.n = instance.complex.n;

    if (options.strict_manifold) check_links_strict(instance.complex);

    const BoundaryDecomposition decomposition = instance.decomposition();
    const RelativeCochainComplex rcc = relative_cochain_complex(instance.complex, decomposition);
    report.beta = betti(rcc, options.seed);
    const BoundaryBetti bb = boundary_betti(instance.complex, decomposition, options.seed);
    report.gamma = bb.gamma;
    report.eta = bb.eta;

    const CriticalInventory inventory = inventory_for(instance, decomposition, options.seed);
    report.c = inventory.interior;
    report.mu = mu_vector(inventory, report.gamma, report.eta, inventory.mode, &decomposition).mu;

    report.inequalities = check_morse_inequalities(report.mu, report.beta);
    report.euler = check_euler_relation(report.c, instance.complex, decomposition, options.seed);
    report.duality = check_duality(instance.complex, decomposition, options.seed);
    if (instance.complex.n % 2 == 1) {
        report.parity =
            check_parity_corollary(instance.complex, decomposition, report.c, options.seed);
    } else {
        report.parity.applicable = false;
        report.parity.skip_reason = "even-dimensional";
    }

    if (options.spectral) {
        const SimplexPotential potential = simplex_potential(instance.complex, rcc);
        const auto weights = unit_weights(rcc);
        const int n = instance.complex.n;

        for (double s : options.s_values) {
            const auto d_s = deformed_coboundary(rcc, potential, s);
            std::vector<std::future<SpectrumReport>> futures;
            for (int k = 0; k <= n; ++k) {
                futures.push_back(std::async(std::launch::async, [&, k] {
                    return eigensolve(assemble_laplacian(d_s, weights, k, s), SolverMode::Dense);
                }));
            }
            std::vector<SpectrumReport> spectra;
            for (auto& f : futures) spectra.push_back(f.get());
            report.spectral.push_back(spectral_record(spectra, s, options.phi, report.beta));
        }
    }
    return report;
}

bool normative_pass(const VerificationReport& report) {
    for (const auto& row : report.inequalities) {
        if (!row.holds) return false;
        if (row.equality_required && !row.equality_holds) return false;
    }
    if (!report.euler.corrected_holds) return false;
    if (report.duality.applicable && !report.duality.holds) return false;
    if (report.parity.applicable && !report.parity.derived_holds) return false;
    for (const auto& rec : report.spectral) {
        if (!rec.kernel_match || rec.gap_ambiguity) return false;
        if (!rec.analytic_hold || !rec.exactness_holds) return false;
    }
    return true;
}

namespace {

ordered_json inequality_to_json(const InequalityRow& row) {
    return ordered_json{{"k", row.k},
                        {"lhs", row.lhs},
                        {"rhs", row.rhs},
                        {"holds", row.holds},
                        {"equality_required", row.equality_required},
                        {"equality_holds", row.equality_holds}};
}

ordered_json analytic_to_json(const AnalyticInequalityRow& row) {
    return ordered_json{{"k", row.k},
                        {"lhs", row.lhs},
                        {"rhs", row.rhs},
                        {"holds", row.holds},
                        {"equality_required", row.equality_required},
                        {"equality_holds", row.equality_holds}};
}

} // namespace

std::string report_to_json(const VerificationReport& report) {
    ordered_json j;
    j["instance"] = report.instance;
    j["n"] = report.n;
    j["betti"] = report.beta;
    j["gamma"] = report.gamma;
    j["eta"] = report.eta;
    j["c"] = report.c;
    j["mu"] = report.mu;
    j["inequalities"] = ordered_json::array();
    for (const auto& row : report.inequalities) j["inequalities"].push_back(inequality_to_json(row));
    j["euler"] = ordered_json{{"lhs", report.euler.lhs},
                              {"lhs_paper_printed", report.euler.lhs_printed},
                              {"rhs_corrected", report.euler.rhs_corrected},
                              {"rhs_paper_printed", report.euler.rhs_printed},
                              {"corrected_holds", report.euler.corrected_holds},
                              {"printed_holds", report.euler.printed_holds}};
    j["spectral"] = ordered_json::array();
    for (const auto& rec : report.spectral) {
        ordered_json r;
        r["s"] = rec.s;
        r["phi"] = rec.phi;
        r["nu"] = rec.nu_values;
        r["kernel_dims"] = rec.kernel_dims;
        r["kernel_match"] = rec.kernel_match;
        r["gap_ambiguity"] = rec.gap_ambiguity;
        r["analytic"] = ordered_json::array();
        for (const auto& row : rec.analytic) r["analytic"].push_back(analytic_to_json(row));
        r["analytic_hold"] = rec.analytic_hold;
        r["clusters_checked"] = rec.clusters_checked;
        r["exactness_holds"] = rec.exactness_holds;
        j["spectral"].push_back(r);
    }
    j["duality"] = ordered_json{{"applicable", report.duality.applicable},
                                {"skip_reason", report.duality.skip_reason},
                                {"holds", report.duality.holds},
                                {"beta_relative", report.duality.beta_relative},
                                {"beta_complement", report.duality.beta_complement}};
    j["parity"] = ordered_json{{"applicable", report.parity.applicable},
                               {"skip_reason", report.parity.skip_reason},
                               {"chi_boundary", report.parity.chi_boundary},
                               {"chi_m", report.parity.chi_m},
                               {"derived_holds", report.parity.derived_holds},
                               {"printed_holds", report.parity.printed_holds},
                               {"parity_mod2_holds", report.parity.parity_mod2_holds}};
    j["normative_pass"] = normative_pass(report);
    return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad report JSON: ") + e.what());
    }
    VerificationReport report;
    report.instance = j.at("instance").get<std::string>();
    report.n = j.at("n").get<int>();
    report.beta = j.at("betti").get<std::vector<int>>();
    report.gamma = j.at("gamma").get<std::vector<int>>();
    report.eta = j.at("eta").get<std::vector<int>>();
    report.c = j.at("c").get<std::vector<long long>>();
    report.mu = j.at("mu").get<std::vector<long long>>();
    for (const auto& row : j.at("inequalities")) {
        InequalityRow r;
        r.k = row.at("k").get<int>();
        r.lhs = row.at("lhs").get<long long>();
        r.rhs = row.at("rhs").get<long long>();
        r.holds = row.at("holds").get<bool>();
        r.equality_required = row.at("equality_required").get<bool>();
        r.equality_holds = row.at("equality_holds").get<bool>();
        report.inequalities.push_back(r);
    }
    const auto& e = j.at("euler");
    report.euler.lhs = e.at("lhs").get<long long>();
    report.euler.lhs_printed = e.at("lhs_paper_printed").get<long long>();
    report.euler.rhs_corrected = e.at("rhs_corrected").get<long long>();
    report.euler.rhs_printed = e.at("rhs_paper_printed").get<long long>();
    report.euler.corrected_holds = e.at("corrected_holds").get<bool>();
    report.euler.printed_holds = e.at("printed_holds").get<bool>();
    for (const auto& rec : j.at("spectral")) {
        SpectralRecord r;
        r.s = rec.at("s").get<double>();
        r.phi = rec.at("phi").get<std::string>();
        r.nu_values = rec.at("nu").get<std::vector<double>>();
        r.kernel_dims = rec.at("kernel_dims").get<std::vector<int>>();
        r.kernel_match = rec.at("kernel_match").get<bool>();
        r.gap_ambiguity = rec.at("gap_ambiguity").get<bool>();
        for (const auto& row : rec.at("analytic")) {
            AnalyticInequalityRow a;
            a.k = row.at("k").get<int>();
            a.lhs = row.at("lhs").get<double>();
            a.rhs = row.at("rhs").get<double>();
            a.holds = row.at("holds").get<bool>();
            a.equality_required = row.at("equality_required").get<bool>();
            a.equality_holds = row.at("equality_holds").get<bool>();
            r.analytic.push_back(a);
        }
        r.analytic_hold = rec.at("analytic_hold").get<bool>();
        r.clusters_checked = rec.at("clusters_checked").get<int>();
        r.exactness_holds = rec.at("exactness_holds").get<bool>();
        report.spectral.push_back(r);
    }
    const auto& d = j.at("duality");
    report.duality.applicable = d.at("applicable").get<bool>();
    report.duality.skip_reason = d.at("skip_reason").get<std::string>();
    report.duality.holds = d.at("holds").get<bool>();
    report.duality.beta_relative = d.at("beta_relative").get<std::vector<int>>();
    report.duality.beta_complement = d.at("beta_complement").get<std::vector<int>>();
    const auto& p = j.at("parity");
    report.parity.applicable = p.at("applicable").get<bool>();
    report.parity.skip_reason = p.at("skip_reason").get<std::string>();
    report.parity.chi_boundary = p.at("chi_boundary").get<long long>();
    report.parity.chi_m = p.at("chi_m").get<long long>();
    report.parity.derived_holds = p.at("derived_holds").get<bool>();
    report.parity.printed_holds = p.at("printed_holds").get<bool>();
    report.parity.parity_mod2_holds = p.at("parity_mod2_holds").get<bool>();
    return report;
}

} // namespace morseb
