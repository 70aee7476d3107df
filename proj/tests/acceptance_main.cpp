// Acceptance suite: one line per criterion, exit 0 only if all pass.
// Every tolerance is pinned here, in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <morseb/cohomology.hpp>
#include <morseb/examples.hpp>
#include <morseb/models.hpp>
#include <morseb/spectral.hpp>
#include <morseb/verify.hpp>
#include <morseb/witten.hpp>

using namespace morseb;

namespace {

struct CriterionResult {
    int id;
    std::string name;
    bool pass = true;
    std::string detail;
};

std::vector<CriterionResult> g_results;

struct Checker {
    CriterionResult& result;
    void require(bool condition, const std::string& what) {
        if (!condition) {
            result.pass = false;
            if (!result.detail.empty()) result.detail += "; ";
            result.detail += what;
        }
    }
};

void run_criterion(int id, const std::string& name,
                   const std::function<void(Checker&)>& body) {
    CriterionResult result{id, name, true, ""};
    Checker checker{result};
    try {
        body(checker);
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail += std::string("exception: ") + e.what();
    }
    g_results.push_back(result);
    std::printf("[%2d] %-42s %s%s%s\n", id, name.c_str(), result.pass ? "PASS" : "FAIL",
                result.detail.empty() ? "" : "  -- ", result.detail.c_str());
    std::fflush(stdout);
}

using BC = BoundaryClass;

Instance relabel(const Instance& base, std::vector<BC> labels, const std::string& suffix) {
    return with_labels(base, std::move(labels), base.name + "[" + suffix + "]");
}

// the 14 Theorem-1 instances: signs come from the bundled Morse data, the
// a/r choice varies; the r- solid torus is the negated mesh
std::vector<Instance> theorem_instances() {
    std::vector<Instance> out;
    const Instance interval = generate_example("interval", 8);
    out.push_back(relabel(interval, {BC::APlus, BC::AMinus}, "a+,a-"));
    out.push_back(relabel(interval, {BC::APlus, BC::RMinus}, "a+,r-"));
    out.push_back(relabel(interval, {BC::RPlus, BC::AMinus}, "r+,a-"));
    out.push_back(relabel(interval, {BC::RPlus, BC::RMinus}, "r+,r-"));

    const Instance disk = generate_example("disk", 6);
    out.push_back(relabel(disk, {BC::AMinus}, "a-"));
    out.push_back(relabel(disk, {BC::RMinus}, "r-"));

    const Instance annulus = generate_example("annulus", 6);
    out.push_back(relabel(annulus, {BC::APlus, BC::RMinus}, "a+,r-"));
    out.push_back(relabel(annulus, {BC::RPlus, BC::AMinus}, "r+,a-"));
    out.push_back(relabel(annulus, {BC::APlus, BC::AMinus}, "a+,a-"));
    out.push_back(relabel(annulus, {BC::RPlus, BC::RMinus}, "r+,r-"));

    const Instance ball = generate_example("ball3", 2);
    out.push_back(relabel(ball, {BC::APlus}, "a+"));
    out.push_back(relabel(ball, {BC::RPlus}, "r+"));

    const Instance torus = generate_example("solid_torus", 5);
    out.push_back(relabel(torus, {BC::APlus}, "a+"));
    out.push_back(relabel(negate_morse_function(torus), {BC::RMinus}, "r-"));
    return out;
}

struct SpectralData {
    std::string name;
    std::vector<int> beta;
    // spectra[si][k]
    std::vector<std::vector<SpectrumReport>> spectra;
};

const std::vector<double> kScales{0.0, 1.0, 5.0, 25.0};

SpectralData spectral_data_for(const Instance& instance) {
    SpectralData data;
    data.name = instance.name;
    const auto rcc = relative_cochain_complex(instance.complex, instance.decomposition());
    data.beta = betti(rcc);
    const auto potential = simplex_potential(instance.complex, rcc);
    const auto weights = unit_weights(rcc);
    for (double s : kScales) {
        const auto d_s = deformed_coboundary(rcc, potential, s);
        std::vector<SpectrumReport> per_degree;
        for (int k = 0; k <= instance.complex.n; ++k)
            per_degree.push_back(
                eigensolve(assemble_laplacian(d_s, weights, k, s), SolverMode::Dense));
        data.spectra.push_back(std::move(per_degree));
    }
    return data;
}

std::string join_ll(const std::vector<long long>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

} // namespace

int main() {
    const auto instances = theorem_instances();
    std::vector<VerificationReport> reports;

    run_criterion(1, "theorem-1 exact suite (14 instances)", [&](Checker& c) {
        double worst_ms = 0.0;
        for (const auto& instance : instances) {
            const auto start = std::chrono::steady_clock::now();
            const auto report = verify_instance(instance, {});
            const double ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
            worst_ms = std::max(worst_ms, ms);
            for (const auto& row : report.inequalities) {
                c.require(row.holds, report.instance + ": inequality fails at k=" +
                                         std::to_string(row.k));
                if (row.equality_required)
                    c.require(row.equality_holds, report.instance + ": k=n equality fails");
            }
            c.require(ms < 1000.0, report.instance + ": integer track took " +
                                       std::to_string(ms) + " ms");
            reports.push_back(report);
        }
        // pin the worked values from the two reference instances
        for (const auto& report : reports) {
            if (report.instance == "disk[r-]") {
                c.require(report.mu == std::vector<long long>{1, 1, 1},
                          "disk[r-] mu=" + join_ll(report.mu) + " wanted 1,1,1");
                c.require(report.beta == std::vector<int>{0, 0, 1}, "disk[r-] beta");
            }
            if (report.instance == "ball3[a+]") {
                c.require(report.mu == std::vector<long long>{1, 0, 1, 1},
                          "ball3[a+] mu=" + join_ll(report.mu) + " wanted 1,0,1,1");
                c.require(report.beta == std::vector<int>{1, 0, 0, 0}, "ball3[a+] beta");
            }
        }
        c.require(reports.size() == 14, "expected 14 instances");
    });

    run_criterion(2, "corrected Euler relation + printed record", [&](Checker& c) {
        bool saw_ball3 = false;
        for (const auto& report : reports) {
            c.require(report.euler.corrected_holds, report.instance + ": corrected form fails");
            if (report.instance == "ball3[a+]") {
                saw_ball3 = true;
                c.require(report.euler.lhs_printed == 1 && report.euler.rhs_printed == 3,
                          "ball3[a+] printed sides should evaluate 1 vs 3");
                c.require(!report.euler.printed_holds,
                          "ball3[a+] printed form unexpectedly holds");
            }
        }
        c.require(saw_ball3, "ball3[a+] missing");
    });

    const auto spectral_start = std::chrono::steady_clock::now();
    std::vector<SpectralData> spectral;
    for (const auto& instance : instances) spectral.push_back(spectral_data_for(instance));
    const double spectra_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - spectral_start).count();

    run_criterion(3, "kernel identity at s in {0,1,5,25}", [&](Checker& c) {
        for (const auto& data : spectral) {
            for (std::size_t si = 0; si < kScales.size(); ++si) {
                for (std::size_t k = 0; k < data.spectra[si].size(); ++k) {
                    const auto& report = data.spectra[si][k];
                    c.require(report.kernel_dim == data.beta[k],
                              data.name + ": kernel dim != beta at s=" +
                                  std::to_string(kScales[si]) + " k=" + std::to_string(k));
                    c.require(!report.gap_ambiguous,
                              data.name + ": gap ambiguity at s=" + std::to_string(kScales[si]));
                }
            }
        }
    });

    run_criterion(4, "eigenspace exactness at s in {0,5}", [&](Checker& c) {
        for (const auto& data : spectral) {
            for (std::size_t si : {std::size_t{0}, std::size_t{2}}) { // s = 0 and 5
                const auto clusters = multiplicity_alternation(data.spectra[si], 1e-6);
                for (const auto& cluster : clusters)
                    c.require(cluster.alternating_sum == 0,
                              data.name + ": nonzero alternating sum at s=" +
                                  std::to_string(kScales[si]));
            }
        }
    });

    run_criterion(5, "analytic inequalities, heat t in {0.1,1,10}", [&](Checker& c) {
        const auto start = std::chrono::steady_clock::now();
        for (const auto& data : spectral) {
            for (std::size_t si = 0; si < kScales.size(); ++si) {
                for (double t : {0.1, 1.0, 10.0}) {
                    const auto phi = CountingFunction::heat(t);
                    std::vector<double> nu_values;
                    for (const auto& report : data.spectra[si])
                        nu_values.push_back(nu(report, phi));
                    for (const auto& row : check_analytic_inequalities(nu_values, data.beta)) {
                        c.require(row.holds, data.name + ": nu inequality fails at k=" +
                                                 std::to_string(row.k) + " s=" +
                                                 std::to_string(kScales[si]) + " t=" +
                                                 std::to_string(t));
                        if (row.equality_required)
                            c.require(row.equality_holds,
                                      data.name + ": k=n equality beyond 1e-8 at s=" +
                                          std::to_string(kScales[si]) + " t=" + std::to_string(t));
                    }
                }
            }
        }
        const double seconds =
            spectra_seconds +
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.require(seconds < 60.0, "suite took " + std::to_string(seconds) + " s");
    });

    run_criterion(6, "oscillator law {10,50,90}/{30,70,110}, order 2", [](Checker& c) {
        OscillatorSpec spec;
        spec.s = 10.0;
        spec.length = 3.0;
        spec.grid = 4000;
        spec.bc = OscBoundaryCondition::Neumann;
        const auto neumann = oscillator_eigenvalues(spec, 3);
        const double expected_n[3] = {10.0, 50.0, 90.0};
        for (int i = 0; i < 3; ++i)
            c.require(std::abs(neumann[i] - expected_n[i]) <= 0.01 * expected_n[i],
                      "neumann level " + std::to_string(i));
        spec.bc = OscBoundaryCondition::Dirichlet;
        const auto dirichlet = oscillator_eigenvalues(spec, 3);
        const double expected_d[3] = {30.0, 70.0, 110.0};
        for (int i = 0; i < 3; ++i)
            c.require(std::abs(dirichlet[i] - expected_d[i]) <= 0.01 * expected_d[i],
                      "dirichlet level " + std::to_string(i));

        spec.bc = OscBoundaryCondition::Neumann;
        spec.grid = 500;
        const auto coarse = oscillator_eigenvalues(spec, 5);
        spec.grid = 1000;
        const auto fine = oscillator_eigenvalues(spec, 5);
        for (int p = 0; p < 5; ++p) {
            const double exact = (4 * p + 1) * 10.0;
            c.require(std::abs(coarse[p] - exact) >= 3.5 * std::abs(fine[p] - exact),
                      "halving h gained < 3.5x at level " + std::to_string(p));
        }
    });

    run_criterion(7, "ground-state overlap limit (rho = 0.5)", [](Checker& c) {
        const CutoffProfile cutoff{0.5};
        const double v10 = ground_overlap(10.0, cutoff);
        const double v100 = ground_overlap(100.0, cutoff);
        const double v1000 = ground_overlap(1000.0, cutoff);
        c.require(v10 <= v100 + 1e-12 && v100 <= v1000 + 1e-12, "not monotone over {10,100,1000}");
        c.require(std::abs(v1000 - 1.0) <= 0.02, "s=1000 overlap misses 1 by more than 0.02");
    });

    run_criterion(8, "flat-model localization at s=200", [](Checker& c) {
        const CutoffProfile cutoff{0.5};
        const auto phi = CountingFunction::gaussian(1.0);
        for (int r : {0, 1}) {
            for (int k : {0, 1}) {
                FlatModelSpec spec{1, {r == 1 ? -1 : 1}, k, 200.0};
                const double trace = flat_model_trace_numeric(spec, phi, cutoff);
                const double target = (k == r) ? 1.0 : 0.0;
                c.require(std::abs(trace - target) <= 0.05,
                          "n=1 r=" + std::to_string(r) + " k=" + std::to_string(k));
            }
        }
        for (int k : {0, 1, 2}) {
            FlatModelSpec spec{2, {-1, 1}, k, 200.0};
            const double trace = flat_model_trace_analytic(spec, phi, cutoff);
            const double target = (k == 1) ? 1.0 : 0.0;
            c.require(std::abs(trace - target) <= 0.05, "n=2 r=1 k=" + std::to_string(k));
        }
    });

    run_criterion(9, "cylinder limits over the default schedule", [](Checker& c) {
        const auto base = circle_spectrum(2.0 * 3.14159265358979323846, 9);
        const std::vector<double> s_schedule{10.0, 100.0, 1000.0}, m_schedule{1.0, 4.0, 16.0};
        struct Expectation {
            CylinderClass cls;
            double limit;
        };
        for (const auto& [cls, limit] : {Expectation{CylinderClass::RPlus, 0.0},
                                         Expectation{CylinderClass::APlus, 1.0},
                                         Expectation{CylinderClass::RMinus, 1.0},
                                         Expectation{CylinderClass::AMinus, 0.0}}) {
            const auto result =
                cylinder_schedule(cls, base, base, 1, s_schedule, m_schedule, {0.5});
            c.require(std::abs(result.limit - limit) < 1e-12,
                      to_string(cls) + ": unexpected limit value");
            c.require(result.rows.back().abs_error <= 0.05,
                      to_string(cls) + ": final point misses the limit by " +
                          std::to_string(result.rows.back().abs_error));
        }
    });

    run_criterion(10, "label-swap duality on orientable instances", [&](Checker& c) {
        int annulus_partitions = 0;
        for (const auto& report : reports) {
            if (report.instance.rfind("moebius", 0) == 0) continue;
            c.require(report.duality.applicable, report.instance + ": duality skipped");
            c.require(report.duality.holds, report.instance + ": duality fails");
            if (report.instance.rfind("annulus", 0) == 0) ++annulus_partitions;
        }
        c.require(annulus_partitions == 4, "expected all four annulus boundary partitions");
    });

    run_criterion(11, "parity corollary on odd instances", [&](Checker& c) {
        bool ball3_printed_recorded_failing = false;
        for (const auto& report : reports) {
            if (report.n % 2 == 0) continue;
            c.require(report.parity.applicable, report.instance + ": parity skipped");
            c.require(report.parity.derived_holds,
                      report.instance + ": chi(dM) = 2 chi(M) fails");
            if (report.instance == "ball3[a+]" && !report.parity.printed_holds)
                ball3_printed_recorded_failing = true;
        }
        c.require(ball3_printed_recorded_failing,
                  "ball3[a+] must record the printed -2 form as failing");
    });

    int failures = 0;
    for (const auto& result : g_results)
        if (!result.pass) ++failures;
    std::printf("%zu criteria, %d failing\n", g_results.size(), failures);
    return failures == 0 ? 0 : 1;
}
