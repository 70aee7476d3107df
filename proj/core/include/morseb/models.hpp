#pragma once

#include <functional>
#include <string>
#include <vector>

#include "morseb/spectral.hpp"

namespace morseb {

enum class OscBoundaryCondition { Dirichlet, Neumann };
enum class SideSign { Plus, Minus }; // which collar normal form the operator models

/// Half-line harmonic oscillator -d^2/du^2 + s^2 u^2 + shift on [0, L] with
/// the chosen condition at u = 0 and a Dirichlet cap at u = L. The shift is
/// (-1)^(eps+1) s on the plus side and (-1)^eps s on the minus side.
struct OscillatorSpec {
    double s = 1.0;
    double length = 0.0; // 0 = automatic: max(8/sqrt(s), 3 rho + 1)
    int grid = 4000;     // number of interior intervals
    OscBoundaryCondition bc = OscBoundaryCondition::Neumann;
    int shift_index = 0;   // eps in {0, 1}; shift 0 when shift_enabled = false
    SideSign side = SideSign::Plus;
    bool shift_enabled = false;

    double shift() const;
    double effective_length() const;
};

/// Lowest `count` eigenvalues by second-order central differences (Neumann
/// through the mirror/ghost point). Throws TruncationTooSmallError when
/// L < 8/sqrt(s) and GridTooCoarseError when h^2 s^2 >= 0.1.
std::vector<double> oscillator_eigenvalues(const OscillatorSpec& spec, int count);

/// Continuous cutoff: 1 on [0, 2 rho], smoothstep down to 0 on [2 rho, 3 rho],
/// 0 beyond. beta(0) = 1 and support is [0, 3 rho].
struct CutoffProfile {
    double rho = 0.5;
    double operator()(double u) const;
    double support_end() const { return 3.0 * rho; }
};

/// Integral of beta(u) * theta_0(s,u)^2 over the half line, where theta_0 is
/// the half-line-normalized oscillator ground state. Tends to beta(0) = 1 as
/// s grows. Adaptive quadrature; throws QuadratureFailureError.
double ground_overlap(double s, const CutoffProfile& cutoff);
double ground_overlap(double s, const std::function<double(double)>& cutoff,
                      double support_end);

/// Flat-space model operator on k-forms of R^n: sum_j of the harmonic
/// oscillator on axis j plus s * eps_j * Z_j, where Z_j has eigenvalue +1 on
/// monomials containing dx_j and -1 otherwise.
struct FlatModelSpec {
    int n = 1;
    std::vector<int> signs; // eps_j in {+1, -1}; Morse index r = #{eps_j = -1}
    int k = 0;
    double s = 1.0;

    int morse_index() const;
};

/// All eigenvalues <= energy_cap via enumeration over Hermite levels and form
/// monomials (n <= 8). ScaleThrows EnergyCapTooSmallError when the cap excludes
/// even the lowest eigenvalue.
std::vector<double> flat_model_spectrum(const FlatModelSpec& spec, double energy_cap);

/// Tr(beta phi(L_s^k)) over R^n. The numeric path (n <= 2) uses per-axis
/// finite differences with a product cutoff; the analytic path (n <= 8) uses
/// the enumerated spectrum with Gaussian-overlap cutoff factors. Both tend to
/// 1 when k equals the Morse index r and to 0 otherwise, as s grows.
double flat_model_trace_numeric(const FlatModelSpec& spec, const CountingFunction& phi,
                                const CutoffProfile& cutoff);
double flat_model_trace_analytic(const FlatModelSpec& spec, const CountingFunction& phi,
                                 const CutoffProfile& cutoff);

enum class CylinderClass { RPlus, APlus, RMinus, AMinus };
std::string to_string(CylinderClass c);
CylinderClass cylinder_class_from_string(const std::string& s);

/// Model operator on the half cylinder over a closed base: oscillator factor
/// tensor base Laplacian. The boundary condition pairing follows the parity
/// of the oscillator eigenfunctions: relative classes take odd (Dirichlet)
/// oscillator levels on the tangential part and even (Neumann) levels on the
/// normal part; absolute classes swap the parities.
struct CylinderModelSpec {
    CylinderClass cls = CylinderClass::APlus;
    std::vector<double> base_spectrum_k;   // base Laplacian spectrum, degree k
    std::vector<double> base_spectrum_km1; // degree k-1
    int k = 1;
    double s = 10.0;
    CountingFunction phi = CountingFunction::gaussian(1.0);
    CutoffProfile cutoff{0.5};
};

double cylinder_trace(const CylinderModelSpec& spec);

/// Limit dictated by the class: 0 for r+/a-, eta_k (base degree-k kernel
/// multiplicity) for a+, gamma_{k-1} (degree-(k-1) kernel multiplicity) for r-.
double cylinder_limit(const CylinderModelSpec& spec);

struct CylinderScheduleRow {
    double s = 0.0;
    double m = 0.0;
    double trace = 0.0;
    double limit = 0.0;
    double abs_error = 0.0;
};

struct CylinderScheduleResult {
    std::vector<CylinderScheduleRow> rows;
    double limit = 0.0;
    bool converged = false; // within 0.05 at the final schedule point
};

/// Runs cylinder_trace along paired (s, m) schedules (gaussian family).
/// Throws ScheduleTooShortError when fewer than two points are given.
CylinderScheduleResult cylinder_schedule(CylinderClass cls,
                                         const std::vector<double>& base_spectrum_k,
                                         const std::vector<double>& base_spectrum_km1,
                                         int k,
                                         const std::vector<double>& s_schedule,
                                         const std::vector<double>& m_schedule,
                                         const CutoffProfile& cutoff = {0.5});

/// Laplace spectrum of the circle of circumference `length` on 0- and 1-forms:
/// {(2 pi j / length)^2} with multiplicity 2 for j >= 1 and a single zero.
std::vector<double> circle_spectrum(double length, int count);

/// Hermite function h_p for the s-scaled oscillator, full-line normalized.
double hermite_function(int p, double s, double x);

/// <beta theta_p, theta_p> on the half line with half-line-normalized
/// oscillator eigenfunctions (= 2 * full-line integral over [0, inf)).
double halfline_cutoff_overlap(int p, double s, const CutoffProfile& cutoff);

/// Adaptive Simpson quadrature; throws QuadratureFailureError when the depth
/// cap is hit before reaching the tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-12, int max_depth = 48);

} // namespace morseb
