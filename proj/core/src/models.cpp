#include "morseb/models.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace morseb {

namespace {

constexpr double kPi = 3.14159265358979323846;

double smoothstep01(double t) {
    t = std::clamp(t, 0.0, 1.0);
    return t * t * (3.0 - 2.0 * t);
}

// ascending eigenvalues of a symmetric tridiagonal matrix
std::vector<double> tridiagonal_eigenvalues(const Eigen::VectorXd& diag,
                                            const Eigen::VectorXd& sub) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    return {solver.eigenvalues().data(), solver.eigenvalues().data() + diag.size()};
}

// solve (T - sigma I) x = b by banded elimination with partial pivoting
Eigen::VectorXd tridiagonal_shifted_solve(const Eigen::VectorXd& diag,
                                          const Eigen::VectorXd& sub, double sigma,
                                          Eigen::VectorXd b) {
    const int n = static_cast<int>(diag.size());
    Eigen::VectorXd d(n), c(n), e(n), a(n);
    for (int i = 0; i < n; ++i) {
        d[i] = diag[i] - sigma;
        c[i] = (i + 1 < n) ? sub[i] : 0.0;
        a[i] = (i > 0) ? sub[i - 1] : 0.0;
        e[i] = 0.0;
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(a[i + 1]) > std::abs(d[i])) {
            std::swap(d[i], a[i + 1]);
            std::swap(c[i], d[i + 1]);
            std::swap(e[i], c[i + 1]);
            std::swap(b[i], b[i + 1]);
        }
        if (d[i] == 0.0) d[i] = 1e-300;
        const double factor = a[i + 1] / d[i];
        d[i + 1] -= factor * c[i];
        c[i + 1] -= factor * e[i];
        b[i + 1] -= factor * b[i];
    }
    if (d[n - 1] == 0.0) d[n - 1] = 1e-300;
    Eigen::VectorXd x(n);
    for (int i = n - 1; i >= 0; --i) {
        double rhs = b[i];
        if (i + 1 < n) rhs -= c[i] * x[i + 1];
        if (i + 2 < n) rhs -= e[i] * x[i + 2];
        x[i] = rhs / d[i];
    }
    return x;
}

// eigenvector by inverse iteration; 1D tridiagonal spectra are simple
Eigen::VectorXd tridiagonal_eigenvector(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub,
                                        double lambda, double scale) {
    const int n = static_cast<int>(diag.size());
    Eigen::VectorXd x(n);
    std::uint64_t state = 0x853c49e6748fea9bULL;
    for (int i = 0; i < n; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        x[i] = 0.5 + static_cast<double>(state % 997) / 997.0;
    }
    x.normalize();
    const double sigma = lambda + 1e-12 * scale;
    for (int pass = 0; pass < 4; ++pass) {
        x = tridiagonal_shifted_solve(diag, sub, sigma, x);
        x.normalize();
    }
    return x;
}

} // namespace

double OscillatorSpec::shift() const {
    if (!shift_enabled) return 0.0;
    const int eps = shift_index;
    if (side == SideSign::Plus) return ((eps + 1) % 2 == 0 ? 1.0 : -1.0) * s;
    return (eps % 2 == 0 ? 1.0 : -1.0) * s;
}

double OscillatorSpec::effective_length() const {
    if (length > 0.0) return length;
    return std::max(8.0 / std::sqrt(s), 2.5);
}

std::vector<double> oscillator_eigenvalues(const OscillatorSpec& spec, int count) {
    if (!(spec.s > 0.0)) throw Error("oscillator needs s > 0");
    const double length = spec.effective_length();
    if (length < 8.0 / std::sqrt(spec.s))
        throw TruncationTooSmallError("half-line truncation must satisfy L >= 8/sqrt(s)");
    const int n_grid = spec.grid;
    const double h = length / n_grid;
    if (h * h * spec.s * spec.s >= 0.1)
        throw GridTooCoarseError("h^2 s^2 must stay below 0.1");
    if (count > n_grid / 4) throw Error("requested eigenvalue count exceeds grid/4");

    const double inv_h2 = 1.0 / (h * h);
    const double shift = spec.shift();

    if (spec.bc == OscBoundaryCondition::Dirichlet) {
        // nodes 1..N-1, Dirichlet at both u = 0 and the far cap u = L
        const int m = n_grid - 1;
        Eigen::VectorXd diag(m), sub(m - 1);
        for (int i = 0; i < m; ++i) {
            const double u = (i + 1) * h;
            diag[i] = 2.0 * inv_h2 + spec.s * spec.s * u * u + shift;
        }
        sub.setConstant(-inv_h2);
        auto eigs = tridiagonal_eigenvalues(diag, sub);
        eigs.resize(count);
        return eigs;
    }

    // Neumann via the mirror point: even extension through u = 0, symmetrized
    // by a similarity that scales node 0 by 1/sqrt(2)
    const int m = n_grid;
    Eigen::VectorXd diag(m), sub(m - 1);
    for (int i = 0; i < m; ++i) {
        const double u = i * h;
        diag[i] = 2.0 * inv_h2 + spec.s * spec.s * u * u + shift;
    }
    sub.setConstant(-inv_h2);
    sub[0] = -std::sqrt(2.0) * inv_h2;
    auto eigs = tridiagonal_eigenvalues(diag, sub);
    eigs.resize(count);
    return eigs;
}

double CutoffProfile::operator()(double u) const {
    u = std::abs(u);
    if (u <= 2.0 * rho) return 1.0;
    if (u >= 3.0 * rho) return 0.0;
    return 1.0 - smoothstep01((u - 2.0 * rho) / rho);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          int max_depth) {
    struct Simpson {
        const std::function<double(double)>& f;
        int max_depth;
        double eval(double a, double fa, double b, double fb, double whole, double fm,
                    double tol, int depth) const {
            const double m = 0.5 * (a + b);
            const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            const double delta = left + right - whole;
            if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
            if (depth >= max_depth)
                throw QuadratureFailureError("adaptive quadrature hit the depth cap");
            return eval(a, fa, m, fm, left, flm, 0.5 * tol, depth + 1) +
                   eval(m, fm, b, fb, right, frm, 0.5 * tol, depth + 1);
        }
    };
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return Simpson{f, max_depth}.eval(a, fa, b, fb, whole, fm, tol, 0);
}

double hermite_function(int p, double s, double x) {
    const double y = std::sqrt(s) * x;
    const double h0 = std::pow(s / kPi, 0.25) * std::exp(-0.5 * y * y);
    if (p == 0) return h0;
    double prev = 0.0, curr = h0;
    for (int q = 0; q < p; ++q) {
        const double next =
            y * std::sqrt(2.0 / (q + 1)) * curr - std::sqrt(static_cast<double>(q) / (q + 1)) * prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

double ground_overlap(double s, const std::function<double(double)>& cutoff,
                      double support_end) {
    if (!(s > 0.0)) throw Error("ground overlap needs s > 0");
    const double gauss_reach = 14.0 / std::sqrt(s);
    const double upper = std::min(support_end, gauss_reach);
    const auto integrand = [&](double u) {
        const double theta = hermite_function(0, s, u);
        return 2.0 * cutoff(u) * theta * theta; // half-line normalization
    };
    // split so the Gaussian core is resolved before the adaptive pass
    const double split = std::min(upper, 4.0 / std::sqrt(s));
    double total = integrate_adaptive(integrand, 0.0, split, 1e-12);
    if (upper > split) total += integrate_adaptive(integrand, split, upper, 1e-12);
    return total;
}

double ground_overlap(double s, const CutoffProfile& cutoff) {
    return ground_overlap(
        s, [&](double u) { return cutoff(u); }, cutoff.support_end());
}

double halfline_cutoff_overlap(int p, double s, const CutoffProfile& cutoff) {
    const double reach = (std::sqrt(2.0 * p + 1.0) + 14.0) / std::sqrt(s);
    const double upper = std::min(cutoff.support_end(), reach);
    const auto integrand = [&](double u) {
        const double theta = hermite_function(p, s, u);
        return 2.0 * cutoff(u) * theta * theta;
    };
    const double split = std::min(upper, (std::sqrt(2.0 * p + 1.0) + 2.0) / std::sqrt(s));
    double total = integrate_adaptive(integrand, 0.0, split, 1e-12);
    if (upper > split) total += integrate_adaptive(integrand, split, upper, 1e-12);
    return total;
}

int FlatModelSpec::morse_index() const {
    int r = 0;
    for (int e : signs)
        if (e < 0) ++r;
    return r;
}

namespace {

void validate_flat_spec(const FlatModelSpec& spec, int max_n) {
    if (spec.n < 1 || spec.n > max_n)
        throw Error("flat model dimension out of range (n <= " + std::to_string(max_n) + ")");
    if (static_cast<int>(spec.signs.size()) != spec.n)
        throw Error("flat model needs one sign per axis");
    for (int e : spec.signs)
        if (e != 1 && e != -1) throw Error("flat model signs must be +-1");
    if (spec.k < 0 || spec.k > spec.n) throw Error("form degree out of range");
    if (!(spec.s > 0.0)) throw Error("flat model needs s > 0");
}

// per-axis ground offset: s * (1 + eps * zeta), zeta = +1 iff the axis is in
// the form monomial
double axis_offset(double s, int eps, bool in_monomial) {
    return s * (1.0 + eps * (in_monomial ? 1.0 : -1.0));
}

// enumerate Hermite level vectors with 2s * sum(p) <= budget
void enumerate_levels(int axes, double budget, double step, std::vector<double>& scratch,
                      double base, std::vector<double>& out) {
    if (axes == 0) {
        out.push_back(base);
        return;
    }
    for (int p = 0;; ++p) {
        const double cost = step * p;
        if (cost > budget) break;
        enumerate_levels(axes - 1, budget - cost, step, scratch, base + cost, out);
    }
}

} // namespace

std::vector<double> flat_model_spectrum(const FlatModelSpec& spec, double energy_cap) {
    validate_flat_spec(spec, 8);
    std::vector<double> out;
    std::vector<int> axes(spec.n);
    // iterate form monomials of degree k as bitmasks
    for (unsigned mask = 0; mask < (1u << spec.n); ++mask) {
        if (static_cast<int>(__builtin_popcount(mask)) != spec.k) continue;
        double base = 0.0;
        for (int j = 0; j < spec.n; ++j)
            base += axis_offset(spec.s, spec.signs[j], mask & (1u << j));
        if (base > energy_cap) continue;
        std::vector<double> scratch;
        enumerate_levels(spec.n, energy_cap - base, 2.0 * spec.s, scratch, base, out);
    }
    if (out.empty())
        throw EnergyCapTooSmallError("energy cap excludes the whole spectrum in degree " +
                                     std::to_string(spec.k));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

double phi_support_bound(const CountingFunction& phi, double floor_value) {
    // smallest E with phi(E) < floor_value
    const double logf = -std::log(floor_value);
    if (phi.family == CountingFunction::Family::Heat) return logf / phi.param;
    return std::sqrt(logf / phi.param);
}

} // namespace

double flat_model_trace_analytic(const FlatModelSpec& spec, const CountingFunction& phi,
                                 const CutoffProfile& cutoff) {
    validate_flat_spec(spec, 8);
    const double cap = phi_support_bound(phi, 1e-16) + 2.0 * spec.s * spec.n + 1.0;

    const int p_max = static_cast<int>(cap / (2.0 * spec.s)) + 1;
    // full-line overlap of an even integrand = the half-line formula
    std::vector<double> overlap(p_max + 1);
    for (int p = 0; p <= p_max; ++p) overlap[p] = halfline_cutoff_overlap(p, spec.s, cutoff);

    double trace = 0.0;
    std::vector<int> levels(spec.n, 0);
    for (unsigned mask = 0; mask < (1u << spec.n); ++mask) {
        if (static_cast<int>(__builtin_popcount(mask)) != spec.k) continue;
        double base = 0.0;
        for (int j = 0; j < spec.n; ++j)
            base += axis_offset(spec.s, spec.signs[j], mask & (1u << j));
        if (base > cap) continue;

        std::fill(levels.begin(), levels.end(), 0);
        for (;;) {
            double energy = base;
            double weight = 1.0;
            for (int j = 0; j < spec.n; ++j) {
                energy += 2.0 * spec.s * levels[j];
                weight *= overlap[levels[j]];
            }
            if (energy <= cap) trace += phi(energy) * weight;

            // odometer increment over level vectors below the cap
            int j = 0;
            for (; j < spec.n; ++j) {
                levels[j] += 1;
                double e = base;
                for (int t = 0; t < spec.n; ++t) e += 2.0 * spec.s * levels[t];
                if (e <= cap) break;
                levels[j] = 0;
            }
            if (j == spec.n) break;
        }
    }
    return trace;
}

namespace {

struct AxisEigenData {
    std::vector<double> eigenvalues; // unshifted full-line oscillator FD
    std::vector<double> overlaps;    // <beta v, v> on the grid
};

AxisEigenData fullline_oscillator_fd(double s, const CutoffProfile& cutoff, double phi_cap) {
    const double u_max = std::max(8.0 / std::sqrt(s), cutoff.support_end() + 0.5);
    const double h_target = std::sqrt(0.05) / s;
    const int half = std::max(200, static_cast<int>(std::ceil(u_max / h_target)));
    const int m = 2 * half - 1; // interior nodes of [-U, U], Dirichlet caps
    const double h = u_max / half;

    Eigen::VectorXd diag(m), sub(m - 1);
    for (int i = 0; i < m; ++i) {
        const double x = -u_max + (i + 1) * h;
        diag[i] = 2.0 / (h * h) + s * s * x * x;
    }
    sub.setConstant(-1.0 / (h * h));

    AxisEigenData out;
    out.eigenvalues = tridiagonal_eigenvalues(diag, sub);
    const double scale = diag.maxCoeff();
    for (double lambda : out.eigenvalues) {
        if (lambda > phi_cap) break;
        const Eigen::VectorXd v = tridiagonal_eigenvector(diag, sub, lambda, scale);
        double num = 0.0;
        for (int i = 0; i < m; ++i) {
            const double x = -u_max + (i + 1) * h;
            num += cutoff(x) * v[i] * v[i];
        }
        out.overlaps.push_back(num); // v is l2-normalized; h cancels in the ratio
    }
    return out;
}

} // namespace

double flat_model_trace_numeric(const FlatModelSpec& spec, const CountingFunction& phi,
                                const CutoffProfile& cutoff) {
    validate_flat_spec(spec, 2);
    const double cap = phi_support_bound(phi, 1e-16) + 2.0 * spec.s * spec.n + 1.0;
    const AxisEigenData axis = fullline_oscillator_fd(spec.s, cutoff, cap);
    const int usable = static_cast<int>(axis.overlaps.size());

    double trace = 0.0;
    for (unsigned mask = 0; mask < (1u << spec.n); ++mask) {
        if (static_cast<int>(__builtin_popcount(mask)) != spec.k) continue;
        if (spec.n == 1) {
            const double shift = spec.s * spec.signs[0] * ((mask & 1u) ? 1.0 : -1.0);
            for (int i = 0; i < usable; ++i) {
                const double e = axis.eigenvalues[i] + shift;
                if (e > cap) break;
                trace += phi(e) * axis.overlaps[i];
            }
        } else {
            const double shift0 = spec.s * spec.signs[0] * ((mask & 1u) ? 1.0 : -1.0);
            const double shift1 = spec.s * spec.signs[1] * ((mask & 2u) ? 1.0 : -1.0);
            for (int i = 0; i < usable; ++i) {
                const double e0 = axis.eigenvalues[i] + shift0;
                if (e0 > cap) break;
                for (int j = 0; j < usable; ++j) {
                    const double e = e0 + axis.eigenvalues[j] + shift1;
                    if (e > cap) break;
                    trace += phi(e) * axis.overlaps[i] * axis.overlaps[j];
                }
            }
        }
    }
    return trace;
}

std::string to_string(CylinderClass c) {
    switch (c) {
        case CylinderClass::RPlus: return "r+";
        case CylinderClass::APlus: return "a+";
        case CylinderClass::RMinus: return "r-";
        case CylinderClass::AMinus: return "a-";
    }
    return "?";
}

CylinderClass cylinder_class_from_string(const std::string& s) {
    if (s == "r+") return CylinderClass::RPlus;
    if (s == "a+") return CylinderClass::APlus;
    if (s == "r-") return CylinderClass::RMinus;
    if (s == "a-") return CylinderClass::AMinus;
    throw ParseError("unknown cylinder class '" + s + "'");
}

namespace {

bool class_is_relative(CylinderClass c) {
    return c == CylinderClass::RPlus || c == CylinderClass::RMinus;
}

bool class_is_plus(CylinderClass c) {
    return c == CylinderClass::RPlus || c == CylinderClass::APlus;
}

// A_s^eps shift: (-1)^(eps+1) s on the plus side, (-1)^eps s on the minus side
double cylinder_shift(CylinderClass c, int eps, double s) {
    if (class_is_plus(c)) return ((eps + 1) % 2 == 0 ? 1.0 : -1.0) * s;
    return (eps % 2 == 0 ? 1.0 : -1.0) * s;
}

double cylinder_sum(const CylinderModelSpec& spec, int eps, int parity,
                    const std::vector<double>& base) {
    // parity 0: even oscillator levels (Neumann), 1: odd (Dirichlet)
    if (base.empty()) return 0.0;
    const double cap = [&] {
        const double logf = -std::log(1e-18);
        if (spec.phi.family == CountingFunction::Family::Heat) return logf / spec.phi.param;
        return std::sqrt(logf / spec.phi.param);
    }();
    const double shift = cylinder_shift(spec.cls, eps, spec.s);

    double sum = 0.0;
    for (int p = parity;; p += 2) {
        const double osc = (2.0 * p + 1.0) * spec.s + shift;
        if (osc > cap) break;
        const double ov = halfline_cutoff_overlap(p, spec.s, spec.cutoff);
        for (double lambda : base) {
            const double arg = osc + lambda;
            if (arg > cap) break; // base spectra are sorted ascending
            sum += spec.phi(arg) * ov;
        }
    }
    return sum;
}

int zero_multiplicity(const std::vector<double>& spectrum) {
    int count = 0;
    for (double lambda : spectrum)
        if (std::abs(lambda) <= 1e-9) ++count;
    return count;
}

} // namespace

double cylinder_trace(const CylinderModelSpec& spec) {
    for (const auto* base : {&spec.base_spectrum_k, &spec.base_spectrum_km1})
        for (std::size_t i = 0; i + 1 < base->size(); ++i)
            if ((*base)[i] > (*base)[i + 1] || (*base)[i] < -1e-12)
                throw Error("base spectra must be sorted and non-negative");

    // tangential part (eps = 0) pairs with the degree-k base spectrum; the du
    // part (eps = 1) with degree k-1. Oscillator parity by boundary condition:
    // relative classes put odd levels on the tangential part, absolute even.
    const int tangential_parity = class_is_relative(spec.cls) ? 1 : 0;
    const int normal_parity = 1 - tangential_parity;
    return cylinder_sum(spec, 0, tangential_parity, spec.base_spectrum_k) +
           cylinder_sum(spec, 1, normal_parity, spec.base_spectrum_km1);
}

double cylinder_limit(const CylinderModelSpec& spec) {
    switch (spec.cls) {
        case CylinderClass::APlus: return zero_multiplicity(spec.base_spectrum_k);
        case CylinderClass::RMinus: return zero_multiplicity(spec.base_spectrum_km1);
        case CylinderClass::RPlus:
        case CylinderClass::AMinus: return 0.0;
    }
    return 0.0;
}

CylinderScheduleResult cylinder_schedule(CylinderClass cls,
                                         const std::vector<double>& base_spectrum_k,
                                         const std::vector<double>& base_spectrum_km1, int k,
                                         const std::vector<double>& s_schedule,
                                         const std::vector<double>& m_schedule,
                                         const CutoffProfile& cutoff) {
    if (s_schedule.size() != m_schedule.size() || s_schedule.size() < 2)
        throw ScheduleTooShortError("need matching s and m schedules with at least two points");

    CylinderScheduleResult out;
    for (std::size_t i = 0; i < s_schedule.size(); ++i) {
        CylinderModelSpec spec;
        spec.cls = cls;
        spec.base_spectrum_k = base_spectrum_k;
        spec.base_spectrum_km1 = base_spectrum_km1;
        spec.k = k;
        spec.s = s_schedule[i];
        spec.phi = CountingFunction::gaussian(m_schedule[i]);
        spec.cutoff = cutoff;
        const double trace = cylinder_trace(spec);
        const double limit = cylinder_limit(spec);
        out.rows.push_back({spec.s, m_schedule[i], trace, limit, std::abs(trace - limit)});
        out.limit = limit;
    }
    out.converged = out.rows.back().abs_error <= 0.05;
    return out;
}

std::vector<double> circle_spectrum(double length, int count) {
    if (!(length > 0.0)) throw Error("circle length must be positive");
    std::vector<double> out;
    out.push_back(0.0);
    for (int j = 1; static_cast<int>(out.size()) < count; ++j) {
        const double lambda = std::pow(2.0 * kPi * j / length, 2.0);
        out.push_back(lambda);
        if (static_cast<int>(out.size()) < count) out.push_back(lambda);
    }
    out.resize(count);
    return out;
}

} // namespace morseb
