#include <doctest.h>

#include <cmath>
#include <morseb/examples.hpp>
#include <morseb/spectral.hpp>
#include <morseb/witten.hpp>

using namespace morseb;

namespace {

std::vector<VertexRecord> valued_vertices(const std::vector<double>& f) {
    std::vector<VertexRecord> out;
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back({static_cast<int>(i), {}, f[i]});
    return out;
}

SimplicialComplex circle_with(int m, double constant_f) {
    std::vector<Simplex> tops;
    for (int i = 0; i < m; ++i) tops.push_back({i, (i + 1) % m});
    return build_complex(std::move(tops), valued_vertices(std::vector<double>(m, constant_f)));
}

double max_abs(const SparseMat& a) {
    double out = 0.0;
    for (int col = 0; col < a.outerSize(); ++col)
        for (SparseMat::InnerIterator it(a, col); it; ++it)
            out = std::max(out, std::abs(it.value()));
    return out;
}

} // namespace

TEST_CASE("simplex potential is the vertex mean") {
    const auto edge = build_complex({{0, 1}}, valued_vertices({0.0, 1.0}));
    const auto rcc = absolute_cochain_complex(edge);
    const auto pot = simplex_potential(edge, rcc);
    CHECK(pot.value[1][0] == doctest::Approx(0.5));

    const auto constant = circle_with(5, 0.7);
    const auto pc = simplex_potential(constant, absolute_cochain_complex(constant));
    for (int k = 0; k <= 1; ++k)
        for (int i = 0; i < pc.value[k].size(); ++i) CHECK(pc.value[k][i] == doctest::Approx(0.7));

    // fan with a radial profile: rim edges average two equal rim values and
    // therefore carry the rim value exactly
    std::vector<Simplex> fan;
    for (int i = 0; i < 6; ++i) fan.push_back({0, 1 + i, 1 + (i + 1) % 6});
    std::vector<double> radial(7, 0.5);
    radial[0] = 0.0;
    const auto disk = build_complex(std::move(fan), valued_vertices(radial));
    const auto drcc = absolute_cochain_complex(disk);
    const auto dpot = simplex_potential(disk, drcc);
    const int rim_edge = disk.index_of({1, 2});
    REQUIRE(rim_edge >= 0);
    CHECK(dpot.value[1][rim_edge] == 0.5);
    const int spoke = disk.index_of({0, 1});
    CHECK(dpot.value[1][spoke] == doctest::Approx(0.25));
}

TEST_CASE("deformed coboundary at s = 0 and for constant potentials") {
    const auto disk = generate_example("disk", 6);
    const auto rcc = absolute_cochain_complex(disk.complex);
    const auto pot = simplex_potential(disk.complex, rcc);

    const auto d0 = deformed_coboundary(rcc, pot, 0.0);
    for (std::size_t k = 0; k < rcc.coboundary.size(); ++k) {
        for (const auto& e : rcc.coboundary[k].entries)
            CHECK(d0[k].coeff(e.row, e.col) == doctest::Approx(static_cast<double>(e.value)));
    }

    const auto flat = circle_with(6, 0.3);
    const auto frcc = absolute_cochain_complex(flat);
    const auto fpot = simplex_potential(flat, frcc);
    const auto ds = deformed_coboundary(frcc, fpot, 7.5);
    for (const auto& e : frcc.coboundary[0].entries)
        CHECK(ds[0].coeff(e.row, e.col) == doctest::Approx(static_cast<double>(e.value)));
}

TEST_CASE("single-edge conjugation matches the hand computation") {
    // d_s = E_{-s} d E_s: entry(edge, v) = sign * exp(s (f(v) - f(edge)))
    const auto edge = build_complex({{0, 1}}, valued_vertices({0.0, 1.0}));
    const auto rcc = absolute_cochain_complex(edge);
    const auto pot = simplex_potential(edge, rcc);
    const auto ds = deformed_coboundary(rcc, pot, 1.0);
    CHECK(ds[0].coeff(0, 0) == doctest::Approx(-std::exp(0.0 - 0.5)));
    CHECK(ds[0].coeff(0, 1) == doctest::Approx(std::exp(1.0 - 0.5)));
}

TEST_CASE("d_s compose d_s vanishes to relative accuracy 1e-12") {
    const auto ball = generate_example("ball3", 3);
    const auto rcc = relative_cochain_complex(ball.complex, ball.decomposition());
    const auto pot = simplex_potential(ball.complex, rcc);
    for (double s : {0.0, 1.0, 5.0, 25.0}) {
        const auto ds = deformed_coboundary(rcc, pot, s);
        for (std::size_t k = 0; k + 1 < ds.size(); ++k) {
            const SparseMat prod = ds[k + 1] * ds[k];
            const double scale = max_abs(ds[k + 1]) * max_abs(ds[k]);
            CHECK(max_abs(prod) <= 1e-12 * std::max(1.0, scale));
        }
    }
}

TEST_CASE("scale overflow guard") {
    const auto edge = build_complex({{0, 1}}, valued_vertices({0.0, 2.0}));
    const auto rcc = absolute_cochain_complex(edge);
    const auto pot = simplex_potential(edge, rcc);
    CHECK_THROWS_AS(deformed_coboundary(rcc, pot, 400.0), ScaleOverflowError);
}

TEST_CASE("the degree-0 Laplacian of a circle is the cycle-graph Laplacian") {
    const auto circle = circle_with(6, 0.0);
    const auto rcc = absolute_cochain_complex(circle);
    const auto ds = deformed_coboundary(rcc, simplex_potential(circle, rcc), 0.0);
    const auto lap = assemble_laplacian(ds, unit_weights(rcc), 0, 0.0);
    const Eigen::MatrixXd dense = lap.dense();
    for (int i = 0; i < 6; ++i) {
        CHECK(dense(i, i) == doctest::Approx(2.0));
        CHECK(dense(i, (i + 1) % 6) == doctest::Approx(-1.0));
        CHECK(dense(i, (i + 5) % 6) == doctest::Approx(-1.0));
    }
}

TEST_CASE("disk r- top-degree kernel is one-dimensional") {
    const auto disk = generate_example("disk", 6);
    const auto rcc = relative_cochain_complex(disk.complex, disk.decomposition());
    const auto ds = deformed_coboundary(rcc, simplex_potential(disk.complex, rcc), 0.0);
    const auto lap = assemble_laplacian(ds, unit_weights(rcc), 2, 0.0);
    const auto report = eigensolve(lap, SolverMode::Dense);
    CHECK(report.kernel_dim == 1);
}

TEST_CASE("kernel dimensions reproduce beta for all bundled examples and scales") {
    for (const auto& name : example_names()) {
        const auto inst = generate_example(name, example_minimum_resolution(name));
        const auto decomposition = inst.decomposition();
        const auto rcc = relative_cochain_complex(inst.complex, decomposition);
        const auto beta_oracle = betti(rcc);
        const auto pot = simplex_potential(inst.complex, rcc);
        const auto weights = unit_weights(rcc);
        for (double s : {0.0, 1.0, 5.0, 25.0}) {
            const auto ds = deformed_coboundary(rcc, pot, s);
            for (int k = 0; k <= inst.complex.n; ++k) {
                const auto report = eigensolve(assemble_laplacian(ds, weights, k, s),
                                               SolverMode::Dense);
                CHECK(report.kernel_dim == beta_oracle[k]);
                CHECK_FALSE(report.gap_ambiguous);
                // semidefiniteness
                if (!report.eigenvalues.empty())
                    CHECK(report.eigenvalues.front() >=
                          -1e-10 * std::max(1.0, report.eigenvalues.back()));
            }
        }
    }
}

TEST_CASE("kernel vectors satisfy both d_s v = 0 and delta_s v = 0") {
    const auto disk = generate_example("disk", 6);
    const auto rcc = relative_cochain_complex(disk.complex, disk.decomposition());
    const auto beta_oracle = betti(rcc);
    const auto pot = simplex_potential(disk.complex, rcc);
    const auto weights = unit_weights(rcc);
    for (double s : {0.0, 5.0}) {
        const auto ds = deformed_coboundary(rcc, pot, s);
        for (int k = 0; k <= 2; ++k) {
            const Eigen::MatrixXd kernel = kernel_basis(ds, weights, k);
            CHECK(kernel.cols() == beta_oracle[k]);
            for (int c = 0; c < kernel.cols(); ++c) {
                const Eigen::VectorXd v = kernel.col(c);
                if (k < 2) CHECK((ds[k] * v).norm() <= 1e-8 * v.norm());
                if (k > 0) CHECK((SparseMat(ds[k - 1].transpose()) * v).norm() <= 1e-8 * v.norm());
            }
        }
    }
}

TEST_CASE("kernel dimensions do not depend on the weight scheme") {
    const auto an = generate_example("annulus", 5);
    const auto rcc = relative_cochain_complex(an.complex, an.decomposition());
    const auto beta_oracle = betti(rcc);
    const auto pot = simplex_potential(an.complex, rcc);
    const auto ds = deformed_coboundary(rcc, pot, 1.0);
    for (const auto& weights : {unit_weights(rcc), top_count_weights(an.complex, rcc)}) {
        for (int k = 0; k <= 2; ++k) {
            const auto report =
                eigensolve(assemble_laplacian(ds, weights, k, 1.0), SolverMode::Dense);
            CHECK(report.kernel_dim == beta_oracle[k]);
        }
    }
}

TEST_CASE("nonpositive weights are rejected") {
    const auto circle = circle_with(4, 0.0);
    const auto rcc = absolute_cochain_complex(circle);
    const auto ds = deformed_coboundary(rcc, simplex_potential(circle, rcc), 0.0);
    auto weights = unit_weights(rcc);
    weights[0][2] = 0.0;
    CHECK_THROWS_AS(assemble_laplacian(ds, weights, 0, 0.0), NonpositiveWeightError);
}
