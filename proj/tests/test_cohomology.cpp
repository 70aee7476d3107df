#include <doctest.h>

#include <morseb/cohomology.hpp>
#include <morseb/examples.hpp>

using namespace morseb;

namespace {

std::vector<VertexRecord> plain_vertices(int count) {
    std::vector<VertexRecord> out;
    for (int i = 0; i < count; ++i) out.push_back({i, {}, {}});
    return out;
}

SimplicialComplex octahedron() {
    std::vector<Simplex> tops;
    for (int x : {0, 1})
        for (int y : {2, 3})
            for (int z : {4, 5}) tops.push_back({x, y, z});
    return build_complex(std::move(tops), plain_vertices(6));
}

SimplicialComplex circle(int m) {
    std::vector<Simplex> tops;
    for (int i = 0; i < m; ++i) tops.push_back({i, (i + 1) % m});
    return build_complex(std::move(tops), plain_vertices(m));
}

BoundaryDecomposition labeled(const SimplicialComplex& c, std::vector<BoundaryClass> classes) {
    return assign_labels(detect_boundary(c), classes);
}

} // namespace

TEST_CASE("disk Betti numbers, absolute and relative") {
    const auto disk = generate_example("disk", 6);
    SUBCASE("no relative part: contractible") {
        const auto b = betti(relative_cochain_complex(disk.complex, labeled(disk.complex, {BoundaryClass::AMinus})));
        CHECK(b == std::vector<int>{1, 0, 0});
    }
    SUBCASE("boundary circle relative: top class only") {
        const auto b = betti(relative_cochain_complex(disk.complex, labeled(disk.complex, {BoundaryClass::RMinus})));
        CHECK(b == std::vector<int>{0, 0, 1});
    }
}

TEST_CASE("relative deletion removes exactly the rim simplices") {
    const auto disk = generate_example("disk", 6);
    const auto rcc =
        relative_cochain_complex(disk.complex, labeled(disk.complex, {BoundaryClass::RMinus}));
    CHECK(rcc.deleted[0].size() == 6); // rim vertices
    CHECK(rcc.deleted[1].size() == 6); // rim edges
    CHECK(rcc.deleted[2].size() == 0);
}

TEST_CASE("interval with both endpoints relative") {
    const auto iv = generate_example("interval", 8);
    const auto rcc = relative_cochain_complex(
        iv.complex, labeled(iv.complex, {BoundaryClass::RPlus, BoundaryClass::RMinus}));
    CHECK(rcc.basis_count(0) == 7); // two endpoint vertices removed
    CHECK(rcc.basis_count(1) == 8);
    CHECK(betti(rcc) == std::vector<int>{0, 1});
}

TEST_CASE("annulus with one relative circle has vanishing relative cohomology") {
    const auto an = generate_example("annulus", 6);
    const auto b = betti(relative_cochain_complex(
        an.complex, labeled(an.complex, {BoundaryClass::APlus, BoundaryClass::RMinus})));
    CHECK(b == std::vector<int>{0, 0, 0});
}

TEST_CASE("boundary pieces: gamma and eta oracles") {
    SUBCASE("N_r- a circle") {
        const auto disk = generate_example("disk", 6);
        const auto bb = boundary_betti(disk.complex, labeled(disk.complex, {BoundaryClass::RMinus}));
        CHECK(bb.gamma == std::vector<int>{1, 1});
        CHECK(bb.eta == std::vector<int>{0, 0});
    }
    SUBCASE("N_a+ empty") {
        const auto disk = generate_example("disk", 6);
        const auto bb = boundary_betti(disk.complex, labeled(disk.complex, {BoundaryClass::AMinus}));
        CHECK(bb.eta == std::vector<int>{0, 0});
    }
    SUBCASE("N_a+ a 2-sphere") {
        const auto ball = generate_example("ball3", 2);
        const auto bb = boundary_betti(ball.complex, labeled(ball.complex, {BoundaryClass::APlus}));
        CHECK(bb.eta == std::vector<int>{1, 0, 1});
        CHECK(bb.gamma == std::vector<int>{0, 0, 0});
    }
}

TEST_CASE("Euler characteristics by both modes") {
    CHECK(euler(absolute_cochain_complex(circle(7)), EulerMode::BettiSum) == 0);
    CHECK(euler(absolute_cochain_complex(circle(7)), EulerMode::SimplexCount) == 0);

    const auto sphere = octahedron();
    CHECK(sphere.euler_characteristic_by_count() == 6 - 12 + 8);
    CHECK(euler(absolute_cochain_complex(sphere), EulerMode::BettiSum) == 2);
    CHECK(betti(absolute_cochain_complex(sphere)) == std::vector<int>{1, 0, 1});

    const auto disk = generate_example("disk", 6);
    const auto rel = relative_cochain_complex(
        disk.complex, assign_labels(detect_boundary(disk.complex), {BoundaryClass::RMinus}));
    CHECK(euler(rel, EulerMode::BettiSum) == 1);
    CHECK(euler(rel, EulerMode::SimplexCount) == 1);
}

TEST_CASE("both Euler modes agree on every bundled instance and label choice") {
    for (const auto& name : example_names()) {
        const auto inst = generate_example(name, example_minimum_resolution(name) + 1);
        for (BoundaryClass cls : {BoundaryClass::APlus, BoundaryClass::RMinus}) {
            std::vector<BoundaryClass> labels(inst.labels.size(), cls);
            const auto rcc = relative_cochain_complex(inst.complex,
                                                      assign_labels(detect_boundary(inst.complex), labels));
            CHECK(euler(rcc, EulerMode::BettiSum) == euler(rcc, EulerMode::SimplexCount));
        }
    }
}

TEST_CASE("d compose d vanishes exactly on every bundled complex") {
    for (const auto& name : example_names()) {
        const auto inst = generate_example(name, example_minimum_resolution(name));
        std::vector<BoundaryClass> relative_labels(inst.labels.size(), BoundaryClass::RMinus);
        for (const auto& labels : {inst.labels, relative_labels}) {
            const auto rcc = relative_cochain_complex(
                inst.complex, assign_labels(detect_boundary(inst.complex), labels));
            for (std::size_t k = 0; k + 1 < rcc.coboundary.size(); ++k)
                CHECK(is_zero(multiply(rcc.coboundary[k + 1], rcc.coboundary[k])));
        }
    }
}

TEST_CASE("label-swap duality on the annulus, all four partitions") {
    const auto an = generate_example("annulus", 6);
    const int n = an.complex.n;
    using BC = BoundaryClass;
    const std::vector<std::vector<BC>> partitions = {
        {BC::APlus, BC::AMinus},  // A empty
        {BC::RPlus, BC::AMinus},  // A = inner
        {BC::APlus, BC::RMinus},  // A = outer
        {BC::RPlus, BC::RMinus},  // A = all
    };
    for (const auto& labels : partitions) {
        auto flipped = labels;
        for (auto& c : flipped)
            c = is_relative(c) ? (is_plus(c) ? BC::APlus : BC::AMinus)
                               : (is_plus(c) ? BC::RPlus : BC::RMinus);
        const auto ba = betti(relative_cochain_complex(
            an.complex, assign_labels(detect_boundary(an.complex), labels)));
        const auto bb = betti(relative_cochain_complex(
            an.complex, assign_labels(detect_boundary(an.complex), flipped)));
        for (int k = 0; k <= n; ++k) CHECK(ba[k] == bb[n - k]);
    }
}

TEST_CASE("face_set_betti classifies small figures") {
    CHECK(face_set_betti({{3}}) == std::vector<int>{1});
    CHECK(face_set_betti({{0, 1}, {1, 2}}) == std::vector<int>{1, 0});        // arc
    CHECK(face_set_betti({{0, 1}, {1, 2}, {0, 2}}) == std::vector<int>{1, 1}); // circle
    CHECK(face_set_betti({{0}, {1}, {2}}) == std::vector<int>{3});             // three points
}

TEST_CASE("strict link check accepts the bundled meshes and rejects a pinched one") {
    for (const auto& name : example_names())
        CHECK_NOTHROW(check_links_strict(generate_example(name, example_minimum_resolution(name)).complex));

    // two triangles meeting only at a vertex: a pinched (non-manifold) point
    const auto pinched = build_complex({{0, 1, 2}, {0, 3, 4}}, plain_vertices(5));
    CHECK_THROWS_AS(check_links_strict(pinched), NonManifoldError);
}

TEST_CASE("simplex-count alternating sum matches the cohomological Euler characteristic") {
    for (const auto& name : example_names()) {
        const auto inst = generate_example(name, example_minimum_resolution(name));
        const auto rcc = absolute_cochain_complex(inst.complex);
        CHECK(inst.complex.euler_characteristic_by_count() == euler(betti(rcc)));
    }
}
