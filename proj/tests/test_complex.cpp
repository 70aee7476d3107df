#include <doctest.h>

#include <algorithm>
#include <map>
#include <morseb/examples.hpp>
#include <morseb/instance_io.hpp>
#include <morseb/simplicial_complex.hpp>

using namespace morseb;

namespace {

std::vector<VertexRecord> plain_vertices(int count) {
    std::vector<VertexRecord> out;
    for (int i = 0; i < count; ++i) out.push_back({i, {}, {}});
    return out;
}

// fan triangulation: center 0 with rim 1..m
std::vector<Simplex> fan_triangles(int m) {
    std::vector<Simplex> tops;
    for (int i = 0; i < m; ++i) tops.push_back({0, 1 + i, 1 + (i + 1) % m});
    return tops;
}

std::vector<Simplex> octahedron_tops() {
    std::vector<Simplex> tops;
    for (int x : {0, 1})
        for (int y : {2, 3})
            for (int z : {4, 5}) tops.push_back({x, y, z});
    return tops;
}

} // namespace

TEST_CASE("fan triangulation of a disk produces the full face lattice") {
    const auto c = build_complex(fan_triangles(6), plain_vertices(7));
    CHECK(c.n == 2);
    CHECK(c.simplex_count(0) == 7);
    CHECK(c.simplex_count(1) == 12);
    CHECK(c.simplex_count(2) == 6);
}

TEST_CASE("a single 1-simplex yields two boundary points") {
    const auto c = build_complex({{0, 1}}, plain_vertices(2));
    CHECK(c.n == 1);
    CHECK(c.simplex_count(0) == 2);
    CHECK(c.simplex_count(1) == 1);
    const auto boundary = detect_boundary(c);
    REQUIRE(boundary.size() == 2);
    CHECK(boundary[0].simplices.size() == 1);
}

TEST_CASE("three triangles on one edge violate the pseudo-manifold condition") {
    CHECK_THROWS_AS(
        build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}, plain_vertices(5)),
        NonManifoldError);
}

TEST_CASE("vertex bookkeeping errors") {
    CHECK_THROWS_AS(build_complex({{0, 1, 7}}, plain_vertices(3)), DanglingVertexError);
    CHECK_THROWS_AS(build_complex({{0, 1, 2}}, plain_vertices(4)), DanglingVertexError);
    CHECK_THROWS_AS(build_complex({{0, 1, 2}, {2, 0, 1}}, plain_vertices(3)),
                    DuplicateTopSimplexError);
}

TEST_CASE("disk boundary is a single circle with resolution-many edges") {
    for (int m : {3, 6, 9}) {
        const auto inst = generate_example("disk", m);
        const auto boundary = detect_boundary(inst.complex);
        REQUIRE(boundary.size() == 1);
        CHECK(static_cast<int>(boundary[0].simplices.size()) == m);
    }
}

TEST_CASE("annulus has two boundary components, matching a brute-force incidence count") {
    const auto inst = generate_example("annulus", 6);
    const auto& c = inst.complex;

    // independent oracle: count every edge's triangle incidences directly
    std::map<Simplex, int> incidence;
    for (const auto& tri : c.top_simplices) {
        incidence[{tri[0], tri[1]}] += 1;
        incidence[{tri[0], tri[2]}] += 1;
        incidence[{tri[1], tri[2]}] += 1;
    }
    int boundary_edges = 0;
    for (const auto& [edge, count] : incidence)
        if (count == 1) ++boundary_edges;

    const auto boundary = detect_boundary(c);
    REQUIRE(boundary.size() == 2);
    CHECK(static_cast<int>(boundary[0].simplices.size() + boundary[1].simplices.size()) ==
          boundary_edges);
    CHECK(boundary_edges == 12);
}

TEST_CASE("a closed surface has no boundary") {
    const auto sphere = build_complex(octahedron_tops(), plain_vertices(6));
    CHECK(detect_boundary(sphere).empty());
}

TEST_CASE("assign_labels pairs one class per component") {
    const auto inst = generate_example("annulus", 6);
    auto components = detect_boundary(inst.complex);
    CHECK_NOTHROW(assign_labels(components, {BoundaryClass::APlus, BoundaryClass::RMinus}));
    CHECK_THROWS_AS(assign_labels(components, {BoundaryClass::RMinus}), LabelCountMismatchError);
}

TEST_CASE("orientability by sign propagation") {
    CHECK(is_orientable(generate_example("disk", 6).complex));
    CHECK(is_orientable(generate_example("annulus", 5).complex));
    CHECK(is_orientable(generate_example("ball3", 2).complex));
    CHECK(is_orientable(generate_example("solid_torus", 5).complex));
    CHECK_FALSE(is_orientable(generate_example("moebius", 8).complex));
}

TEST_CASE("boundary class parsing round-trips") {
    for (const char* name : {"a+", "a-", "r+", "r-"})
        CHECK(to_string(boundary_class_from_string(name)) == name);
    CHECK_THROWS_AS(boundary_class_from_string("b+"), ParseError);
}

TEST_CASE("rebuilding a complex from its own serialization is idempotent") {
    const auto inst = generate_example("solid_torus", 4);
    const std::string once = instance_to_json(inst);
    const Instance reloaded = instance_from_json(once);
    CHECK(instance_to_json(reloaded) == once);
    CHECK(reloaded.complex.top_simplices == inst.complex.top_simplices);
}

TEST_CASE("generator guards") {
    CHECK_THROWS_AS(generate_example("klein_bottle", 6), UnknownExampleError);
    CHECK_THROWS_AS(generate_example("disk", 2), ResolutionTooSmallError);
    CHECK_THROWS_AS(generate_example("moebius", 3), ResolutionTooSmallError);
}

TEST_CASE("generated examples carry Morse values everywhere") {
    for (const auto& name : example_names()) {
        const auto inst = generate_example(name, example_minimum_resolution(name));
        CHECK(inst.complex.has_morse_values());
        CHECK(inst.labels.size() == detect_boundary(inst.complex).size());
    }
}

TEST_CASE("collar flatness: the boundary layer has a radial partner with equal f") {
    // disk: outer ring duplicates the inner ring values
    const auto disk = generate_example("disk", 6);
    for (int i = 0; i < 6; ++i)
        CHECK(disk.complex.morse_value(1 + i) == disk.complex.morse_value(7 + i));
    // interval: flat pairs at both ends
    const auto iv = generate_example("interval", 8);
    CHECK(iv.complex.morse_value(0) == iv.complex.morse_value(1));
    CHECK(iv.complex.morse_value(7) == iv.complex.morse_value(8));
}
