#include <doctest.h>

#include <morseb/examples.hpp>
#include <morseb/instance_io.hpp>

using namespace morseb;

TEST_CASE("instance files round-trip") {
    for (const auto& name : example_names()) {
        const auto inst = generate_example(name, example_minimum_resolution(name));
        const auto reloaded = instance_from_json(instance_to_json(inst));
        CHECK(reloaded.name == inst.name);
        CHECK(reloaded.complex.n == inst.complex.n);
        CHECK(reloaded.complex.top_simplices == inst.complex.top_simplices);
        CHECK(reloaded.labels == inst.labels);
        for (const auto& v : inst.complex.vertices)
            CHECK(reloaded.complex.morse_value(v.id) == *v.f);
    }
}

TEST_CASE("boundary_morse and critical_points blocks survive the round trip") {
    auto inst = generate_example("disk", 6);
    inst.critical_points = {{0, 0}};
    BoundaryMorseData data;
    data.mode = BoundaryMorseMode::General;
    data.inventory = {{0, 1, 0, 1}, {0, 2, 1, 1}};
    inst.boundary_morse = data;

    const auto reloaded = instance_from_json(instance_to_json(inst));
    REQUIRE(reloaded.boundary_morse.has_value());
    CHECK(reloaded.boundary_morse->mode == BoundaryMorseMode::General);
    REQUIRE(reloaded.boundary_morse->inventory.size() == 2);
    CHECK(reloaded.boundary_morse->inventory[1].k == 2);
    CHECK(reloaded.boundary_morse->inventory[1].k_prime == 1);
    CHECK(reloaded.critical_points == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("malformed instances raise ParseError") {
    CHECK_THROWS_AS(instance_from_json("not json"), ParseError);
    CHECK_THROWS_AS(instance_from_json("{}"), ParseError);
    CHECK_THROWS_AS(instance_from_json(R"({"dimension": 1,
        "vertices": [{"id": 0}, {"id": 1}],
        "top_simplices": [[0, 1]],
        "boundary_labels": [{"component": 0, "class": "a+"}]})"),
                    ParseError); // component 1 unlabeled
    CHECK_THROWS_AS(instance_from_json(R"({"dimension": 2,
        "vertices": [{"id": 0}, {"id": 1}],
        "top_simplices": [[0, 1]],
        "boundary_labels": []})"),
                    ParseError); // dimension mismatch
    CHECK_THROWS_AS(instance_from_json(R"({"dimension": 1,
        "vertices": [{"id": 0}, {"id": 1}],
        "top_simplices": [[0, 1]],
        "boundary_labels": [{"component": 0, "class": "x+"},
                            {"component": 1, "class": "a-"}]})"),
                    ParseError); // unknown class
}

TEST_CASE("negation flips Morse values and label signs") {
    const auto st = generate_example("solid_torus", 4);
    const auto neg = negate_morse_function(st);
    CHECK(neg.labels[0] == BoundaryClass::AMinus);
    CHECK(neg.complex.morse_value(0) == -st.complex.morse_value(0));
    const auto back = negate_morse_function(neg);
    CHECK(back.labels[0] == BoundaryClass::APlus);
}
