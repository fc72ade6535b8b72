#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "nesto/building_set.hpp"
#include "nesto/facet_system.hpp"
#include "nesto/geometry.hpp"
#include "nesto/io.hpp"
#include "nesto/shaving.hpp"

using namespace nesto;

TEST_CASE("building set json round trip") {
    BuildingSet b = preset(Preset::associahedron, 3);
    std::string text = building_set_json(b);
    CHECK(parse_building_set_json(text) == b);
    CHECK(building_set_json(parse_building_set_json(text)) == text);  // byte identical

    std::string golden =
        "{\n"
        "  \"ground_size\": 2,\n"
        "  \"sets\": [\n"
        "    [\n"
        "      1\n"
        "    ],\n"
        "    [\n"
        "      2\n"
        "    ],\n"
        "    [\n"
        "      1,\n"
        "      2\n"
        "    ]\n"
        "  ]\n"
        "}\n";
    CHECK(building_set_json(BuildingSet(2, {Subset::parse("{1}"), Subset::parse("{2}"),
                                            Subset::parse("{1,2}")})) == golden);

    // member order in the input does not matter
    std::string scrambled = R"({"sets": [[1,2],[2],[1]], "ground_size": 2})";
    CHECK(building_set_json(parse_building_set_json(scrambled)) == golden);
}

TEST_CASE("raw building sets defer validation") {
    std::string invalid = R"({"ground_size": 3, "sets": [[1],[2],[3],[1,2],[2,3]]})";
    CHECK_THROWS_AS(parse_building_set_json(invalid), consistency_error);
    RawBuildingSet raw = parse_building_set_raw(invalid);
    CHECK(raw.ground == 3);
    CHECK(raw.sets.size() == 5);
    CHECK(!validate(raw.sets, raw.ground).valid);
}

TEST_CASE("building set json errors") {
    CHECK_THROWS_AS(parse_building_set_json("not json"), input_error);
    CHECK_THROWS_AS(parse_building_set_json(R"({"sets": []})"), input_error);
    CHECK_THROWS_AS(parse_building_set_json(R"({"ground_size": 2})"), input_error);
    CHECK_THROWS_AS(parse_building_set_json(R"({"ground_size": "2", "sets": []})"),
                    input_error);
    CHECK_THROWS_AS(parse_building_set_json(R"({"ground_size": 2, "sets": [["a"]]})"),
                    input_error);
    CHECK_THROWS_AS(parse_building_set_json(R"({"ground_size": 2, "sets": [[0]]})"),
                    input_error);
}

TEST_CASE("graph json round trip") {
    Graph g(4, {{1, 2}, {2, 3}, {3, 4}});
    std::string text = graph_json(g);
    Graph back = parse_graph_json(text);
    CHECK(back.node_count() == 4);
    CHECK(back.edges() == g.edges());
    CHECK(graph_json(back) == text);
    CHECK_THROWS_AS(parse_graph_json(R"({"nodes": 3, "edges": [[1]]})"), input_error);
    CHECK_THROWS_AS(parse_graph_json(R"({"nodes": 3})"), input_error);
}

TEST_CASE("facet system json round trip") {
    FacetSystem fs = facet_system_from_building_set(preset(Preset::permutohedron, 2));
    std::string text = facet_system_json(fs);
    FacetSystem back = parse_facet_system_json(text);
    CHECK(back.dim == fs.dim);
    CHECK(back.labels == fs.labels);
    CHECK(back.vertices == fs.vertices);
    CHECK(facet_system_json(back) == text);

    // vertices land sorted even when the input is shuffled
    std::string shuffled = R"({
      "dim": 1,
      "facets": ["a", "b"],
      "vertices": [[1], [0]]
    })";
    FacetSystem seg = parse_facet_system_json(shuffled);
    CHECK(seg.vertices == std::vector<std::uint64_t>{1, 2});

    CHECK_THROWS_AS(parse_facet_system_json(R"({"dim": 1, "facets": ["a"], "vertices": [[5]]})"),
                    input_error);
    // structurally broken systems are rejected after parsing
    CHECK_THROWS_AS(
        parse_facet_system_json(R"({"dim": 1, "facets": ["a", "a"], "vertices": [[0], [1]]})"),
        consistency_error);
}

TEST_CASE("plan json round trip") {
    ShavingPlan plan = plan_flag(preset(Preset::associahedron, 3));
    std::string text = plan_json(plan);
    ShavingPlan back = parse_plan_json(text);
    CHECK(back.b == plan.b);
    CHECK(back.b0 == plan.b0);
    REQUIRE(back.tree);
    REQUIRE(back.tree->nodes.size() == plan.tree->nodes.size());
    for (size_t i = 0; i < back.tree->nodes.size(); ++i) {
        CHECK(back.tree->nodes[i].subset == plan.tree->nodes[i].subset);
        CHECK(back.tree->nodes[i].axis == plan.tree->nodes[i].axis);
    }
    REQUIRE(back.steps.size() == plan.steps.size());
    for (size_t i = 0; i < back.steps.size(); ++i) {
        CHECK(back.steps[i].s == plan.steps[i].s);
        CHECK(back.steps[i].parts == plan.steps[i].parts);
    }
    CHECK(plan_json(back) == text);

    // a parsed plan replays to the same gamma vector
    CHECK(gamma_via_plan(back).gamma == gamma_via_plan(plan).gamma);

    ShavingPlan general = plan_general(preset(Preset::simplex, 2),
                                       preset(Preset::permutohedron, 2));
    std::string gtext = plan_json(general);
    ShavingPlan gback = parse_plan_json(gtext);
    CHECK(!gback.tree);
    CHECK(plan_json(gback) == gtext);

    CHECK_THROWS_AS(parse_plan_json(R"({"B0": [[1]], "tree": null})"), input_error);
    CHECK_THROWS_AS(
        parse_plan_json(R"({"B0": [[1],[2],[1,2]], "tree": null,
                            "steps": [{"S": [1,2], "parts": [[1]]}]})"),
        input_error);  // single part
    CHECK_THROWS_AS(
        parse_plan_json(R"({"B0": [[1],[2],[1,2]], "tree": [1,1], "steps": []})"),
        input_error);  // overlapping tree children
}

TEST_CASE("hrep json round trip") {
    HRepresentation h = standard_realization(preset(Preset::permutohedron, 2));
    std::string text = hrep_json(h);
    HRepresentation back = parse_hrep_json(text);
    CHECK(back.dim == h.dim);
    REQUIRE(back.hyperplane);
    CHECK(back.hyperplane->coeffs == h.hyperplane->coeffs);
    CHECK(back.hyperplane->rhs == h.hyperplane->rhs);
    REQUIRE(back.ineqs.size() == h.ineqs.size());
    for (size_t i = 0; i < back.ineqs.size(); ++i) {
        CHECK(back.ineqs[i].label == h.ineqs[i].label);
        CHECK(back.ineqs[i].normal == h.ineqs[i].normal);
        CHECK(back.ineqs[i].rhs == h.ineqs[i].rhs);
    }
    CHECK(hrep_json(back) == text);
    CHECK(text.find("\"rhs\": \"7/1\"") != std::string::npos);

    HRepresentation sq = cube_realization(cube_subset(preset(Preset::permutohedron, 2)).tree);
    std::string sq_text = hrep_json(sq);
    CHECK(sq_text.find("\"hyperplane\": null") != std::string::npos);
    CHECK(sq_text.find("\"rhs\": \"1/1\"") != std::string::npos);
    CHECK(hrep_json(parse_hrep_json(sq_text)) == sq_text);

    CHECK_THROWS_AS(parse_hrep_json(R"({"dim": 1, "hyperplane": null})"), input_error);
    CHECK_THROWS_AS(
        parse_hrep_json(
            R"({"dim": 1, "hyperplane": null, "ineqs": [{"label": "a", "normal": [1], "rhs": 0.5}]})"),
        input_error);  // rhs must be a p/q string
}

TEST_CASE("incidence json") {
    HRepresentation h = standard_realization(preset(Preset::permutohedron, 2));
    VertexIncidence inc = enumerate_vertices(h);
    std::string text = incidence_json(inc);
    CHECK(text.find("\"coords\"") != std::string::npos);
    CHECK(text.find("\"1/1\"") != std::string::npos);  // rational coordinates
    CHECK(text.find("\"tight\"") != std::string::npos);
    CHECK(text.find("\"dim\": 2") != std::string::npos);
}

TEST_CASE("gamma trace csv") {
    PlanEvaluation ev = gamma_via_plan(plan_flag(preset(Preset::associahedron, 3)));
    CHECK(trace_csv(ev.trace) ==
          "step,face_gamma,cumulative\n"
          "0,\"(1)\",\"(1, 1)\"\n"
          "1,\"(1)\",\"(1, 2)\"\n"
          "2,\"(1)\",\"(1, 3)\"\n");

    GammaTrace empty;
    CHECK(trace_csv(empty) == "step,face_gamma,cumulative\n");
}

TEST_CASE("file helpers") {
    std::string path = "nesto_io_test.tmp";
    write_file(path, "payload\n");
    CHECK(read_file(path) == "payload\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file("definitely/not/there.json"), input_error);
}
