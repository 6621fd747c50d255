// Instance-file parsing: schema validation, group resolution, and file
// loading.  Tagged [io].

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "qclass/instance.hpp"

using namespace qclass;

namespace {

Instance parse(const std::string& text) { return parse_instance(text, "test"); }

}  // namespace

TEST_CASE("instance files parse into validated structures", "[io]") {
    SECTION("double poset with an explicit group") {
        Instance inst = parse(R"json({
            "elements": ["a", "b", "c", "d"],
            "rel1": [["a", "b"], ["a", "d"], ["b", "c"], ["d", "c"]],
            "rel2": [["b", "a"], ["b", "c"], ["d", "a"], ["d", "c"]],
            "group": ["(b d)"]
        })json");
        CHECK(inst.kind == InstanceKind::double_poset);
        CHECK(inst.name == "test");
        CHECK(inst.dposet.size() == 4);
        CHECK(inst.group_explicit);
        CHECK(inst.group->order() == 2);
        CHECK(less1_of(inst.dposet, inst.dposet.u.index("a"), inst.dposet.u.index("c")));
        CHECK(less2_of(inst.dposet, inst.dposet.u.index("b"), inst.dposet.u.index("a")));
    }
    SECTION("omitted group defaults to the full automorphism group") {
        Instance inst = parse(R"json({
            "elements": ["a", "b", "c", "d"],
            "rel1": [["a", "b"], ["a", "d"], ["c", "b"], ["c", "d"]],
            "rel2": [["b", "c"], ["d", "a"]]
        })json");
        CHECK_FALSE(inst.group_explicit);
        CHECK(inst.group->order() == 2);  // identity and the double swap
    }
    SECTION("digraph with and without a group") {
        Instance cyc = parse(R"json({
            "vertices": ["a", "b", "c", "d"],
            "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
            "group": ["(a b c d)"]
        })json");
        CHECK(cyc.kind == InstanceKind::digraph);
        CHECK(cyc.graph.u.size() == 4);
        CHECK(cyc.group->order() == 4);

        Instance edge = parse(R"json({"vertices": ["u", "v"], "edges": [["u", "v"]]})json");
        CHECK(edge.kind == InstanceKind::digraph);
        CHECK(edge.group->order() == 1);  // the swap reverses the edge
    }
    SECTION("weights are accepted and recorded") {
        Instance inst = parse(R"json({
            "elements": ["a", "b"],
            "rel1": [["a", "b"]],
            "rel2": [["a", "b"]],
            "weights": {"a": 2, "b": 1}
        })json");
        CHECK(inst.dposet.weighted);
        CHECK(inst.dposet.weights[inst.dposet.u.index("a")] == 2);
        CHECK(inst.dposet.weights[inst.dposet.u.index("b")] == 1);
    }
    SECTION("empty ground set parses") {
        Instance inst = parse(R"json({"elements": [], "rel1": [], "rel2": []})json");
        CHECK(inst.dposet.size() == 0);
        CHECK(inst.group->order() == 1);
    }
}

TEST_CASE("instance schema violations are rejected", "[io]") {
    CHECK_THROWS_AS(parse("not json at all"), invalid_input_error);
    CHECK_THROWS_AS(parse("[1, 2, 3]"), invalid_input_error);
    CHECK_THROWS_AS(parse(R"json({"rel1": [], "rel2": []})json"), invalid_input_error);
    // Both kinds at once.
    CHECK_THROWS_AS(
        parse(R"json({"elements": ["a"], "vertices": ["a"], "rel1": [], "rel2": [], "edges": []})json"),
        invalid_input_error);
    // Unknown key.
    CHECK_THROWS_AS(parse(R"json({"elements": ["a"], "rel1": [], "rel2": [], "extra": 1})json"),
                    invalid_input_error);
    // Missing required relation / edge list.
    CHECK_THROWS_AS(parse(R"json({"elements": ["a"], "rel1": []})json"), invalid_input_error);
    CHECK_THROWS_AS(parse(R"json({"vertices": ["a"]})json"), invalid_input_error);
    // Pairs must be two strings naming known elements.
    CHECK_THROWS_AS(parse(R"json({"elements": ["a", "b"], "rel1": [["a"]], "rel2": []})json"),
                    invalid_input_error);
    CHECK_THROWS_AS(parse(R"json({"elements": ["a", "b"], "rel1": [["a", 3]], "rel2": []})json"),
                    invalid_input_error);
    CHECK_THROWS_AS(parse(R"json({"elements": ["a", "b"], "rel1": [["a", "z"]], "rel2": []})json"),
                    invalid_input_error);
    // Weights must be a string-keyed object of positive integers on elements.
    CHECK_THROWS_AS(
        parse(R"json({"elements": ["a"], "rel1": [], "rel2": [], "weights": [1]})json"),
        invalid_input_error);
    CHECK_THROWS_AS(
        parse(R"json({"elements": ["a"], "rel1": [], "rel2": [], "weights": {"a": "x"}})json"),
        invalid_input_error);
    CHECK_THROWS_AS(
        parse(R"json({"elements": ["a"], "rel1": [], "rel2": [], "weights": {"a": 0}})json"),
        invalid_input_error);
    CHECK_THROWS_AS(
        parse(R"json({"elements": ["a"], "rel1": [], "rel2": [], "weights": {"z": 1}})json"),
        invalid_input_error);
    // Relations must stay antisymmetric after transitive closure.
    CHECK_THROWS_AS(
        parse(R"json({"elements": ["a", "b"], "rel1": [["a", "b"], ["b", "a"]], "rel2": []})json"),
        invalid_input_error);
}

TEST_CASE("instance group resolution rejects bad groups", "[io]") {
    // A generator that is not an automorphism of the structure.
    CHECK_THROWS_AS(parse(R"json({
        "elements": ["a", "b"],
        "rel1": [["a", "b"]],
        "rel2": [["a", "b"]],
        "group": ["(a b)"]
    })json"),
                    invalid_input_error);
    CHECK_THROWS_AS(
        parse(R"json({"vertices": ["u", "v"], "edges": [["u", "v"]], "group": ["(u v)"]})json"),
        invalid_input_error);
    // Cycle notation referring to a label outside the ground set.
    CHECK_THROWS_AS(parse(R"json({"elements": ["a", "b"], "rel1": [], "rel2": [], "group": ["(a z)"]})json"),
                    invalid_input_error);
    // Malformed cycle notation.
    CHECK_THROWS_AS(parse(R"json({"elements": ["a", "b"], "rel1": [], "rel2": [], "group": ["a b)"]})json"),
                    invalid_input_error);
    // Group entries must be strings.
    CHECK_THROWS_AS(parse(R"json({"elements": ["a"], "rel1": [], "rel2": [], "group": [7]})json"),
                    invalid_input_error);
}

TEST_CASE("load_instance reads files and names instances by their stem", "[io]") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qclass-io-test";
    fs::create_directories(dir);
    fs::path file = dir / "little-chain.json";
    {
        std::ofstream out(file);
        out << R"json({"elements": ["a", "b"], "rel1": [["a", "b"]], "rel2": [["a", "b"]]})json";
    }
    Instance inst = load_instance(file.string());
    CHECK(inst.kind == InstanceKind::double_poset);
    CHECK(inst.name == "little-chain");
    CHECK(inst.dposet.size() == 2);
    fs::remove_all(dir);

    CHECK_THROWS_AS(load_instance((dir / "missing.json").string()), invalid_input_error);
}
