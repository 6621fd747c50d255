#ifndef QCLASS_INSTANCE_HPP
#define QCLASS_INSTANCE_HPP

// Instance files: JSON descriptions of double posets and digraphs with an
// optional symmetry group, as consumed by the command-line front end.
//
// Double poset: {"elements": [...], "rel1": [[x,y],...], "rel2": [[x,y],...],
//                "weights": {"x": w, ...}?, "group": ["(a c)(b d)", ...]?}
// Digraph:      {"vertices": [...], "edges": [[u,v],...],
//                "group": [cycle-notation strings]?}
//
// "group" defaults to the full automorphism group when absent; an explicit
// empty list means the trivial group.  Relation lists may give covers or any
// generating set — they are transitively closed at construction.  Unknown
// keys are rejected.  Requires the vendored single-header JSON parser.

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qclass/digraph.hpp"
#include "qclass/dposet.hpp"

namespace qclass {

enum class InstanceKind { double_poset, digraph };

struct Instance {
    InstanceKind kind = InstanceKind::double_poset;
    std::string name;           // file stem, used in reports
    DoublePoset dposet;         // populated when kind == double_poset
    Digraph graph;              // populated when kind == digraph
    PermGroup group;            // explicit group, or the full automorphism group
    bool group_explicit = false;
};

namespace detail {

inline std::vector<std::string> instance_string_array(const nlohmann::json& j, const char* key) {
    if (!j.is_array()) throw invalid_input_error(std::string("\"") + key + "\" must be an array");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string())
            throw invalid_input_error(std::string("\"") + key + "\" entries must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

inline std::vector<LabelPair> instance_pair_array(const nlohmann::json& j, const char* key) {
    if (!j.is_array()) throw invalid_input_error(std::string("\"") + key + "\" must be an array");
    std::vector<LabelPair> out;
    for (const auto& x : j) {
        if (!x.is_array() || x.size() != 2 || !x[0].is_string() || !x[1].is_string())
            throw invalid_input_error(std::string("\"") + key +
                                      "\" entries must be two-element arrays of strings");
        out.push_back({x[0].get<std::string>(), x[1].get<std::string>()});
    }
    return out;
}

inline void instance_check_keys(const nlohmann::json& j,
                                const std::vector<std::string>& allowed) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const std::string& a : allowed)
            if (key == a) ok = true;
        if (!ok) throw invalid_input_error("unknown key \"" + key + "\"");
    }
}

}  // namespace detail

inline Instance parse_instance(const std::string& text, const std::string& name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input_error("instance " + name + ": " + e.what());
    }
    if (!j.is_object()) throw invalid_input_error("instance " + name + ": root must be an object");

    bool has_elements = j.contains("elements");
    bool has_vertices = j.contains("vertices");
    if (has_elements == has_vertices)
        throw invalid_input_error("instance " + name +
                                  ": exactly one of \"elements\" (double poset) and "
                                  "\"vertices\" (digraph) is required");

    Instance inst;
    inst.name = name;

    if (has_elements) {
        detail::instance_check_keys(j, {"elements", "rel1", "rel2", "weights", "group"});
        if (!j.contains("rel1") || !j.contains("rel2"))
            throw invalid_input_error("instance " + name +
                                      ": a double poset needs \"rel1\" and \"rel2\"");
        Universe u(detail::instance_string_array(j["elements"], "elements"));
        std::vector<LabelPair> rel1 = detail::instance_pair_array(j["rel1"], "rel1");
        std::vector<LabelPair> rel2 = detail::instance_pair_array(j["rel2"], "rel2");
        std::optional<std::map<std::string, long>> weights;
        if (j.contains("weights")) {
            if (!j["weights"].is_object())
                throw invalid_input_error("\"weights\" must be an object");
            std::map<std::string, long> w;
            for (const auto& [key, value] : j["weights"].items()) {
                if (!value.is_number_integer())
                    throw invalid_input_error("\"weights\" values must be integers");
                w[key] = value.get<long>();
            }
            weights = std::move(w);
        }
        inst.kind = InstanceKind::double_poset;
        inst.dposet = make_double_poset(u, rel1, rel2, weights);
        if (j.contains("group")) {
            inst.group_explicit = true;
            inst.group = generate_from_cycles(
                inst.dposet.u, detail::instance_string_array(j["group"], "group"));
            require_subgroup_of_automorphisms(inst.dposet, inst.group);
        } else {
            inst.group = automorphisms(inst.dposet);
        }
    } else {
        detail::instance_check_keys(j, {"vertices", "edges", "group"});
        if (!j.contains("edges"))
            throw invalid_input_error("instance " + name + ": a digraph needs \"edges\"");
        Universe u(detail::instance_string_array(j["vertices"], "vertices"));
        std::vector<LabelPair> edges = detail::instance_pair_array(j["edges"], "edges");
        inst.kind = InstanceKind::digraph;
        inst.graph = make_digraph(u, edges);
        if (j.contains("group")) {
            inst.group_explicit = true;
            inst.group = generate_from_cycles(
                inst.graph.u, detail::instance_string_array(j["group"], "group"));
            require_subgroup_of_automorphisms(inst.graph, inst.group);
        } else {
            inst.group = automorphisms(inst.graph);
        }
    }
    return inst;
}

inline Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str(), std::filesystem::path(path).stem().string());
}

}  // namespace qclass

#endif  // QCLASS_INSTANCE_HPP
