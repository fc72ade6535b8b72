#include "nesto/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nesto {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string dump(const ordered& j) { return j.dump(2) + "\n"; }

ordered subset_array(const Subset& s) {
    ordered arr = ordered::array();
    for (int e : s.elements()) arr.push_back(e);
    return arr;
}

Subset subset_from_array(const json& arr, const std::string& what) {
    if (!arr.is_array()) throw input_error(what + " must be an array of integers");
    std::vector<int> elems;
    for (const json& e : arr) {
        if (!e.is_number_integer()) throw input_error(what + " must contain integers");
        elems.push_back(e.get<int>());
    }
    return Subset::of(elems);
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw input_error(std::string("missing field '") + name + "'");
    return *it;
}

// Nested-array tree encoding: a leaf is its 1-based element, an internal
// node is the pair [left, right].
ordered tree_array(const SplitTree& tree, int node) {
    const SplitNode& sn = tree.nodes[static_cast<size_t>(node)];
    if (sn.leaf()) return ordered(sn.subset.min_element());
    ordered arr = ordered::array();
    arr.push_back(tree_array(tree, sn.left));
    arr.push_back(tree_array(tree, sn.right));
    return arr;
}

int tree_from_json(const json& j, SplitTree& tree) {
    int index = static_cast<int>(tree.nodes.size());
    if (j.is_number_integer()) {
        int e = j.get<int>();
        if (e < 1) throw input_error("tree leaf elements are 1-based");
        tree.nodes.push_back({Subset::singleton(e), -1, -1, -1});
        return index;
    }
    if (!j.is_array() || j.size() != 2)
        throw input_error("tree nodes must be leaves or two-element arrays");
    tree.nodes.push_back({Subset(), -1, -1, -1});
    int left = tree_from_json(j[0], tree);
    int right = tree_from_json(j[1], tree);
    SplitNode& sn = tree.nodes[static_cast<size_t>(index)];
    sn.left = left;
    sn.right = right;
    const Subset& ls = tree.nodes[static_cast<size_t>(left)].subset;
    const Subset& rs = tree.nodes[static_cast<size_t>(right)].subset;
    if (!ls.disjoint(rs)) throw input_error("tree children overlap");
    sn.subset = ls.unite(rs);
    return index;
}

}  // namespace

std::string building_set_json(const BuildingSet& b) {
    ordered j;
    j["ground_size"] = b.ground();
    ordered sets = ordered::array();
    for (const Subset& s : b.elements()) sets.push_back(subset_array(s));
    j["sets"] = sets;
    return dump(j);
}

RawBuildingSet parse_building_set_raw(const std::string& text) {
    json j = parse_json(text);
    const json& gs = field(j, "ground_size");
    if (!gs.is_number_integer()) throw input_error("'ground_size' must be an integer");
    RawBuildingSet raw;
    raw.ground = gs.get<int>();
    for (const json& s : field(j, "sets")) raw.sets.push_back(subset_from_array(s, "set"));
    return raw;
}

BuildingSet parse_building_set_json(const std::string& text) {
    RawBuildingSet raw = parse_building_set_raw(text);
    return BuildingSet(raw.ground, std::move(raw.sets));
}

std::string graph_json(const Graph& g) {
    ordered j;
    j["nodes"] = g.node_count();
    ordered edges = ordered::array();
    for (const auto& [a, b] : g.edges()) {
        ordered e = ordered::array();
        e.push_back(a);
        e.push_back(b);
        edges.push_back(e);
    }
    j["edges"] = edges;
    return dump(j);
}

Graph parse_graph_json(const std::string& text) {
    json j = parse_json(text);
    const json& nodes = field(j, "nodes");
    if (!nodes.is_number_integer()) throw input_error("'nodes' must be an integer");
    std::vector<std::pair<int, int>> edges;
    for (const json& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw input_error("edges must be pairs of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(nodes.get<int>(), std::move(edges));
}

std::string facet_system_json(const FacetSystem& fs) {
    ordered j;
    j["dim"] = fs.dim;
    ordered facets = ordered::array();
    for (const std::string& l : fs.labels) facets.push_back(l);
    j["facets"] = facets;
    ordered vertices = ordered::array();
    for (std::uint64_t v : fs.vertices) {
        ordered arr = ordered::array();
        for (int i = 0; i < fs.facet_count(); ++i)
            if (v & (std::uint64_t{1} << i)) arr.push_back(i);
        vertices.push_back(arr);
    }
    j["vertices"] = vertices;
    return dump(j);
}

FacetSystem parse_facet_system_json(const std::string& text) {
    json j = parse_json(text);
    FacetSystem fs;
    const json& dim = field(j, "dim");
    if (!dim.is_number_integer()) throw input_error("'dim' must be an integer");
    fs.dim = dim.get<int>();
    for (const json& l : field(j, "facets")) {
        if (!l.is_string()) throw input_error("facet labels must be strings");
        fs.labels.push_back(l.get<std::string>());
    }
    for (const json& v : field(j, "vertices")) {
        if (!v.is_array()) throw input_error("vertices must be arrays of facet indices");
        std::uint64_t mask = 0;
        for (const json& i : v) {
            if (!i.is_number_integer()) throw input_error("facet indices must be integers");
            int idx = i.get<int>();
            if (idx < 0 || idx >= fs.facet_count())
                throw input_error("facet index out of range: " + std::to_string(idx));
            mask |= std::uint64_t{1} << idx;
        }
        fs.vertices.push_back(mask);
    }
    std::sort(fs.vertices.begin(), fs.vertices.end(), index_lex_less);
    check_system(fs);
    return fs;
}

std::string plan_json(const ShavingPlan& plan) {
    ordered j;
    ordered b0 = ordered::array();
    for (const Subset& s : plan.b0.elements()) b0.push_back(subset_array(s));
    j["B0"] = b0;
    if (plan.tree)
        j["tree"] = tree_array(*plan.tree, 0);
    else
        j["tree"] = nullptr;
    ordered steps = ordered::array();
    for (const ShavingStep& st : plan.steps) {
        ordered step;
        step["S"] = subset_array(st.s);
        ordered parts = ordered::array();
        for (const Subset& p : st.parts) parts.push_back(subset_array(p));
        step["parts"] = parts;
        steps.push_back(step);
    }
    j["steps"] = steps;
    return dump(j);
}

ShavingPlan parse_plan_json(const std::string& text) {
    json j = parse_json(text);
    std::vector<Subset> b0_sets;
    int ground = 0;
    for (const json& s : field(j, "B0")) {
        b0_sets.push_back(subset_from_array(s, "B0 set"));
        ground = std::max(ground, b0_sets.back().max_element());
    }
    BuildingSet b0(ground, b0_sets);

    std::optional<SplitTree> tree;
    const json& tj = field(j, "tree");
    if (!tj.is_null()) {
        SplitTree t;
        t.ground = ground;
        tree_from_json(tj, t);
        int axis = 0;
        for (SplitNode& node : t.nodes)
            if (!node.leaf()) node.axis = axis++;
        tree = std::move(t);
    }

    std::vector<ShavingStep> steps;
    std::vector<Subset> all = b0_sets;
    int stage = 0;
    for (const json& sj : field(j, "steps")) {
        ShavingStep st;
        st.s = subset_from_array(field(sj, "S"), "step S");
        for (const json& p : field(sj, "parts"))
            st.parts.push_back(subset_from_array(p, "step part"));
        if (st.parts.size() < 2) throw input_error("plan step needs at least two parts");
        st.stage = stage++;
        all.push_back(st.s);
        steps.push_back(std::move(st));
    }
    BuildingSet b(ground, all);
    return ShavingPlan{std::move(b), std::move(b0), std::move(tree), std::move(steps)};
}

std::string hrep_json(const HRepresentation& h) {
    ordered j;
    j["dim"] = h.dim;
    if (h.hyperplane) {
        ordered hp;
        ordered coeffs = ordered::array();
        for (long long c : h.hyperplane->coeffs) coeffs.push_back(c);
        hp["coeffs"] = coeffs;
        hp["rhs"] = format_rational(h.hyperplane->rhs);
        j["hyperplane"] = hp;
    } else {
        j["hyperplane"] = nullptr;
    }
    ordered ineqs = ordered::array();
    for (const Inequality& iq : h.ineqs) {
        ordered one;
        one["label"] = iq.label;
        ordered normal = ordered::array();
        for (long long c : iq.normal) normal.push_back(c);
        one["normal"] = normal;
        one["rhs"] = format_rational(iq.rhs);
        ineqs.push_back(one);
    }
    j["ineqs"] = ineqs;
    return dump(j);
}

HRepresentation parse_hrep_json(const std::string& text) {
    json j = parse_json(text);
    HRepresentation h;
    const json& dim = field(j, "dim");
    if (!dim.is_number_integer()) throw input_error("'dim' must be an integer");
    h.dim = dim.get<int>();
    const json& hp = field(j, "hyperplane");
    if (!hp.is_null()) {
        Hyperplane plane;
        for (const json& c : field(hp, "coeffs")) {
            if (!c.is_number_integer()) throw input_error("hyperplane coeffs must be integers");
            plane.coeffs.push_back(c.get<long long>());
        }
        const json& rhs = field(hp, "rhs");
        if (!rhs.is_string()) throw input_error("rhs must be a 'p/q' string");
        plane.rhs = parse_rational(rhs.get<std::string>());
        h.hyperplane = std::move(plane);
    }
    for (const json& iq : field(j, "ineqs")) {
        Inequality one;
        const json& label = field(iq, "label");
        if (!label.is_string()) throw input_error("inequality labels must be strings");
        one.label = label.get<std::string>();
        for (const json& c : field(iq, "normal")) {
            if (!c.is_number_integer()) throw input_error("normals must be integer vectors");
            one.normal.push_back(c.get<long long>());
        }
        const json& rhs = field(iq, "rhs");
        if (!rhs.is_string()) throw input_error("rhs must be a 'p/q' string");
        one.rhs = parse_rational(rhs.get<std::string>());
        h.ineqs.push_back(std::move(one));
    }
    return h;
}

std::string incidence_json(const VertexIncidence& inc) {
    ordered j;
    j["dim"] = inc.dim;
    ordered labels = ordered::array();
    for (const std::string& l : inc.labels) labels.push_back(l);
    j["labels"] = labels;
    ordered vertices = ordered::array();
    for (const Vertex& v : inc.vertices) {
        ordered one;
        ordered coords = ordered::array();
        for (const Rational& c : v.coords) coords.push_back(format_rational(c));
        one["coords"] = coords;
        ordered tight = ordered::array();
        for (size_t i = 0; i < inc.labels.size(); ++i)
            if (v.tight & (std::uint64_t{1} << i)) tight.push_back(i);
        one["tight"] = tight;
        vertices.push_back(one);
    }
    j["vertices"] = vertices;
    return dump(j);
}

std::string trace_csv(const GammaTrace& trace) {
    std::string out = "step,face_gamma,cumulative\n";
    auto quote = [](const IntVec& v) { return "\"" + vector_str(v) + "\""; };
    for (const GammaTraceRow& row : trace.rows)
        out += std::to_string(row.step) + "," + quote(row.face_gamma) + "," +
               quote(row.cumulative) + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << content;
}

}  // namespace nesto
