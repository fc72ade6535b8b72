#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nesto/building_set.hpp"
#include "nesto/facet_system.hpp"
#include "nesto/geometry.hpp"
#include "nesto/io.hpp"
#include "nesto/polynomial.hpp"
#include "nesto/shaving.hpp"

namespace {

using namespace nesto;

int g_exit = 0;

// Inputs are either "preset:NAME" (dimension taken from --dim) or a path to
// building-set / graph JSON.
BuildingSet load_input(const std::string& raw, int dim) {
    if (raw.rfind("preset:", 0) == 0) {
        if (dim < 1) throw input_error("preset inputs need --dim");
        return preset(preset_from_name(raw.substr(7)), dim);
    }
    std::string text = read_file(raw);
    if (text.find("\"edges\"") != std::string::npos && text.find("\"sets\"") == std::string::npos)
        return graphical(parse_graph_json(text));
    return parse_building_set_json(text);
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& spec) {
    std::vector<std::pair<int, int>> edges;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        size_t dash = token.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
            throw input_error("bad edge '" + token + "', expected a-b");
        try {
            edges.emplace_back(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
        } catch (const std::exception&) {
            throw input_error("bad edge '" + token + "', expected a-b");
        }
        token.clear();
    };
    for (char c : spec) {
        if (c == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            token += c;
        }
    }
    flush();
    if (edges.empty()) throw input_error("empty edge list");
    return edges;
}

std::string tree_string(const SplitTree& tree, int node) {
    const SplitNode& sn = tree.nodes[static_cast<size_t>(node)];
    if (sn.leaf()) return std::to_string(sn.subset.min_element());
    return "[" + tree_string(tree, sn.left) + "," + tree_string(tree, sn.right) + "]";
}

std::string join_subsets(const std::vector<Subset>& sets, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < sets.size(); ++i) {
        if (i) out += sep;
        out += sets[i].str();
    }
    return out;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

struct CheckLine {
    std::string name;
    int status = 0;  // 0 pass, 1 fail, 2 skip
    std::string detail;
};

void print_checks(const std::vector<CheckLine>& lines) {
    for (const CheckLine& c : lines) {
        const char* tag = c.status == 0 ? "PASS" : c.status == 1 ? "FAIL" : "SKIP";
        std::cout << tag << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
        if (c.status == 1) g_exit = 1;
    }
}

void cmd_validate(const std::string& in, int dim) {
    if (in.rfind("preset:", 0) == 0) {
        BuildingSet b = load_input(in, dim);
        std::cout << "valid building set, " << b.size() << " sets, ground " << b.ground()
                  << (b.connected() ? ", connected" : ", disconnected") << "\n";
        return;
    }
    std::string text = read_file(in);
    if (text.find("\"edges\"") != std::string::npos && text.find("\"sets\"") == std::string::npos) {
        BuildingSet b = graphical(parse_graph_json(text));
        std::cout << "valid building set (graphical), " << b.size() << " sets, ground "
                  << b.ground() << (b.connected() ? ", connected" : ", disconnected") << "\n";
        return;
    }
    RawBuildingSet raw = parse_building_set_raw(text);
    ValidationReport report = validate(raw.sets, raw.ground);
    if (report.valid) {
        std::cout << "valid building set, " << raw.sets.size() << " sets, ground " << raw.ground
                  << (report.connected ? ", connected" : ", disconnected") << "\n";
    } else {
        for (const Violation& v : report.violations) std::cout << v.describe() << "\n";
        std::cout << "invalid building set (" << report.violations.size() << " violations)\n";
        g_exit = 1;
    }
}

void cmd_info(const std::string& in, int dim, bool want_f, bool want_h, bool want_gamma,
              bool want_h2) {
    BuildingSet b = load_input(in, dim);
    if (!b.connected()) {
        std::cout << "disconnected building set (ground " << b.ground()
                  << "); no single polytope. Apply connectify to substitute the components "
                     "into one ground set, then rerun.\n";
        return;
    }
    bool all = !want_f && !want_h && !want_gamma && !want_h2;
    PolynomialBundle bundle = polynomial_bundle(f_vector(b));
    if (all || want_f) std::cout << "f = " << vector_str(bundle.f) << "\n";
    if (all || want_h) std::cout << "h = " << vector_str(bundle.h) << "\n";
    if (all || want_gamma) std::cout << "gamma = " << vector_str(bundle.gamma) << "\n";
    if (want_h2)
        for (size_t j = 0; j < bundle.H2.size(); ++j)
            std::cout << "H2[" << j << "] = " << vector_str(bundle.H2[j]) << "\n";
}

void cmd_flag(const std::string& in, int dim) {
    BuildingSet b = load_input(in, dim);
    if (!b.connected()) {
        ConnectifyResult c = connectify(b);
        std::cout << "note: disconnected input, checking its connectification (ground "
                  << c.connected.ground() << ")\n";
        std::cout << "flag = " << (is_flag(c.connected) ? "yes" : "no") << "\n";
        return;
    }
    std::cout << "flag = " << (is_flag(b) ? "yes" : "no") << "\n";
}

void cmd_plan(const std::string& in, int dim, const std::string& json_out,
              const std::string& trace_out) {
    BuildingSet b = load_input(in, dim);
    ShavingPlan plan = plan_flag(b);
    std::cout << "B0 = " << join_subsets(plan.b0.elements(), " ") << "\n";
    std::cout << "tree = " << tree_string(*plan.tree, 0) << "\n";
    std::cout << "steps = " << plan.steps.size() << "\n";
    for (size_t i = 0; i < plan.steps.size(); ++i) {
        const ShavingStep& st = plan.steps[i];
        std::cout << "  " << (i + 1) << ": " << st.s.str() << " = "
                  << join_subsets(st.parts, " | ") << "\n";
    }
    if (!json_out.empty()) write_file(json_out, plan_json(plan));
    if (!trace_out.empty()) {
        PlanEvaluation eval = gamma_via_plan(plan);
        write_file(trace_out, trace_csv(eval.trace));
        std::cout << "gamma = " << vector_str(eval.gamma) << "\n";
    }
}

void cmd_realize(const std::string& in, int dim, const std::string& method,
                 const std::string& json_out, const std::string& off_out) {
    BuildingSet b = load_input(in, dim);
    HRepresentation hrep;
    if (method == "standard") {
        hrep = standard_realization(b);
    } else if (method == "cubical") {
        CubicalResult result = cubical_realization(plan_flag(b));
        hrep = std::move(result.hrep);
        std::cout << "epsilons = [";
        for (size_t i = 0; i < result.epsilons.size(); ++i)
            std::cout << (i ? ", " : "") << format_rational(result.epsilons[i]);
        std::cout << "]\n";
    } else {
        throw input_error("unknown method '" + method + "', expected cubical or standard");
    }
    VertexIncidence inc = enumerate_vertices(hrep);
    std::cout << "method = " << method << "\n";
    std::cout << "inequalities = " << hrep.ineqs.size() << "\n";
    std::cout << "vertices = " << inc.vertices.size() << "\n";
    if (!json_out.empty()) write_file(json_out, hrep_json(hrep));
    if (!off_out.empty()) write_file(off_out, off_export(hrep, inc));
}

void cmd_verify(const std::vector<std::string>& ins, int dim, bool gal, bool bounds,
                bool monotone, bool delzant, bool oracle) {
    bool all = !gal && !bounds && !monotone && !delzant && !oracle;
    std::vector<BuildingSet> inputs;
    for (const std::string& in : ins) inputs.push_back(load_input(in, dim));
    std::vector<CheckLine> lines;

    if (all || gal || bounds || monotone) {
        ClaimsReport claims = verify_gamma_claims(inputs);
        for (const ClaimCheck& c : claims.checks) {
            bool is_gal = c.description.find("nonnegative") != std::string::npos;
            bool is_bound = c.description.find("permutohedron") != std::string::npos;
            bool is_mono = c.description.find("monotone") != std::string::npos;
            if (!all && !((gal && is_gal) || (bounds && is_bound) || (monotone && is_mono)))
                continue;
            lines.push_back({c.description, c.skipped ? 2 : c.passed ? 0 : 1, c.detail});
        }
    }

    for (size_t i = 0; i < inputs.size(); ++i) {
        const BuildingSet& b = inputs[i];
        std::string name = "B[" + std::to_string(i) + "]";
        if (!b.connected()) {
            if (all || delzant || oracle)
                lines.push_back({name + " realization checks", 2, "skipped: not connected"});
            continue;
        }
        bool flag = is_flag(b);
        if (all || delzant) {
            HRepresentation hrep = standard_realization(b);
            VertexIncidence inc = enumerate_vertices(hrep);
            GeometryReport rep = delzant_check(hrep, inc);
            lines.push_back({name + " delzant (standard realization)", rep.passed ? 0 : 1,
                             rep.passed ? "" : rep.violations.front()});
            if (flag) {
                CubicalResult cub = cubical_realization(plan_flag(b));
                VertexIncidence cinc = enumerate_vertices(cub.hrep);
                GeometryReport crep = delzant_check(cub.hrep, cinc);
                lines.push_back({name + " delzant (cubical realization)", crep.passed ? 0 : 1,
                                 crep.passed ? "" : crep.violations.front()});
                GeometryReport nrep = normals_check(cub.hrep, b);
                lines.push_back({name + " cubical normals in {0,+-1}", nrep.passed ? 0 : 1,
                                 nrep.passed ? "" : nrep.violations.front()});
            } else {
                lines.push_back({name + " delzant (cubical realization)", 2, "skipped: not flag"});
            }
        }
        if (all || oracle) {
            FacetSystem fs = facet_system_from_building_set(b);
            PolynomialBundle direct = polynomial_bundle(f_vector(fs));
            if (flag) {
                PlanEvaluation eval = gamma_via_plan(plan_flag(b));
                bool same = eval.gamma == direct.gamma;
                lines.push_back({name + " gamma oracle (plan vs direct)", same ? 0 : 1,
                                 vector_str(eval.gamma) + " vs " + vector_str(direct.gamma)});
            } else {
                lines.push_back({name + " gamma oracle (plan vs direct)", 2, "skipped: not flag"});
            }
            VertexIncidence inc = enumerate_vertices(standard_realization(b));
            bool equiv = combinatorial_equivalence(inc, fs);
            bool fmatch = f_vector(b) == direct.f;
            lines.push_back({name + " lattice oracle (geometry vs combinatorics)",
                             equiv && fmatch ? 0 : 1,
                             std::to_string(inc.vertices.size()) + " vertices"});
        }
    }

    print_checks(lines);
    std::cout << (g_exit == 0 ? "all checks passed" : "some checks FAILED") << "\n";
}

void cmd_preset(const std::string& name, int dim, const std::string& out) {
    BuildingSet b = preset(preset_from_name(name), dim);
    emit(building_set_json(b), out);
}

void cmd_graph(const std::string& edges_spec, int nodes, const std::string& out) {
    std::vector<std::pair<int, int>> edges = parse_edge_list(edges_spec);
    int max_node = 0;
    for (const auto& [a, b] : edges) max_node = std::max({max_node, a, b});
    Graph g(nodes > 0 ? nodes : max_node, edges);
    emit(building_set_json(graphical(g)), out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nestohedra: building sets, face vectors, shaving plans, exact realizations"};
    app.require_subcommand(1);
    // --h is a spec flag of `info`, so help stays long-form only.
    app.set_help_flag("--help", "print help");

    std::string in, method = "cubical", json_out, off_out, trace_out, name, edges_spec, out;
    std::vector<std::string> ins;
    int dim = 0, nodes = 0;
    bool want_f = false, want_h = false, want_gamma = false, want_h2 = false;
    bool gal = false, bounds = false, monotone = false, delzant = false, oracle = false;

    CLI::App* validate_cmd = app.add_subcommand("validate", "check building-set axioms");
    validate_cmd->add_option("input", in, "JSON file or preset:NAME")->required();
    validate_cmd->add_option("--dim", dim, "dimension for preset inputs");
    validate_cmd->callback([&]() { cmd_validate(in, dim); });

    CLI::App* info_cmd = app.add_subcommand("info", "face numbers of the nestohedron");
    info_cmd->set_help_flag("--help", "print help");
    info_cmd->add_option("input", in, "JSON file or preset:NAME")->required();
    info_cmd->add_option("--dim", dim, "dimension for preset inputs");
    info_cmd->add_flag("--f", want_f, "print the f-vector");
    info_cmd->add_flag("--h", want_h, "print the h-vector");
    info_cmd->add_flag("--gamma", want_gamma, "print the gamma-vector");
    info_cmd->add_flag("--H2", want_h2, "print the bigraded h-table");
    info_cmd->callback([&]() { cmd_info(in, dim, want_f, want_h, want_gamma, want_h2); });

    CLI::App* flag_cmd = app.add_subcommand("flag", "test flagness");
    flag_cmd->add_option("input", in, "JSON file or preset:NAME")->required();
    flag_cmd->add_option("--dim", dim, "dimension for preset inputs");
    flag_cmd->callback([&]() { cmd_flag(in, dim); });

    CLI::App* plan_cmd = app.add_subcommand("plan", "shaving plan from the inner cube");
    plan_cmd->add_option("input", in, "JSON file or preset:NAME")->required();
    plan_cmd->add_option("--dim", dim, "dimension for preset inputs");
    plan_cmd->add_option("--json", json_out, "write the plan as JSON");
    plan_cmd->add_option("--trace", trace_out, "write the gamma trace as CSV");
    plan_cmd->callback([&]() { cmd_plan(in, dim, json_out, trace_out); });

    CLI::App* realize_cmd = app.add_subcommand("realize", "exact H-representation");
    realize_cmd->add_option("input", in, "JSON file or preset:NAME")->required();
    realize_cmd->add_option("--dim", dim, "dimension for preset inputs");
    realize_cmd->add_option("--method", method, "cubical or standard")->required();
    realize_cmd->add_option("--json", json_out, "write the H-representation as JSON");
    realize_cmd->add_option("--off", off_out, "write an OFF file (3-dimensional only)");
    realize_cmd->callback([&]() { cmd_realize(in, dim, method, json_out, off_out); });

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the gamma and geometry checks");
    verify_cmd->add_option("inputs", ins, "JSON files or preset:NAME")->required();
    verify_cmd->add_option("--dim", dim, "dimension for preset inputs");
    verify_cmd->add_flag("--gal", gal, "gamma nonnegativity");
    verify_cmd->add_flag("--bounds", bounds, "permutohedron upper bound");
    verify_cmd->add_flag("--monotone", monotone, "nested-pair monotonicity");
    verify_cmd->add_flag("--delzant", delzant, "vertex determinant checks");
    verify_cmd->add_flag("--oracle", oracle, "cross-check gamma and lattice paths");
    verify_cmd->callback([&]() { cmd_verify(ins, dim, gal, bounds, monotone, delzant, oracle); });

    CLI::App* preset_cmd = app.add_subcommand("preset", "emit a preset building set");
    preset_cmd->add_option("name", name, "simplex, cube, permutohedron, or associahedron")
        ->required();
    preset_cmd->add_option("--dim", dim, "polytope dimension")->required();
    preset_cmd->add_option("--out", out, "output file (default stdout)");
    preset_cmd->callback([&]() { cmd_preset(name, dim, out); });

    CLI::App* graph_cmd = app.add_subcommand("graph", "graphical building set from edges");
    graph_cmd->add_option("--edges", edges_spec, "comma list like 1-2,2-3")->required();
    graph_cmd->add_option("--nodes", nodes, "node count (default: max endpoint)");
    graph_cmd->add_option("--out", out, "output file (default stdout)");
    graph_cmd->callback([&]() { cmd_graph(edges_spec, nodes, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_flag_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
