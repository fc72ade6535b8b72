#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "nesto/building_set.hpp"
#include "nesto/facet_system.hpp"
#include "nesto/geometry.hpp"
#include "nesto/io.hpp"
#include "nesto/polynomial.hpp"
#include "nesto/shaving.hpp"

namespace py = pybind11;
using namespace nesto;

namespace {

Subset subset_of(const std::vector<int>& elements) { return Subset::of(elements); }

std::vector<std::vector<int>> as_lists(const std::vector<Subset>& sets) {
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const Subset& s : sets) out.push_back(s.elements());
    return out;
}

py::dict claims_dict(const ClaimsReport& report) {
    py::list checks;
    for (const ClaimCheck& c : report.checks) {
        py::dict d;
        d["description"] = c.description;
        d["passed"] = c.passed;
        d["skipped"] = c.skipped;
        d["detail"] = c.detail;
        checks.append(d);
    }
    py::dict out;
    out["checks"] = checks;
    out["all_passed"] = report.all_passed;
    return out;
}

py::dict report_dict(const GeometryReport& report) {
    py::dict out;
    out["passed"] = report.passed;
    out["violations"] = report.violations;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact nestohedron combinatorics and geometry";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<not_flag_error>(m, "NotFlagError", PyExc_RuntimeError);
    py::register_exception<not_simple_error>(m, "NotSimpleError", PyExc_RuntimeError);
    py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<consistency_error>(m, "ConsistencyError", PyExc_RuntimeError);

    py::class_<BuildingSet>(m, "BuildingSet")
        .def_static(
            "from_json", [](const std::string& text) { return parse_building_set_json(text); },
            py::arg("text"))
        .def_static(
            "from_sets",
            [](int ground, const std::vector<std::vector<int>>& sets) {
                std::vector<Subset> subsets;
                subsets.reserve(sets.size());
                for (const auto& s : sets) subsets.push_back(subset_of(s));
                return BuildingSet(ground, std::move(subsets));
            },
            py::arg("ground"), py::arg("sets"))
        .def_static(
            "from_graph",
            [](int nodes, const std::vector<std::pair<int, int>>& edges) {
                return graphical(Graph(nodes, edges));
            },
            py::arg("nodes"), py::arg("edges"))
        .def_static(
            "preset",
            [](const std::string& name, int dim) { return preset(preset_from_name(name), dim); },
            py::arg("name"), py::arg("dim"))
        .def_property_readonly("ground", &BuildingSet::ground)
        .def_property_readonly("connected", &BuildingSet::connected)
        .def("__len__", &BuildingSet::size)
        .def("__eq__", [](const BuildingSet& a, const BuildingSet& b) { return a == b; })
        .def("__repr__",
             [](const BuildingSet& b) {
                 return "BuildingSet(ground=" + std::to_string(b.ground()) + ", size=" +
                        std::to_string(b.size()) + ")";
             })
        .def("sets", [](const BuildingSet& b) { return as_lists(b.elements()); })
        .def("contains",
             [](const BuildingSet& b, const std::vector<int>& s) {
                 return b.contains(subset_of(s));
             },
             py::arg("subset"))
        .def("to_json", [](const BuildingSet& b) { return building_set_json(b); })
        .def("is_flag", [](const BuildingSet& b) { return is_flag(b); })
        .def("restriction",
             [](const BuildingSet& b, const std::vector<int>& s) {
                 return restriction(b, subset_of(s));
             },
             py::arg("subset"))
        .def("product", [](const BuildingSet& a, const BuildingSet& b) { return product(a, b); },
             py::arg("other"))
        .def("substitution",
             [](const BuildingSet& b, const std::vector<BuildingSet>& blocks) {
                 return substitution(b, blocks);
             },
             py::arg("blocks"))
        .def("connectify",
             [](const BuildingSet& b) {
                 ConnectifyResult r = connectify(b);
                 py::dict labels;
                 for (const auto& [from, to] : r.label_map) labels[py::str(from.str())] = to.str();
                 return py::make_tuple(r.connected, labels);
             })
        .def("two_split",
             [](const BuildingSet& b, const std::vector<int>& s)
                 -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
                 auto split = two_split(b, subset_of(s));
                 if (!split) return std::nullopt;
                 return std::make_pair(split->first.elements(), split->second.elements());
             },
             py::arg("subset"))
        .def("f_vector", [](const BuildingSet& b) { return f_vector(b); })
        .def("h_vector", [](const BuildingSet& b) { return f_to_h(f_vector(b)); })
        .def("gamma", [](const BuildingSet& b) { return polynomial_bundle(f_vector(b)).gamma; })
        .def("h2_table",
             [](const BuildingSet& b) { return polynomial_bundle(f_vector(b)).H2; })
        .def("facet_system_json",
             [](const BuildingSet& b) {
                 return facet_system_json(facet_system_from_building_set(b));
             });

    m.def(
        "validate",
        [](const std::string& text) {
            RawBuildingSet raw = parse_building_set_raw(text);
            ValidationReport report = validate(raw.sets, raw.ground);
            py::list violations;
            for (const Violation& v : report.violations) violations.append(v.describe());
            py::dict out;
            out["valid"] = report.valid;
            out["connected"] = report.connected;
            out["violations"] = violations;
            return out;
        },
        py::arg("text"), "validate building-set JSON without constructing the object");

    m.def(
        "closure",
        [](int ground, const std::vector<std::vector<int>>& sets) {
            std::vector<Subset> subsets;
            subsets.reserve(sets.size());
            for (const auto& s : sets) subsets.push_back(subset_of(s));
            return closure(subsets, ground);
        },
        py::arg("ground"), py::arg("sets"), "smallest building set containing the family");

    m.def(
        "plan_flag", [](const BuildingSet& b) { return plan_json(plan_flag(b)); }, py::arg("b"),
        "shaving plan from the inscribed cube as JSON");
    m.def(
        "plan_general",
        [](const BuildingSet& b_sub, const BuildingSet& b_super) {
            return plan_json(plan_general(b_sub, b_super));
        },
        py::arg("b_sub"), py::arg("b_super"));
    m.def(
        "gamma_via_plan",
        [](const std::string& plan_text) {
            PlanEvaluation ev = gamma_via_plan(parse_plan_json(plan_text));
            py::dict out;
            out["gamma"] = ev.gamma;
            out["trace_csv"] = trace_csv(ev.trace);
            out["system"] = facet_system_json(ev.system);
            return out;
        },
        py::arg("plan"), "replay a plan JSON; returns gamma, the trace, and the final system");

    m.def(
        "standard_realization",
        [](const BuildingSet& b) { return hrep_json(standard_realization(b)); }, py::arg("b"));
    m.def(
        "cubical_realization",
        [](const std::string& plan_text, const std::string& shrink) {
            CubicalResult r =
                cubical_realization(parse_plan_json(plan_text), parse_rational(shrink));
            py::list eps;
            for (const Rational& e : r.epsilons) eps.append(format_rational(e));
            py::dict out;
            out["hrep"] = hrep_json(r.hrep);
            out["epsilons"] = eps;
            return out;
        },
        py::arg("plan"), py::arg("shrink") = "1/2");
    m.def(
        "enumerate_vertices",
        [](const std::string& hrep_text) {
            return incidence_json(enumerate_vertices(parse_hrep_json(hrep_text)));
        },
        py::arg("hrep"), "exact vertex enumeration; returns incidence JSON");
    m.def(
        "check_realization",
        [](const std::string& hrep_text, const BuildingSet& b) {
            HRepresentation h = parse_hrep_json(hrep_text);
            VertexIncidence inc = enumerate_vertices(h);
            py::dict out;
            out["vertex_count"] = inc.vertices.size();
            out["normals"] = report_dict(normals_check(h, b));
            out["delzant"] = report_dict(delzant_check(h, inc));
            out["equivalent"] = combinatorial_equivalence(
                inc, facet_system_from_building_set(b));
            return out;
        },
        py::arg("hrep"), py::arg("b"));
    m.def(
        "off_export",
        [](const std::string& hrep_text) {
            HRepresentation h = parse_hrep_json(hrep_text);
            return off_export(h, enumerate_vertices(h));
        },
        py::arg("hrep"));

    m.def(
        "verify_gamma_claims",
        [](const std::vector<BuildingSet>& bs) { return claims_dict(verify_gamma_claims(bs)); },
        py::arg("building_sets"),
        "gamma nonnegativity, permutohedron bound, and monotonicity checks");
}
