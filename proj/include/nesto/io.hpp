#pragma once

#include <string>

#include "nesto/building_set.hpp"
#include "nesto/facet_system.hpp"
#include "nesto/geometry.hpp"
#include "nesto/shaving.hpp"

namespace nesto {

// All emitters produce canonical JSON (stable field and element order), so
// parse-then-emit is byte-identical.  Parsers accept any member order and
// canonicalize; malformed input raises input_error.

std::string building_set_json(const BuildingSet& b);
BuildingSet parse_building_set_json(const std::string& text);

/// Parsed but not yet checked against the building-set axioms; feed to
/// validate() for a report instead of an exception.
struct RawBuildingSet {
    int ground = 0;
    std::vector<Subset> sets;
};
RawBuildingSet parse_building_set_raw(const std::string& text);

std::string graph_json(const Graph& g);
Graph parse_graph_json(const std::string& text);

std::string facet_system_json(const FacetSystem& fs);
FacetSystem parse_facet_system_json(const std::string& text);

std::string plan_json(const ShavingPlan& plan);
ShavingPlan parse_plan_json(const std::string& text);

std::string hrep_json(const HRepresentation& h);
HRepresentation parse_hrep_json(const std::string& text);

std::string incidence_json(const VertexIncidence& inc);

std::string trace_csv(const GammaTrace& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace nesto
