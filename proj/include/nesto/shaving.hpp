#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nesto/building_set.hpp"
#include "nesto/facet_system.hpp"
#include "nesto/polynomial.hpp"

namespace nesto {

// Binary split tree over the ground set.  Nodes are stored in preorder with
// the root at index 0; leaves are singletons.  Internal nodes carry the
// coordinate axis used by the cube realization, numbered in preorder.
struct SplitNode {
    Subset subset;
    int axis = -1;  // -1 for leaves
    int left = -1;  // node indices, -1 for leaves
    int right = -1;

    bool leaf() const { return left < 0; }
};

struct SplitTree {
    std::vector<SplitNode> nodes;
    int ground = 0;
};

// One shaving: S joins the running building set; parts is its decomposition
// with respect to the set current just before the step (two parts for flag
// plans).  The shaved face is the intersection of the part facets.
struct ShavingStep {
    Subset s;
    std::vector<Subset> parts;
    int stage = 0;
};

struct ShavingPlan {
    BuildingSet b;   // target
    BuildingSet b0;  // starting set
    std::optional<SplitTree> tree;
    std::vector<ShavingStep> steps;
};

struct GammaTraceRow {
    int step = 0;
    IntVec face_gamma;
    IntVec cumulative;
};

struct GammaTrace {
    IntVec initial;
    std::vector<GammaTraceRow> rows;
};

struct PlanEvaluation {
    IntVec gamma;
    GammaTrace trace;
    FacetSystem system;  // facet system after the last step
};

struct CubeSubsetResult {
    BuildingSet b0;
    SplitTree tree;
};

// Finds the cube building set inside a connected flag building set: the
// ground splits recursively into two members of B.  Splits are chosen most
// balanced first (smaller max part), then lex-least part; the lex-smaller
// part becomes the left child.  Throws not_flag_error when no split exists.
CubeSubsetResult cube_subset(const BuildingSet& b);

// Maximal elements of {T in B : T subset of S}; they partition S.  Parts are
// returned ordered by their minimal element.
std::vector<Subset> decompose(const BuildingSet& b, Subset s);

// Shaving plan from the cube of cube_subset(b) up to b.  Repeatedly adjoins
// the canonically least element S of B minus the current set (which is
// minimal by inclusion) together with its closure batch, ordered by
// decreasing cardinality then lex.  Every step has exactly two parts.
ShavingPlan plan_flag(const BuildingSet& b);

// Plan from b_sub up to b_super (same ground, b_sub contained in b_super,
// both connected): the difference ordered by decreasing cardinality then
// lex, each step carrying its full decomposition (arity >= 2).
ShavingPlan plan_general(const BuildingSet& b_sub, const BuildingSet& b_super);

// Replays the plan on facet systems, accumulating the gamma recursion
// gamma(Q) = gamma(P) + t * gamma(G) * gamma(simplex of dim codim-2) at each
// step and shaving the face.  Throws consistency_error when a step's face is
// missing or defined by more facets than its parts.
PlanEvaluation gamma_via_plan(const ShavingPlan& plan);

struct ClaimCheck {
    std::string description;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct ClaimsReport {
    std::vector<ClaimCheck> checks;
    bool all_passed = true;  // skipped checks do not fail the report
};

// Checks gamma nonnegativity, the permutohedron upper bound, and
// componentwise monotonicity for nested same-ground pairs in the list.
// Non-flag members are reported as skipped.
ClaimsReport verify_gamma_claims(const std::vector<BuildingSet>& bs);

}  // namespace nesto
