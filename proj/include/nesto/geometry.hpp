#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nesto/building_set.hpp"
#include "nesto/facet_system.hpp"
#include "nesto/rational.hpp"
#include "nesto/shaving.hpp"

namespace nesto {

/// Integer outer normal, one coefficient per ambient coordinate.
using LinearForm = std::vector<long long>;

struct Hyperplane {
    std::vector<long long> coeffs;
    Rational rhs;
};

/// normal . x <= rhs
struct Inequality {
    std::string label;
    LinearForm normal;
    Rational rhs;
};

struct HRepresentation {
    int dim = 0;  // ambient coordinate count
    std::optional<Hyperplane> hyperplane;
    std::vector<Inequality> ineqs;
};

struct Vertex {
    std::vector<Rational> coords;  // ambient
    std::uint64_t tight = 0;       // bit i = i-th inequality holds with equality
};

struct VertexIncidence {
    int dim = 0;  // intrinsic polytope dimension
    std::vector<std::string> labels;
    std::vector<Vertex> vertices;
};

struct GeometryReport {
    bool passed = true;
    std::vector<std::string> violations;
};

struct CubicalResult {
    HRepresentation hrep;
    std::vector<Rational> epsilons;  // one per plan step
};

// Minkowski-sum realization inside the hyperplane sum(x) = |B|: for each
// proper S in B, sum over S of x_i >= (number of elements of B inside S),
// stored as -chi_S . x <= -count.
HRepresentation standard_realization(const BuildingSet& b);

// The cube [-1,1]^n from a split tree: each non-root node S gets +-e_axis
// of its parent's axis, plus sign for the lex-smaller child, rhs 1.
HRepresentation cube_realization(const SplitTree& tree);

// Incremental realization along a two-part plan: the new facet takes
// l = l1 + l2 and rhs b1 + b2 - eps, with eps = shrink * (minimum positive
// slack of l over current vertices).  Throws consistency_error when no
// current vertex is tight on both parents.  shrink must lie in (0,1).
CubicalResult cubical_realization(const ShavingPlan& plan,
                                  const Rational& shrink = Rational(1, 2));

// Exact vertex enumeration over dim-subsets of inequalities, the ambient
// hyperplane eliminated first.  Throws input_error on unbounded input and
// not_simple_error when a vertex is tight on more than dim facets.
VertexIncidence enumerate_vertices(const HRepresentation& hrep);

// Determinant of the tight normals at every vertex must be +-1.  With an
// ambient hyperplane the normals are first rewritten in the basis
// e_i - e_m, m the eliminated coordinate.
GeometryReport delzant_check(const HRepresentation& hrep, const VertexIncidence& incidence);

// All coefficients in {0,+-1}, and disjointly labelled facets whose union
// is absent from b have disjoint supports.
GeometryReport normals_check(const HRepresentation& hrep, const BuildingSet& b);

// True iff matching labels identify the vertex tight-sets of the incidence
// with the vertex sets of the facet system.  Throws input_error when the
// label sets differ.
bool combinatorial_equivalence(const VertexIncidence& incidence, const FacetSystem& fs);

// ASCII OFF for viewing; ambient dimension must be 3 with no hyperplane.
// Coordinates are decimal approximations, faces ordered cyclically.
std::string off_export(const HRepresentation& hrep, const VertexIncidence& incidence);

}  // namespace nesto
