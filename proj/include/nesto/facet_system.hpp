#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nesto/building_set.hpp"
#include "nesto/polynomial.hpp"

namespace nesto {

/// Vertex-facet incidence of an abstract simple polytope.  Facet i occupies
/// bit i in the vertex masks (at most 64 facets); vertices are kept sorted
/// lexicographically as ascending index sequences.  Dimension 0 is the point:
/// no facets, one empty vertex.
struct FacetSystem {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::uint64_t> vertices;

    int facet_count() const { return static_cast<int>(labels.size()); }
    /// Index of the facet labeled `label`, or -1.
    int label_index(const std::string& label) const;
};

/// A face as its maximal defining facet set: exactly the facets containing it.
struct Face {
    std::uint64_t facets = 0;
    int dim = 0;
};

/// Lexicographic order on equal-or-unequal-size facet index sets (ascending
/// sequences; strict prefix first).
bool index_lex_less(std::uint64_t a, std::uint64_t b);

/// Structural invariants: unique labels, sorted unique vertices, simplicity
/// (every vertex has exactly dim facets), every facet on some vertex.
/// Throws consistency_error.
void check_system(const FacetSystem& fs);

/// Facets are B minus the ground set, in canonical order, labeled by subset
/// strings; vertices are the maximal families passing the two nestedness
/// criteria.  B must be connected.
FacetSystem facet_system_from_building_set(const BuildingSet& b);

/// Face counts (f_0,...,f_n) by enumerating distinct faces as intersections
/// of vertex subsets, deduplicated by maximal defining set.
IntVec f_vector(const FacetSystem& fs);

/// Independent path: counts admissible facet families directly on the
/// building set (f_{n-k} = number of k-element families meeting the
/// criteria).  Cross-check oracle for the FacetSystem path.
IntVec f_vector(const BuildingSet& b);

/// Every face, canonical order (codimension ascending, then index-lex).
/// Includes the polytope itself (empty facet set) and the vertices.
std::vector<Face> all_faces(const FacetSystem& fs);

/// The face cut out by `defining`: maximal defining set and dimension.
/// Throws input_error when no vertex contains `defining` (empty face).
Face face_from(const FacetSystem& fs, std::uint64_t defining);

/// The face as a standalone polytope of dimension fs.dim - |face.facets|:
/// facets are those meeting the face without containing it, vertices are the
/// fs-vertices through the face, re-indexed.  Labels inherited.
FacetSystem face_subsystem(const FacetSystem& fs, const Face& face);

/// Product polytope: disjoint facets (labels prefixed "L:"/"R:"), vertices
/// all unions of one vertex from each factor.
FacetSystem product_system(const FacetSystem& a, const FacetSystem& b);

/// m-simplex: m+1 facets for m >= 1, all m-element sets as vertices;
/// m = 0 gives the point.
FacetSystem simplex_system(int m);

/// Shaves the face off: one new facet (appended, labeled `new_label`), every
/// vertex through the face replaced by |face.facets| clones exchanging one
/// defining facet for the new one.  Requires codimension >= 2.
FacetSystem shave(const FacetSystem& fs, const Face& face, const std::string& new_label);

/// True iff every set of pairwise-intersecting facets has a common vertex,
/// checked on the maximal cliques of the facet intersection graph.
/// Enumeration is capped by enum_budget().
bool is_flag_polytope(const FacetSystem& fs);

/// A facet bijection carrying vertices onto vertices, if one exists.
/// result[i] = index in `b` of the image of facet i of `a`.
/// Backtracking search; capacity error above 24 facets.
std::optional<std::vector<int>> are_isomorphic(const FacetSystem& a, const FacetSystem& b);

}  // namespace nesto
