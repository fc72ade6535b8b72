#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nesto/subset.hpp"

namespace nesto {

/// Runtime caps, overridable through NESTO_MAX_GROUND / NESTO_ENUM_BUDGET.
int max_ground();
long long enum_budget();

/// Simple undirected graph on nodes {1,...,node_count}; no loops, no
/// multi-edges (rejected at construction).
class Graph {
  public:
    Graph(int node_count, std::vector<std::pair<int, int>> edges);

    int node_count() const { return node_count_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Adjacency of node i (1-based) as a Subset.
    Subset neighbors(int i) const { return adjacency_[static_cast<size_t>(i) - 1]; }

    /// True iff the induced subgraph on `nodes` is connected (empty and
    /// singleton node sets count as connected).
    bool induced_connected(Subset nodes) const;

  private:
    int node_count_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Subset> adjacency_;
};

/// One building-set axiom violation with its witnesses.
struct Violation {
    int axiom = 0;                  // 1 = missing singleton, 2 = missing union
    int missing_singleton = 0;      // axiom 1: the absent {i}
    Subset first;                   // axiom 2: the intersecting pair
    Subset second;
    std::string describe() const;
};

struct ValidationReport {
    bool valid = false;
    bool connected = false;
    std::vector<Violation> violations;
};

/// A building set on [ground]: a family of nonempty subsets containing all
/// singletons and closed under unions of intersecting members.  Elements are
/// kept deduplicated in canonical order (cardinality, then lexicographic).
class BuildingSet {
  public:
    /// Validates and canonicalizes.  Throws input_error on malformed subsets
    /// and consistency_error if the family is not a building set (use
    /// validate() or closure() for families that might not be).
    BuildingSet(int ground, std::vector<Subset> elements);

    int ground() const { return ground_; }
    Subset ground_set() const { return Subset::ground(ground_); }
    const std::vector<Subset>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    bool contains(const Subset& s) const;
    bool connected() const { return contains(ground_set()); }

    /// Number of elements contained in s, |B|_s| of the standard realization.
    int count_inside(const Subset& s) const;

    /// Maximal elements under inclusion; for a building set these are
    /// pairwise disjoint and partition the ground.
    std::vector<Subset> maximal_elements() const;

    bool operator==(const BuildingSet&) const = default;

  private:
    BuildingSet() = default;
    friend BuildingSet closure(const std::vector<Subset>&, int);

    int ground_ = 0;
    std::vector<Subset> elements_;
};

/// Checks the two building-set axioms on an arbitrary family.
/// Malformed members (empty, out of range) throw input_error instead of
/// being reported as violations.
ValidationReport validate(const std::vector<Subset>& family, int ground);

/// Minimal building set containing the family (singletons added, unions of
/// intersecting members closed off).  Idempotent.
BuildingSet closure(const std::vector<Subset>& family, int ground);

/// {S' in B : S' subset of S}, reindexed onto [|S|] along the order-preserving
/// map.  S must be nonempty and within B's ground.
BuildingSet restriction(const BuildingSet& b, Subset s);

/// Disjoint union on ground [g1+g2], second factor's indices offset by g1.
/// Never connected.
BuildingSet product(const BuildingSet& b1, const BuildingSet& b2);

/// Erokhovets substitution B(B_1,...,B_{n+1}): outer must be connected on
/// [n+1] with exactly n+1 connected parts; the result lives on the disjoint
/// union of the parts' grounds and is connected.
BuildingSet substitution(const BuildingSet& outer, const std::vector<BuildingSet>& parts);

/// Image of an original outer/part element under substitution's reindexing:
/// outer elements blow up to unions of blocks, part elements shift into their
/// block.  Exposed for connectify's facet-label bookkeeping.
Subset substitution_block_image(const std::vector<int>& part_grounds, Subset outer_element);

struct ConnectifyResult {
    BuildingSet connected;
    /// Element-wise image: pairs (original element, element of `connected`).
    /// Restricted to non-maximal originals this is the facet-label bijection;
    /// maximal elements of distinct components may share an image.
    std::vector<std::pair<Subset, Subset>> label_map;
};

/// Merges the components of B with the substitution construction
/// B_1(B_2,{1},...,{1}), left to right over components in canonical order,
/// until the result is connected.  Connected input comes back unchanged with
/// the identity map.  The nestohedron is preserved up to combinatorial
/// equivalence (ground size shrinks by one per merge).
ConnectifyResult connectify(const BuildingSet& b);

/// All nonempty node sets inducing a connected subgraph.  Connected building
/// set iff g is connected.
BuildingSet graphical(const Graph& g);

enum class Preset { simplex, cube, permutohedron, associahedron };

Preset preset_from_name(const std::string& name);  // throws input_error

/// Classic families on [n+1]: simplex (singletons + ground), permutohedron
/// (full power set), associahedron (intervals), cube (balanced binary split
/// tree of [n+1], all node subsets).
BuildingSet preset(Preset which, int n);

/// A pair (S1, S2) of elements of b with S1 disjoint-union S2 = s, canonical
/// least S1 as tie-break; absent when no two-element split exists.
/// s must be an element of b.
std::optional<std::pair<Subset, Subset>> two_split(const BuildingSet& b, Subset s);

/// Flagness of the nestohedron P_B, decided directly on the building set:
/// B is flag unless some U in B admits a partition into >= 3 elements of B
/// no sub-union of which (of >= 2 parts) lies in B.  Requires connected B.
bool is_flag(const BuildingSet& b);

/// Brute-force equivalence check under ground permutations, ground <= 8 only.
bool equivalent_under_permutation(const BuildingSet& a, const BuildingSet& b);

}  // namespace nesto
