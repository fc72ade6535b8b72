#include "nesto/shaving.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace nesto {

namespace {

// Decreasing cardinality, ties broken lexicographically.
bool batch_order(const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.lex_less(b);
}

std::vector<Subset> difference(const BuildingSet& super, const std::vector<Subset>& sub) {
    std::vector<Subset> out;
    for (const Subset& s : super.elements())
        if (std::find(sub.begin(), sub.end(), s) == sub.end()) out.push_back(s);
    return out;
}

int build_split_tree(const BuildingSet& b, Subset u, SplitTree& tree) {
    int index = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({u, -1, -1, -1});
    if (u.size() == 1) return index;

    // Candidate splits {T, U\T} with both halves in B, compared by
    // (max part size, lex-smaller part).
    std::optional<std::pair<Subset, Subset>> best;
    int best_max = 0;
    for (const Subset& t : b.elements()) {
        if (!t.subset_of(u) || t == u) continue;
        Subset rest = u.minus(t);
        if (!b.contains(rest)) continue;
        Subset small = t.lex_less(rest) ? t : rest;
        Subset large = small == t ? rest : t;
        int max_size = std::max(small.size(), large.size());
        if (!best || max_size < best_max ||
            (max_size == best_max && small.lex_less(best->first))) {
            best = {small, large};
            best_max = max_size;
        }
    }
    if (!best) throw not_flag_error("no 2-split of " + u.str() + " inside the building set");
    int left = build_split_tree(b, best->first, tree);
    int right = build_split_tree(b, best->second, tree);
    tree.nodes[static_cast<size_t>(index)].left = left;
    tree.nodes[static_cast<size_t>(index)].right = right;
    return index;
}

}  // namespace

CubeSubsetResult cube_subset(const BuildingSet& b) {
    if (!is_flag(b)) throw not_flag_error("cube_subset needs a flag building set");

    SplitTree tree;
    tree.ground = b.ground();
    build_split_tree(b, b.ground_set(), tree);
    int axis = 0;
    std::vector<Subset> node_subsets;
    for (SplitNode& node : tree.nodes) {
        if (!node.leaf()) node.axis = axis++;
        node_subsets.push_back(node.subset);
    }
    BuildingSet b0(b.ground(), node_subsets);
    if (static_cast<int>(b0.size()) != 2 * b.ground() - 1)
        throw consistency_error("cube building set has wrong size");
    return {std::move(b0), std::move(tree)};
}

std::vector<Subset> decompose(const BuildingSet& b, Subset s) {
    if (!s.subset_of(b.ground_set())) throw input_error("decompose: subset outside ground set");
    std::vector<Subset> parts;
    // Descending canonical order: an element inside S is maximal there
    // exactly when no already kept element contains it.
    const std::vector<Subset>& elems = b.elements();
    for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
        if (!it->subset_of(s)) continue;
        bool covered = false;
        for (const Subset& kept : parts)
            if (it->subset_of(kept)) {
                covered = true;
                break;
            }
        if (!covered) parts.push_back(*it);
    }
    Subset total;
    for (const Subset& p : parts) {
        if (p.intersects(total)) throw consistency_error("decompose: parts not disjoint");
        total = total.unite(p);
    }
    if (total != s) throw consistency_error("decompose: parts do not cover the subset");
    std::sort(parts.begin(), parts.end(),
              [](const Subset& a, const Subset& b2) { return a.min_element() < b2.min_element(); });
    return parts;
}

ShavingPlan plan_flag(const BuildingSet& b) {
    CubeSubsetResult cube = cube_subset(b);
    ShavingPlan plan{b, cube.b0, std::move(cube.tree), {}};

    std::vector<Subset> current = plan.b0.elements();
    std::vector<Subset> remaining = difference(b, current);
    int stage = 0;
    while (!remaining.empty()) {
        // Canonically least missing element; strict subsets are smaller,
        // hence earlier, so it is minimal by inclusion.
        Subset s = remaining.front();
        auto split = two_split(b, s);
        if (!split) throw consistency_error("flag building set lost its 2-split for " + s.str());
        Subset i_part = split->first, j_part = split->second;

        std::vector<Subset> with_s = current;
        with_s.push_back(s);
        BuildingSet closed = closure(with_s, b.ground());
        std::vector<Subset> batch;
        for (const Subset& e : closed.elements())
            if (std::find(current.begin(), current.end(), e) == current.end())
                batch.push_back(e);

        // Cross-check against the one-step description of the closure: the
        // new elements are exactly the disjoint unions around the split.
        {
            std::vector<Subset> described;
            for (const Subset& s1 : current) {
                if (!i_part.subset_of(s1)) continue;
                for (const Subset& s2 : current) {
                    if (!j_part.subset_of(s2) || !s1.disjoint(s2)) continue;
                    Subset u = s1.unite(s2);
                    if (std::find(current.begin(), current.end(), u) != current.end()) continue;
                    if (std::find(described.begin(), described.end(), u) == described.end())
                        described.push_back(u);
                }
            }
            auto canon = [](std::vector<Subset> v) {
                std::sort(v.begin(), v.end(), canonical_less);
                return v;
            };
            if (canon(batch) != canon(described))
                throw consistency_error("closure batch disagrees with its split description");
        }

        std::sort(batch.begin(), batch.end(), batch_order);
        for (const Subset& e : batch) {
            BuildingSet current_bs(b.ground(), current);
            std::vector<Subset> parts = decompose(current_bs, e);
            if (parts.size() != 2)
                throw consistency_error("flag plan step " + e.str() + " has " +
                                        std::to_string(parts.size()) + " parts");
            plan.steps.push_back({e, std::move(parts), stage});
            current.push_back(e);
            remaining.erase(std::remove(remaining.begin(), remaining.end(), e), remaining.end());
        }
        ++stage;
    }
    return plan;
}

ShavingPlan plan_general(const BuildingSet& b_sub, const BuildingSet& b_super) {
    if (b_sub.ground() != b_super.ground())
        throw input_error("plan_general: ground sets differ");
    if (!b_sub.connected() || !b_super.connected())
        throw input_error("plan_general: both building sets must be connected");
    for (const Subset& s : b_sub.elements())
        if (!b_super.contains(s))
            throw input_error("plan_general: " + s.str() + " is not in the larger set");

    ShavingPlan plan{b_super, b_sub, std::nullopt, {}};
    std::vector<Subset> current = b_sub.elements();
    std::vector<Subset> diff = difference(b_super, current);
    std::sort(diff.begin(), diff.end(), batch_order);
    int stage = 0;
    for (const Subset& e : diff) {
        BuildingSet current_bs(b_super.ground(), current);
        std::vector<Subset> parts = decompose(current_bs, e);
        if (parts.size() < 2)
            throw consistency_error("general plan step " + e.str() + " is already present");
        plan.steps.push_back({e, std::move(parts), stage++});
        current.push_back(e);
    }
    return plan;
}

PlanEvaluation gamma_via_plan(const ShavingPlan& plan) {
    FacetSystem fs = facet_system_from_building_set(plan.b0);
    int n = fs.dim;
    IntVec cumulative = polynomial_bundle(f_vector(fs)).gamma;
    GammaTrace trace;
    trace.initial = cumulative;

    for (size_t step = 0; step < plan.steps.size(); ++step) {
        const ShavingStep& st = plan.steps[step];
        std::uint64_t defining = 0;
        for (const Subset& part : st.parts) {
            int idx = fs.label_index(part.str());
            if (idx < 0)
                throw consistency_error("plan step " + st.s.str() + ": no facet labelled " +
                                        part.str());
            defining |= std::uint64_t{1} << idx;
        }
        bool nonempty = false;
        for (std::uint64_t v : fs.vertices)
            if ((v & defining) == defining) {
                nonempty = true;
                break;
            }
        if (!nonempty)
            throw consistency_error("plan step " + st.s.str() + ": shaved face is empty");
        Face face = face_from(fs, defining);
        if (face.facets != defining)
            throw consistency_error("plan step " + st.s.str() +
                                    ": face lies on more facets than its parts");

        int codim = static_cast<int>(st.parts.size());
        FacetSystem g = face_subsystem(fs, face);
        IntVec face_gamma = polynomial_bundle(f_vector(g)).gamma;
        IntVec bump = poly_shift(poly_mul(face_gamma, gamma_simplex(codim - 2)), 1);
        if (bump.size() > cumulative.size())
            throw consistency_error("gamma increment exceeds ambient degree");
        for (size_t i = 0; i < bump.size(); ++i) cumulative[i] += bump[i];

        fs = shave(fs, face, st.s.str());
        trace.rows.push_back({static_cast<int>(step), std::move(face_gamma), cumulative});
    }
    (void)n;
    return {cumulative, std::move(trace), std::move(fs)};
}

ClaimsReport verify_gamma_claims(const std::vector<BuildingSet>& bs) {
    ClaimsReport report;
    auto add = [&](std::string desc, bool passed, bool skipped, std::string detail) {
        if (!skipped && !passed) report.all_passed = false;
        report.checks.push_back({std::move(desc), passed, skipped, std::move(detail)});
    };

    std::map<int, IntVec> pe_gamma;  // keyed by ground size
    auto permutohedron_gamma = [&](int ground) -> const IntVec& {
        auto it = pe_gamma.find(ground);
        if (it == pe_gamma.end()) {
            BuildingSet pe = preset(Preset::permutohedron, ground - 1);
            it = pe_gamma.emplace(ground, polynomial_bundle(f_vector(pe)).gamma).first;
        }
        return it->second;
    };

    std::vector<std::optional<IntVec>> gammas(bs.size());
    for (size_t i = 0; i < bs.size(); ++i) {
        std::string name = "B[" + std::to_string(i) + "]";
        if (!bs[i].connected()) {
            add(name + " bounds", false, true, "skipped: not connected");
            continue;
        }
        if (!is_flag(bs[i])) {
            add(name + " bounds", false, true, "skipped: not flag");
            continue;
        }
        IntVec gamma = polynomial_bundle(f_vector(bs[i])).gamma;
        bool nonneg = std::all_of(gamma.begin(), gamma.end(), [](long long g) { return g >= 0; });
        add(name + " gamma nonnegative", nonneg, false, vector_str(gamma));
        const IntVec& pe = permutohedron_gamma(bs[i].ground());
        bool bounded = true;
        for (size_t k = 0; k < gamma.size(); ++k)
            if (gamma[k] > pe[k]) bounded = false;
        add(name + " gamma within permutohedron bound", bounded,
            false, vector_str(gamma) + " vs " + vector_str(pe));
        gammas[i] = std::move(gamma);
    }

    for (size_t i = 0; i < bs.size(); ++i) {
        if (!gammas[i]) continue;
        for (size_t j = 0; j < bs.size(); ++j) {
            if (i == j || !gammas[j]) continue;
            if (bs[i].ground() != bs[j].ground()) continue;
            bool nested = std::all_of(bs[i].elements().begin(), bs[i].elements().end(),
                                      [&](const Subset& s) { return bs[j].contains(s); });
            if (!nested || bs[i] == bs[j]) continue;
            bool monotone = true;
            for (size_t k = 0; k < gammas[i]->size(); ++k)
                if ((*gammas[i])[k] > (*gammas[j])[k]) monotone = false;
            add("B[" + std::to_string(i) + "] <= B[" + std::to_string(j) + "] gamma monotone",
                monotone, false, vector_str(*gammas[i]) + " vs " + vector_str(*gammas[j]));
        }
    }
    return report;
}

}  // namespace nesto
