#include "nesto/building_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_set>

namespace nesto {

namespace {

long long env_ll(const char* name, long long fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    long long v = std::strtoll(raw, &end, 10);
    return (end && *end == '\0' && v > 0) ? v : fallback;
}

void check_ground(int ground) {
    if (ground < 1) throw input_error("ground size must be positive");
    if (ground > max_ground())
        throw capacity_error("ground size " + std::to_string(ground) + " exceeds cap " +
                             std::to_string(max_ground()));
}

void check_member(Subset s, int ground, const char* what) {
    if (s.empty()) throw input_error(std::string(what) + ": empty subset");
    if (!s.subset_of(Subset::ground(ground)))
        throw input_error(std::string(what) + ": subset " + s.str() + " outside ground [" +
                          std::to_string(ground) + "]");
}

std::vector<Subset> canonicalize(std::vector<Subset> family) {
    std::sort(family.begin(), family.end(), canonical_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

}  // namespace

int max_ground() {
    static const int v = static_cast<int>(std::min<long long>(env_ll("NESTO_MAX_GROUND", kMaxGround), kMaxGround));
    return v;
}

long long enum_budget() {
    static const long long v = env_ll("NESTO_ENUM_BUDGET", 10'000'000);
    return v;
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

Graph::Graph(int node_count, std::vector<std::pair<int, int>> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    check_ground(node_count);
    adjacency_.assign(static_cast<size_t>(node_count), Subset());
    std::unordered_set<std::uint64_t> seen;
    for (auto& [a, b] : edges_) {
        if (a < 1 || a > node_count || b < 1 || b > node_count)
            throw input_error("edge endpoint outside node range");
        if (a == b) throw input_error("loop at node " + std::to_string(a));
        if (a > b) std::swap(a, b);
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
        if (!seen.insert(key).second)
            throw input_error("multi-edge " + std::to_string(a) + "-" + std::to_string(b));
        adjacency_[static_cast<size_t>(a) - 1] = adjacency_[static_cast<size_t>(a) - 1].unite(Subset::singleton(b));
        adjacency_[static_cast<size_t>(b) - 1] = adjacency_[static_cast<size_t>(b) - 1].unite(Subset::singleton(a));
    }
}

bool Graph::induced_connected(Subset nodes) const {
    if (nodes.size() <= 1) return true;
    Subset frontier = Subset::singleton(nodes.min_element());
    Subset reached = frontier;
    while (!frontier.empty()) {
        Subset next;
        for (int i : frontier.elements())
            next = next.unite(neighbors(i).intersect(nodes));
        frontier = next.minus(reached);
        reached = reached.unite(next);
    }
    return reached == nodes;
}

// ---------------------------------------------------------------------------
// BuildingSet
// ---------------------------------------------------------------------------

std::string Violation::describe() const {
    if (axiom == 1) return "missing singleton {" + std::to_string(missing_singleton) + "}";
    return "missing union of " + first.str() + " and " + second.str();
}

BuildingSet::BuildingSet(int ground, std::vector<Subset> elements) {
    ValidationReport report = validate(elements, ground);
    if (!report.valid)
        throw consistency_error("family is not a building set: " +
                                report.violations.front().describe());
    ground_ = ground;
    elements_ = canonicalize(std::move(elements));
}

bool BuildingSet::contains(const Subset& s) const {
    return std::binary_search(elements_.begin(), elements_.end(), s, canonical_less);
}

int BuildingSet::count_inside(const Subset& s) const {
    int count = 0;
    for (const Subset& e : elements_)
        if (e.subset_of(s)) ++count;
    return count;
}

std::vector<Subset> BuildingSet::maximal_elements() const {
    std::vector<Subset> maxima;
    // Canonical order puts supersets after subsets, so scan from the top.
    for (auto it = elements_.rbegin(); it != elements_.rend(); ++it) {
        bool covered = false;
        for (const Subset& m : maxima)
            if (it->subset_of(m)) { covered = true; break; }
        if (!covered) maxima.push_back(*it);
    }
    return canonicalize(std::move(maxima));
}

ValidationReport validate(const std::vector<Subset>& family, int ground) {
    check_ground(ground);
    for (const Subset& s : family) check_member(s, ground, "validate");

    std::vector<Subset> sorted = canonicalize(family);
    auto present = [&](const Subset& s) {
        return std::binary_search(sorted.begin(), sorted.end(), s, canonical_less);
    };

    ValidationReport report;
    for (int i = 1; i <= ground; ++i) {
        if (!present(Subset::singleton(i)))
            report.violations.push_back({.axiom = 1, .missing_singleton = i, .first = {}, .second = {}});
    }
    for (size_t i = 0; i < sorted.size(); ++i) {
        for (size_t j = i + 1; j < sorted.size(); ++j) {
            if (!sorted[i].intersects(sorted[j])) continue;
            if (!present(sorted[i].unite(sorted[j])))
                report.violations.push_back(
                    {.axiom = 2, .first = sorted[i], .second = sorted[j]});
        }
    }
    report.valid = report.violations.empty();
    report.connected = report.valid && present(Subset::ground(ground));
    return report;
}

BuildingSet closure(const std::vector<Subset>& family, int ground) {
    check_ground(ground);
    for (const Subset& s : family) check_member(s, ground, "closure");

    std::unordered_set<std::uint64_t> masks;
    std::vector<Subset> work;
    auto add = [&](Subset s) {
        if (masks.insert(s.mask()).second) work.push_back(s);
    };
    for (int i = 1; i <= ground; ++i) add(Subset::singleton(i));
    for (const Subset& s : family) add(s);

    const long long budget = enum_budget();
    long long ops = 0;
    // Worklist closure: union every intersecting pair until stable.  Every
    // pair (i, j) with i < j is visited exactly once, when work[j] is the
    // worklist item.
    for (size_t next = 0; next < work.size(); ++next) {
        Subset s = work[next];
        for (size_t j = 0; j < next; ++j) {
            if (++ops > budget) throw capacity_error("closure exceeded enumeration budget");
            if (!s.intersects(work[j])) continue;
            add(s.unite(work[j]));
        }
    }

    BuildingSet result;
    result.ground_ = ground;
    result.elements_ = canonicalize(std::move(work));
    return result;
}

BuildingSet restriction(const BuildingSet& b, Subset s) {
    check_member(s, b.ground(), "restriction");
    std::vector<int> order = s.elements();
    std::vector<int> new_index(static_cast<size_t>(b.ground()) + 1, 0);
    for (size_t k = 0; k < order.size(); ++k) new_index[static_cast<size_t>(order[k])] = static_cast<int>(k) + 1;

    std::vector<Subset> elements;
    for (const Subset& e : b.elements()) {
        if (!e.subset_of(s)) continue;
        std::uint64_t mask = 0;
        for (int i : e.elements()) mask |= std::uint64_t{1} << (new_index[static_cast<size_t>(i)] - 1);
        elements.push_back(Subset(mask));
    }
    return BuildingSet(s.size(), std::move(elements));
}

namespace {

Subset shift(Subset s, int offset) {
    return Subset(s.mask() << offset);
}

}  // namespace

BuildingSet product(const BuildingSet& b1, const BuildingSet& b2) {
    int ground = b1.ground() + b2.ground();
    if (ground > max_ground())
        throw capacity_error("product ground " + std::to_string(ground) + " exceeds cap");
    std::vector<Subset> elements = b1.elements();
    for (const Subset& e : b2.elements()) elements.push_back(shift(e, b1.ground()));
    return BuildingSet(ground, std::move(elements));
}

Subset substitution_block_image(const std::vector<int>& part_grounds, Subset outer_element) {
    std::uint64_t mask = 0;
    int offset = 0;
    for (size_t i = 0; i < part_grounds.size(); ++i) {
        if (outer_element.contains(static_cast<int>(i) + 1))
            mask |= Subset::ground(part_grounds[i]).mask() << offset;
        offset += part_grounds[i];
    }
    return Subset(mask);
}

BuildingSet substitution(const BuildingSet& outer, const std::vector<BuildingSet>& parts) {
    if (!outer.connected()) throw input_error("substitution: outer building set must be connected");
    if (parts.size() != static_cast<size_t>(outer.ground()))
        throw input_error("substitution: need exactly one part per outer ground element");
    long long total = 0;
    std::vector<int> part_grounds;
    for (const BuildingSet& p : parts) {
        if (!p.connected()) throw input_error("substitution: every part must be connected");
        total += p.ground();
        part_grounds.push_back(p.ground());
    }
    if (total > max_ground())
        throw capacity_error("substitution ground " + std::to_string(total) + " exceeds cap");

    std::vector<Subset> elements;
    int offset = 0;
    for (const BuildingSet& p : parts) {
        for (const Subset& e : p.elements()) elements.push_back(shift(e, offset));
        offset += p.ground();
    }
    for (const Subset& s : outer.elements())
        elements.push_back(substitution_block_image(part_grounds, s));
    return BuildingSet(static_cast<int>(total), std::move(elements));
}

ConnectifyResult connectify(const BuildingSet& b) {
    ConnectifyResult result{b, {}};
    for (const Subset& e : b.elements()) result.label_map.emplace_back(e, e);
    if (b.connected()) return result;

    std::vector<Subset> maxima = b.maximal_elements();  // canonical order
    // Per-component building sets plus, for each, the map original -> local.
    struct Component {
        BuildingSet set;
        std::vector<std::pair<Subset, Subset>> to_local;  // original element -> local element
    };
    std::vector<Component> components;
    for (const Subset& m : maxima) {
        Component c{restriction(b, m), {}};
        std::vector<int> order = m.elements();
        std::vector<int> new_index(static_cast<size_t>(b.ground()) + 1, 0);
        for (size_t k = 0; k < order.size(); ++k) new_index[static_cast<size_t>(order[k])] = static_cast<int>(k) + 1;
        for (const Subset& e : b.elements()) {
            if (!e.subset_of(m)) continue;
            std::uint64_t mask = 0;
            for (int i : e.elements()) mask |= std::uint64_t{1} << (new_index[static_cast<size_t>(i)] - 1);
            c.to_local.emplace_back(e, Subset(mask));
        }
        components.push_back(std::move(c));
    }

    // Fold left: acc <- acc(next, {1},...,{1}) with next substituted at node 1.
    Component acc = std::move(components.front());
    for (size_t ci = 1; ci < components.size(); ++ci) {
        Component& next = components[ci];
        std::vector<BuildingSet> parts;
        std::vector<int> part_grounds;
        parts.push_back(next.set);
        part_grounds.push_back(next.set.ground());
        BuildingSet trivial(1, {Subset::singleton(1)});
        for (int j = 1; j < acc.set.ground(); ++j) {
            parts.push_back(trivial);
            part_grounds.push_back(1);
        }
        BuildingSet merged = substitution(acc.set, parts);

        std::vector<std::pair<Subset, Subset>> to_local;
        for (auto& [orig, local] : acc.to_local)
            to_local.emplace_back(orig, substitution_block_image(part_grounds, local));
        for (auto& [orig, local] : next.to_local)
            to_local.emplace_back(orig, local);  // block 1 sits at offset 0
        acc = Component{std::move(merged), std::move(to_local)};
    }

    result.connected = std::move(acc.set);
    result.label_map = std::move(acc.to_local);
    return result;
}

BuildingSet graphical(const Graph& g) {
    // Output-sensitive enumeration: for each root r ascending, grow connected
    // node sets whose minimum is r using only nodes > r.
    std::vector<Subset> elements;
    const long long budget = enum_budget();
    long long visited = 0;
    Subset ground = Subset::ground(g.node_count());

    struct Frame {
        Subset current;
        Subset frontier;   // candidates adjacent to current, not yet decided
        Subset forbidden;  // nodes excluded on this branch
    };
    for (int r = 1; r <= g.node_count(); ++r) {
        Subset allowed = ground.minus(Subset(Subset::ground(r).mask()));  // nodes > r
        std::vector<Frame> stack;
        stack.push_back({Subset::singleton(r), g.neighbors(r).intersect(allowed), Subset()});
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            if (++visited > budget) throw capacity_error("graphical enumeration exceeded budget");
            elements.push_back(f.current);
            Subset candidates = f.frontier.minus(f.forbidden);
            Subset excluded = f.forbidden;
            for (int v : candidates.elements()) {
                Subset grown = f.current.unite(Subset::singleton(v));
                Subset frontier = f.frontier.unite(g.neighbors(v).intersect(allowed)).minus(grown);
                stack.push_back({grown, frontier, excluded});
                excluded = excluded.unite(Subset::singleton(v));
            }
        }
    }
    return BuildingSet(g.node_count(), std::move(elements));
}

Preset preset_from_name(const std::string& name) {
    if (name == "simplex") return Preset::simplex;
    if (name == "cube") return Preset::cube;
    if (name == "permutohedron") return Preset::permutohedron;
    if (name == "associahedron") return Preset::associahedron;
    throw input_error("unknown preset '" + name + "' (simplex|cube|permutohedron|associahedron)");
}

namespace {

void balanced_split(Subset interval, std::vector<Subset>& out) {
    out.push_back(interval);
    if (interval.size() < 2) return;
    std::vector<int> idx = interval.elements();
    size_t half = (idx.size() + 1) / 2;
    balanced_split(Subset::of({idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(half)}), out);
    balanced_split(Subset::of({idx.begin() + static_cast<std::ptrdiff_t>(half), idx.end()}), out);
}

}  // namespace

BuildingSet preset(Preset which, int n) {
    if (n < 1) throw input_error("preset dimension must be >= 1");
    int m = n + 1;
    check_ground(m);
    std::vector<Subset> elements;
    switch (which) {
        case Preset::simplex:
            for (int i = 1; i <= m; ++i) elements.push_back(Subset::singleton(i));
            elements.push_back(Subset::ground(m));
            break;
        case Preset::cube:
            balanced_split(Subset::ground(m), elements);
            break;
        case Preset::permutohedron: {
            if (m > 24) throw capacity_error("permutohedron preset beyond ground 24");
            std::uint64_t full = Subset::ground(m).mask();
            if (static_cast<long long>(full) > enum_budget())
                throw capacity_error("permutohedron preset exceeds enumeration budget");
            for (std::uint64_t mask = 1; mask <= full; ++mask) elements.push_back(Subset(mask));
            break;
        }
        case Preset::associahedron:
            for (int i = 1; i <= m; ++i) {
                std::uint64_t mask = 0;
                for (int j = i; j <= m; ++j) {
                    mask |= std::uint64_t{1} << (j - 1);
                    elements.push_back(Subset(mask));
                }
            }
            break;
    }
    return BuildingSet(m, std::move(elements));
}

std::optional<std::pair<Subset, Subset>> two_split(const BuildingSet& b, Subset s) {
    if (!b.contains(s)) throw input_error("two_split: " + s.str() + " is not an element");
    // Elements are scanned in canonical order, so the first hit has the
    // canonical-least first part.
    for (const Subset& s1 : b.elements()) {
        if (!s1.subset_of(s) || s1 == s) continue;
        Subset s2 = s.minus(s1);
        if (b.contains(s2)) return std::make_pair(s1, s2);
    }
    return std::nullopt;
}

namespace {

// Extends a partial partition of `whole` (an element of b) to a full one
// with >= 3 parts, all in b, such that no union of >= 2 parts other than
// `whole` itself lies in b.  `unions` holds the union of every nonempty
// subfamily of the parts chosen so far; `remaining` is whole minus those
// parts.  Parts stay pairwise disjoint by construction, and a proper
// subfamily can never union to `whole`, so the prune below is exact: once a
// forbidden sub-union appears the branch cannot complete into a witness.
bool has_wide_partition(const BuildingSet& b, Subset whole, Subset remaining, int parts_count,
                        std::vector<Subset>& unions) {
    if (remaining.empty()) return parts_count >= 3;
    int anchor = remaining.min_element();
    for (const Subset& part : b.elements()) {
        if (!part.contains(anchor) || !part.subset_of(remaining)) continue;
        size_t base = unions.size();
        bool dead = false;
        for (size_t i = 0; i < base; ++i) {
            Subset u = unions[i].unite(part);
            if (u != whole && b.contains(u)) {
                dead = true;
                break;
            }
            unions.push_back(u);
        }
        if (!dead) {
            unions.push_back(part);
            if (has_wide_partition(b, whole, remaining.minus(part), parts_count + 1, unions))
                return true;
        }
        unions.resize(base);
    }
    return false;
}

}  // namespace

bool is_flag(const BuildingSet& b) {
    if (!b.connected()) throw input_error("is_flag needs a connected building set; connectify first");
    for (const Subset& u : b.elements()) {
        if (u.size() < 3) continue;
        std::vector<Subset> unions;
        if (has_wide_partition(b, u, u, 0, unions)) return false;
    }
    return true;
}

bool equivalent_under_permutation(const BuildingSet& a, const BuildingSet& b) {
    if (a.ground() != b.ground() || a.size() != b.size()) return false;
    if (a.ground() > 8) throw capacity_error("permutation equivalence limited to ground <= 8");
    std::vector<int> perm(static_cast<size_t>(a.ground()));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<Subset> mapped;
        mapped.reserve(a.size());
        for (const Subset& e : a.elements()) {
            std::uint64_t mask = 0;
            for (int i : e.elements()) mask |= std::uint64_t{1} << (perm[static_cast<size_t>(i) - 1] - 1);
            mapped.push_back(Subset(mask));
        }
        std::sort(mapped.begin(), mapped.end(), canonical_less);
        if (mapped == b.elements()) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace nesto
