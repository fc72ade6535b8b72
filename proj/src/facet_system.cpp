#include "nesto/facet_system.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

namespace nesto {

namespace {

int popcount(std::uint64_t m) { return std::popcount(m); }

std::vector<int> bit_indices(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

void sort_vertices(std::vector<std::uint64_t>& vs) {
    std::sort(vs.begin(), vs.end(), index_lex_less);
}

// Enumerates every admissible facet family of B (pairwise nested or
// disjoint, no pairwise-disjoint subfamily of >= 2 with union in B) in
// increasing index order, calling visit(chosen) on each, the empty family
// included.  `unions` carries the union of every pairwise-disjoint
// subfamily of chosen, which makes the second criterion incremental.
template <class Visit>
void extend_families(const BuildingSet& b, const std::vector<Subset>& facets, int start,
                     int max_size, std::vector<int>& chosen, std::vector<Subset>& unions,
                     Visit&& visit) {
    visit(chosen);
    if (static_cast<int>(chosen.size()) == max_size) return;
    for (int i = start; i < static_cast<int>(facets.size()); ++i) {
        const Subset& s = facets[static_cast<size_t>(i)];
        bool ok = true;
        for (int c : chosen) {
            const Subset& t = facets[static_cast<size_t>(c)];
            if (t.subset_of(s) || s.subset_of(t) || t.disjoint(s)) continue;
            ok = false;
            break;
        }
        if (!ok) continue;
        size_t base = unions.size();
        for (size_t u = 0; u < base; ++u) {
            if (!unions[u].disjoint(s)) continue;
            Subset un = unions[u].unite(s);
            if (b.contains(un)) {
                ok = false;
                break;
            }
            unions.push_back(un);
        }
        if (ok) {
            unions.push_back(s);
            chosen.push_back(i);
            extend_families(b, facets, i + 1, max_size, chosen, unions, visit);
            chosen.pop_back();
        }
        unions.resize(base);
    }
}

std::vector<Subset> proper_elements(const BuildingSet& b) {
    std::vector<Subset> facets;
    for (const Subset& s : b.elements())
        if (s != b.ground_set()) facets.push_back(s);
    return facets;
}

}  // namespace

bool index_lex_less(std::uint64_t a, std::uint64_t b) {
    return Subset(a).lex_less(Subset(b));
}

int FacetSystem::label_index(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    return -1;
}

void check_system(const FacetSystem& fs) {
    if (fs.dim < 0) throw consistency_error("facet system: negative dimension");
    if (fs.facet_count() > 64) throw capacity_error("facet system: more than 64 facets");
    {
        std::unordered_set<std::string> seen;
        for (const std::string& l : fs.labels) {
            if (l.empty()) throw consistency_error("facet system: empty label");
            if (!seen.insert(l).second)
                throw consistency_error("facet system: duplicate label '" + l + "'");
        }
    }
    if (fs.vertices.empty()) throw consistency_error("facet system: no vertices");
    std::uint64_t range =
        fs.facet_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << fs.facet_count()) - 1;
    std::uint64_t covered = 0;
    for (size_t i = 0; i < fs.vertices.size(); ++i) {
        std::uint64_t v = fs.vertices[i];
        if (v & ~range) throw consistency_error("facet system: vertex uses unknown facet index");
        if (popcount(v) != fs.dim)
            throw consistency_error("facet system: vertex not on exactly dim facets");
        if (i > 0 && !index_lex_less(fs.vertices[i - 1], v))
            throw consistency_error("facet system: vertices not sorted or not unique");
        covered |= v;
    }
    if (covered != range)
        throw consistency_error("facet system: some facet supports no vertex");
}

FacetSystem facet_system_from_building_set(const BuildingSet& b) {
    if (!b.connected())
        throw input_error("facet system needs a connected building set; connectify first");
    std::vector<Subset> facets = proper_elements(b);
    if (facets.size() > 64) throw capacity_error("facet system: more than 64 facets");

    FacetSystem fs;
    fs.dim = b.ground() - 1;
    for (const Subset& s : facets) fs.labels.push_back(s.str());

    std::vector<int> chosen;
    std::vector<Subset> unions;
    extend_families(b, facets, 0, fs.dim, chosen, unions,
                    [&](const std::vector<int>& family) {
                        if (static_cast<int>(family.size()) != fs.dim) return;
                        std::uint64_t mask = 0;
                        for (int i : family) mask |= std::uint64_t{1} << i;
                        fs.vertices.push_back(mask);
                    });
    sort_vertices(fs.vertices);
    check_system(fs);
    return fs;
}

IntVec f_vector(const BuildingSet& b) {
    if (!b.connected())
        throw input_error("f_vector needs a connected building set; connectify first");
    std::vector<Subset> facets = proper_elements(b);
    int n = b.ground() - 1;
    IntVec f(static_cast<size_t>(n) + 1, 0);
    std::vector<int> chosen;
    std::vector<Subset> unions;
    extend_families(b, facets, 0, n, chosen, unions, [&](const std::vector<int>& family) {
        f[static_cast<size_t>(n - static_cast<int>(family.size()))] += 1;
    });
    return f;
}

std::vector<Face> all_faces(const FacetSystem& fs) {
    std::unordered_set<std::uint64_t> seen_defining;
    std::unordered_set<std::uint64_t> seen_face;
    std::vector<Face> faces;
    for (std::uint64_t v : fs.vertices) {
        std::uint64_t t = v;
        while (true) {
            if (seen_defining.insert(t).second) {
                std::uint64_t maximal = ~std::uint64_t{0};
                for (std::uint64_t w : fs.vertices)
                    if ((w & t) == t) maximal &= w;
                if (seen_face.insert(maximal).second)
                    faces.push_back({maximal, fs.dim - popcount(maximal)});
            }
            if (t == 0) break;
            t = (t - 1) & v;
        }
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        int pa = popcount(a.facets), pb = popcount(b.facets);
        if (pa != pb) return pa < pb;
        return index_lex_less(a.facets, b.facets);
    });
    return faces;
}

IntVec f_vector(const FacetSystem& fs) {
    IntVec f(static_cast<size_t>(fs.dim) + 1, 0);
    for (const Face& face : all_faces(fs)) f[static_cast<size_t>(face.dim)] += 1;
    return f;
}

Face face_from(const FacetSystem& fs, std::uint64_t defining) {
    std::uint64_t maximal = ~std::uint64_t{0};
    bool any = false;
    for (std::uint64_t v : fs.vertices) {
        if ((v & defining) == defining) {
            maximal &= v;
            any = true;
        }
    }
    if (!any) throw input_error("face_from: no vertex lies on all given facets (empty face)");
    return {maximal, fs.dim - popcount(maximal)};
}

FacetSystem face_subsystem(const FacetSystem& fs, const Face& face) {
    std::uint64_t d = face.facets;
    std::vector<std::uint64_t> through;
    std::uint64_t present = 0;
    for (std::uint64_t v : fs.vertices) {
        if ((v & d) == d) {
            through.push_back(v);
            present |= v;
        }
    }
    if (through.empty()) throw input_error("face_subsystem: empty face");
    present &= ~d;

    FacetSystem sub;
    sub.dim = fs.dim - popcount(d);
    std::vector<int> new_index(64, -1);
    for (int j : bit_indices(present)) {
        new_index[static_cast<size_t>(j)] = sub.facet_count();
        sub.labels.push_back(fs.labels[static_cast<size_t>(j)]);
    }
    for (std::uint64_t v : through) {
        std::uint64_t mask = 0;
        for (int j : bit_indices(v & ~d)) mask |= std::uint64_t{1} << new_index[static_cast<size_t>(j)];
        sub.vertices.push_back(mask);
    }
    sort_vertices(sub.vertices);
    check_system(sub);
    return sub;
}

FacetSystem product_system(const FacetSystem& a, const FacetSystem& b) {
    if (a.facet_count() + b.facet_count() > 64)
        throw capacity_error("product system: more than 64 facets");
    FacetSystem prod;
    prod.dim = a.dim + b.dim;
    for (const std::string& l : a.labels) prod.labels.push_back("L:" + l);
    for (const std::string& l : b.labels) prod.labels.push_back("R:" + l);
    for (std::uint64_t va : a.vertices)
        for (std::uint64_t vb : b.vertices)
            prod.vertices.push_back(va | (vb << a.facet_count()));
    sort_vertices(prod.vertices);
    check_system(prod);
    return prod;
}

FacetSystem simplex_system(int m) {
    if (m < 0) throw input_error("simplex_system: dimension must be >= 0");
    FacetSystem fs;
    fs.dim = m;
    if (m == 0) {
        fs.vertices.push_back(0);
        return fs;
    }
    for (int i = 1; i <= m + 1; ++i) fs.labels.push_back("s" + std::to_string(i));
    std::uint64_t full = (std::uint64_t{1} << (m + 1)) - 1;
    for (int i = 0; i <= m; ++i) fs.vertices.push_back(full & ~(std::uint64_t{1} << i));
    sort_vertices(fs.vertices);
    return fs;
}

FacetSystem shave(const FacetSystem& fs, const Face& face, const std::string& new_label) {
    std::uint64_t d = face.facets;
    int k = popcount(d);
    if (k == 0) throw input_error("shave: empty defining set");
    if (k == 1) throw input_error("shave: cannot shave a facet (codimension 1)");
    if (fs.facet_count() >= 64) throw capacity_error("shave: more than 64 facets");
    if (fs.label_index(new_label) >= 0)
        throw input_error("shave: label '" + new_label + "' already used");
    Face actual = face_from(fs, d);  // throws when the face is empty
    if (actual.facets != d)
        throw input_error("shave: defining set is not the maximal set of a face");

    FacetSystem out;
    out.dim = fs.dim;
    out.labels = fs.labels;
    out.labels.push_back(new_label);
    std::uint64_t f0 = std::uint64_t{1} << fs.facet_count();
    for (std::uint64_t v : fs.vertices) {
        if ((v & d) == d) {
            for (int i : bit_indices(d))
                out.vertices.push_back((v & ~(std::uint64_t{1} << i)) | f0);
        } else {
            out.vertices.push_back(v);
        }
    }
    sort_vertices(out.vertices);
    check_system(out);
    return out;
}

bool is_flag_polytope(const FacetSystem& fs) {
    int f = fs.facet_count();
    std::vector<std::uint64_t> adj(static_cast<size_t>(f), 0);
    for (std::uint64_t v : fs.vertices)
        for (int i : bit_indices(v)) adj[static_cast<size_t>(i)] |= v;
    for (int i = 0; i < f; ++i) adj[static_cast<size_t>(i)] &= ~(std::uint64_t{1} << i);

    const long long budget = enum_budget();
    long long nodes = 0;
    bool flag = true;

    // Bron-Kerbosch with pivoting over facet-index masks.
    std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> expand =
        [&](std::uint64_t r, std::uint64_t p, std::uint64_t x) {
            if (!flag) return;
            if (++nodes > budget)
                throw capacity_error("flagness clique enumeration exceeded budget");
            if (p == 0 && x == 0) {
                for (std::uint64_t v : fs.vertices)
                    if ((v & r) == r) return;
                flag = false;
                return;
            }
            int pivot = -1, best = -1;
            for (int u : bit_indices(p | x)) {
                int gain = popcount(p & adj[static_cast<size_t>(u)]);
                if (gain > best) {
                    best = gain;
                    pivot = u;
                }
            }
            std::uint64_t candidates = p & ~adj[static_cast<size_t>(pivot)];
            for (int v : bit_indices(candidates)) {
                std::uint64_t bit = std::uint64_t{1} << v;
                expand(r | bit, p & adj[static_cast<size_t>(v)], x & adj[static_cast<size_t>(v)]);
                if (!flag) return;
                p &= ~bit;
                x |= bit;
            }
        };
    std::uint64_t all = f == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f) - 1;
    expand(0, all, 0);
    return flag;
}

std::optional<std::vector<int>> are_isomorphic(const FacetSystem& a, const FacetSystem& b) {
    if (a.facet_count() > 24 || b.facet_count() > 24)
        throw capacity_error("isomorphism search limited to 24 facets");
    if (a.dim != b.dim || a.facet_count() != b.facet_count() ||
        a.vertices.size() != b.vertices.size())
        return std::nullopt;
    int f = a.facet_count();
    if (f == 0) return std::vector<int>{};  // both are the point

    // Pairwise common-vertex counts; the diagonal holds facet degrees.
    auto counts = [f](const FacetSystem& fs) {
        std::vector<std::vector<int>> c(static_cast<size_t>(f), std::vector<int>(static_cast<size_t>(f), 0));
        for (std::uint64_t v : fs.vertices)
            for (int i : bit_indices(v))
                for (int j : bit_indices(v)) c[static_cast<size_t>(i)][static_cast<size_t>(j)]++;
        return c;
    };
    std::vector<std::vector<int>> ca = counts(a), cb = counts(b);

    {
        auto profile = [f](const std::vector<std::vector<int>>& c) {
            std::vector<std::vector<int>> rows;
            for (int i = 0; i < f; ++i) {
                std::vector<int> row = c[static_cast<size_t>(i)];
                std::sort(row.begin(), row.end());
                rows.push_back(std::move(row));
            }
            std::sort(rows.begin(), rows.end());
            return rows;
        };
        if (profile(ca) != profile(cb)) return std::nullopt;
    }

    // Most-constrained-first static order: descending degree.
    std::vector<int> order(static_cast<size_t>(f));
    for (int i = 0; i < f; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return ca[static_cast<size_t>(i)][static_cast<size_t>(i)] > ca[static_cast<size_t>(j)][static_cast<size_t>(j)];
    });

    std::vector<int> map(static_cast<size_t>(f), -1);
    std::vector<bool> used(static_cast<size_t>(f), false);

    std::function<bool(size_t)> search = [&](size_t pos) -> bool {
        if (pos == order.size()) {
            std::vector<std::uint64_t> mapped;
            mapped.reserve(a.vertices.size());
            for (std::uint64_t v : a.vertices) {
                std::uint64_t m = 0;
                for (int i : bit_indices(v)) m |= std::uint64_t{1} << map[static_cast<size_t>(i)];
                mapped.push_back(m);
            }
            sort_vertices(mapped);
            return mapped == b.vertices;
        }
        int i = order[pos];
        for (int j = 0; j < f; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            if (ca[static_cast<size_t>(i)][static_cast<size_t>(i)] !=
                cb[static_cast<size_t>(j)][static_cast<size_t>(j)])
                continue;
            bool ok = true;
            for (size_t q = 0; q < pos; ++q) {
                int i2 = order[q];
                if (ca[static_cast<size_t>(i)][static_cast<size_t>(i2)] !=
                    cb[static_cast<size_t>(j)][static_cast<size_t>(map[static_cast<size_t>(i2)])]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<size_t>(i)] = j;
            used[static_cast<size_t>(j)] = true;
            if (search(pos + 1)) return true;
            used[static_cast<size_t>(j)] = false;
            map[static_cast<size_t>(i)] = -1;
        }
        return false;
    };
    if (!search(0)) return std::nullopt;
    return map;
}

}  // namespace nesto
