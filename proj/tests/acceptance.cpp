// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  All comparisons are exact integer or rational equalities.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "nesto/building_set.hpp"
#include "nesto/facet_system.hpp"
#include "nesto/geometry.hpp"
#include "nesto/io.hpp"
#include "nesto/polynomial.hpp"
#include "nesto/shaving.hpp"

using namespace nesto;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Every facet system the run produces goes through here; criterion 7 reports
// over the whole collection.
struct Registry {
    long long systems = 0;
    std::vector<std::string> violations;

    void record(const FacetSystem& fs, const std::string& origin) {
        ++systems;
        IntVec h = f_to_h(f_vector(fs));
        if (!palindromic(h) || h.empty() || h.front() != 1 || h.back() != 1)
            violations.push_back(origin + ": h = " + vector_str(h));
    }
};

Registry g_registry;

struct Failures {
    std::vector<std::string> items;

    void expect(bool ok, const std::string& what) {
        if (!ok) items.push_back(what);
    }
    bool pass() const { return items.empty(); }
    std::string detail() const {
        if (items.empty()) return "";
        std::string out = items.front();
        if (items.size() > 1)
            out += " (+" + std::to_string(items.size() - 1) + " more)";
        return out;
    }
};

// ---------------------------------------------------------------------------
// Catalog: graphical sets of paths, cycles, stars, complete graphs, and 200
// random connected graphs, polytope dimension up to 5.

struct Member {
    std::string name;
    BuildingSet b;
};

bool edges_connected(int nodes, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(static_cast<size_t>(nodes) + 1);
    for (int i = 0; i <= nodes; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    int parts = nodes;
    for (const auto& [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[static_cast<size_t>(ra)] = rb;
            --parts;
        }
    }
    return parts == 1;
}

std::vector<Member> build_catalog() {
    std::vector<Member> out;
    auto add = [&](const std::string& name, int nodes,
                   const std::vector<std::pair<int, int>>& edges) {
        out.push_back({name, graphical(Graph(nodes, edges))});
    };

    for (int k = 2; k <= 6; ++k) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < k; ++i) edges.push_back({i, i + 1});
        add("path-" + std::to_string(k), k, edges);
    }
    for (int k = 3; k <= 6; ++k) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < k; ++i) edges.push_back({i, i + 1});
        edges.push_back({k, 1});
        add("cycle-" + std::to_string(k), k, edges);
    }
    for (int k = 3; k <= 6; ++k) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 2; i <= k; ++i) edges.push_back({1, i});
        add("star-" + std::to_string(k), k, edges);
    }
    for (int k = 2; k <= 6; ++k) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) edges.push_back({i, j});
        add("complete-" + std::to_string(k), k, edges);
    }

    std::mt19937_64 rng(20260816);
    const double densities[] = {0.3, 0.5, 0.8};
    for (int t = 0; t < 200; ++t) {
        int k = 2 + static_cast<int>(rng() % 5);
        double p = densities[rng() % 3];
        std::vector<std::pair<int, int>> edges;
        do {
            edges.clear();
            for (int i = 1; i <= k; ++i)
                for (int j = i + 1; j <= k; ++j)
                    if (std::uniform_real_distribution<double>(0, 1)(rng) < p)
                        edges.push_back({i, j});
        } while (!edges_connected(k, edges));
        add("random-" + std::to_string(t), k, edges);
    }
    return out;
}

// Per-building-set work shared between criteria, computed once.
struct MemberData {
    IntVec gamma_direct;
    IntVec gamma_plan;
    int dim = 0;
};

std::map<std::string, MemberData> g_cache;

const MemberData& member_data(const Member& m) {
    std::string key = building_set_json(m.b);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;

    MemberData data;
    data.dim = m.b.ground() - 1;
    FacetSystem fs = facet_system_from_building_set(m.b);
    g_registry.record(fs, m.name);
    data.gamma_direct = polynomial_bundle(f_vector(fs)).gamma;
    PlanEvaluation ev = gamma_via_plan(plan_flag(m.b));
    g_registry.record(ev.system, m.name + " (replayed)");
    data.gamma_plan = ev.gamma;
    return g_cache.emplace(std::move(key), std::move(data)).first->second;
}

IntVec padded(IntVec v, size_t n) {
    v.resize(std::max(v.size(), n), 0);
    return v;
}

bool componentwise_le(const IntVec& a, const IntVec& b) {
    size_t n = std::max(a.size(), b.size());
    IntVec pa = padded(a, n), pb = padded(b, n);
    for (size_t i = 0; i < n; ++i)
        if (pa[i] > pb[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------

Failures criterion1() {
    Failures f;
    auto gamma_of = [&](const BuildingSet& b, const std::string& name) {
        auto t0 = std::chrono::steady_clock::now();
        FacetSystem fs = facet_system_from_building_set(b);
        g_registry.record(fs, name);
        IntVec gamma = polynomial_bundle(f_vector(fs)).gamma;
        f.expect(seconds_since(t0) < 1.0, name + " exceeded one second");
        return gamma;
    };
    for (int n = 1; n <= 6; ++n) {
        IntVec expected(static_cast<size_t>(n / 2) + 1, 0);
        expected[0] = 1;
        IntVec got = gamma_of(preset(Preset::cube, n), "cube-" + std::to_string(n));
        f.expect(got == expected, "cube-" + std::to_string(n) + " gamma = " + vector_str(got));
    }
    IntVec pe2 = gamma_of(preset(Preset::permutohedron, 2), "permutohedron-2");
    f.expect(pe2 == IntVec{1, 2}, "permutohedron-2 gamma = " + vector_str(pe2));
    IntVec pe3 = gamma_of(preset(Preset::permutohedron, 3), "permutohedron-3");
    f.expect(pe3 == IntVec{1, 8}, "permutohedron-3 gamma = " + vector_str(pe3));
    IntVec as3 = gamma_of(preset(Preset::associahedron, 3), "associahedron-3");
    f.expect(as3 == IntVec{1, 3}, "associahedron-3 gamma = " + vector_str(as3));
    IntVec tri = gamma_of(preset(Preset::simplex, 2), "simplex-2");
    f.expect(tri == IntVec{1, -1}, "simplex-2 gamma = " + vector_str(tri));
    return f;
}

Failures criterion2() {
    Failures f;
    BuildingSet as3 = preset(Preset::associahedron, 3);
    ShavingPlan plan = plan_flag(as3);

    std::vector<Subset> b0;
    for (const char* t : {"{1}", "{2}", "{3}", "{4}", "{1,2}", "{3,4}", "{1,2,3,4}"})
        b0.push_back(Subset::parse(t));
    f.expect(plan.b0.elements() == b0, "starting cube set differs");
    f.expect(plan.steps.size() == as3.size() - (2 * 3 + 1), "plan length is not |B|-(2n+1)");

    struct Golden {
        const char* s;
        const char* p1;
        const char* p2;
    };
    const Golden golden[] = {{"{1,2,3}", "{1,2}", "{3}"},
                             {"{2,3,4}", "{2}", "{3,4}"},
                             {"{2,3}", "{2}", "{3}"}};
    if (plan.steps.size() == 3) {
        for (size_t i = 0; i < 3; ++i) {
            f.expect(plan.steps[i].s == Subset::parse(golden[i].s),
                     "step " + std::to_string(i) + " shaves " + plan.steps[i].s.str());
            std::vector<Subset> parts = {Subset::parse(golden[i].p1),
                                         Subset::parse(golden[i].p2)};
            f.expect(plan.steps[i].parts == parts,
                     "step " + std::to_string(i) + " has unexpected parts");
        }
    }
    return f;
}

Failures criterion3(const std::vector<Member>& catalog, double* elapsed) {
    Failures f;
    auto t0 = std::chrono::steady_clock::now();
    for (const Member& m : catalog) {
        const MemberData& d = member_data(m);
        f.expect(d.gamma_plan == d.gamma_direct,
                 m.name + ": plan gamma " + vector_str(d.gamma_plan) + " vs direct " +
                     vector_str(d.gamma_direct));
    }
    *elapsed = seconds_since(t0);
    f.expect(*elapsed < 600.0, "catalog replay exceeded runtime budget");
    return f;
}

Failures criterion4(const std::vector<Member>& catalog) {
    Failures f;
    std::vector<IntVec> pe_gamma(7);
    for (int n = 1; n <= 5; ++n) {
        BuildingSet pe = preset(Preset::permutohedron, n);
        pe_gamma[static_cast<size_t>(n)] = polynomial_bundle(f_vector(pe)).gamma;
    }
    for (const Member& m : catalog) {
        const MemberData& d = member_data(m);
        bool nonneg = true;
        for (long long g : d.gamma_direct) nonneg = nonneg && g >= 0;
        f.expect(nonneg, m.name + ": negative gamma entry " + vector_str(d.gamma_direct));
        f.expect(componentwise_le(d.gamma_direct, pe_gamma[static_cast<size_t>(d.dim)]),
                 m.name + ": gamma above the permutohedron bound");
    }

    // nested flag pairs: a random connected graph and a connected spanning
    // subgraph; the smaller building set is contained in the larger
    std::mt19937_64 rng(91625);
    for (int t = 0; t < 100; ++t) {
        int k = 3 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> big;
        do {
            big.clear();
            for (int i = 1; i <= k; ++i)
                for (int j = i + 1; j <= k; ++j)
                    if (rng() % 2) big.push_back({i, j});
        } while (!edges_connected(k, big));

        std::vector<std::pair<int, int>> small;
        do {
            small.clear();
            for (const auto& e : big)
                if (rng() % 2) small.push_back(e);
        } while (!edges_connected(k, small));

        BuildingSet b1 = graphical(Graph(k, small));
        BuildingSet b2 = graphical(Graph(k, big));
        for (const Subset& s : b1.elements())
            f.expect(b2.contains(s), "subgraph building set is not nested");
        IntVec g1 = polynomial_bundle(f_vector(b1)).gamma;
        IntVec g2 = polynomial_bundle(f_vector(b2)).gamma;
        f.expect(componentwise_le(g1, g2),
                 "pair " + std::to_string(t) + ": gamma not monotone, " + vector_str(g1) +
                     " vs " + vector_str(g2));
    }
    return f;
}

Failures criterion5(const std::vector<Member>& catalog) {
    Failures f;
    std::map<std::string, bool> done;
    for (const Member& m : catalog) {
        if (m.b.ground() > 5) continue;  // dimension cap
        std::string key = building_set_json(m.b);
        if (!done.emplace(key, true).second) continue;

        CubicalResult r = cubical_realization(plan_flag(m.b));
        GeometryReport normals = normals_check(r.hrep, m.b);
        f.expect(normals.passed, m.name + ": " + (normals.violations.empty()
                                                      ? std::string("normals check failed")
                                                      : normals.violations.front()));
        VertexIncidence inc = enumerate_vertices(r.hrep);
        GeometryReport delzant = delzant_check(r.hrep, inc);
        f.expect(delzant.passed, m.name + ": " + (delzant.violations.empty()
                                                      ? std::string("delzant check failed")
                                                      : delzant.violations.front()));
        FacetSystem fs = facet_system_from_building_set(m.b);
        g_registry.record(fs, m.name + " (geometry)");
        f.expect(combinatorial_equivalence(inc, fs),
                 m.name + ": incidence differs from the facet system");
    }

    // the 4-dimensional permutohedron from its standard inequalities
    auto t0 = std::chrono::steady_clock::now();
    BuildingSet pe4 = preset(Preset::permutohedron, 4);
    HRepresentation h = standard_realization(pe4);
    f.expect(h.ineqs.size() == 30, "permutohedron-4 has " + std::to_string(h.ineqs.size()) +
                                       " inequalities");
    VertexIncidence inc = enumerate_vertices(h);
    f.expect(inc.vertices.size() == 120,
             "permutohedron-4 enumeration found " + std::to_string(inc.vertices.size()) +
                 " vertices");
    FacetSystem fs4 = facet_system_from_building_set(pe4);
    g_registry.record(fs4, "permutohedron-4");
    f.expect(combinatorial_equivalence(inc, fs4),
             "permutohedron-4 incidence differs from the facet system");

    FacetSystem from_geometry;
    from_geometry.dim = inc.dim;
    from_geometry.labels = inc.labels;
    for (const Vertex& v : inc.vertices) from_geometry.vertices.push_back(v.tight);
    std::sort(from_geometry.vertices.begin(), from_geometry.vertices.end(), index_lex_less);
    check_system(from_geometry);
    g_registry.record(from_geometry, "permutohedron-4 (from geometry)");
    f.expect(f_vector(from_geometry) == f_vector(fs4),
             "permutohedron-4 f-vector differs between geometry and combinatorics");
    f.expect(seconds_since(t0) < 120.0, "permutohedron-4 exceeded two minutes");
    return f;
}

Failures criterion6() {
    Failures f;
    std::mt19937_64 rng(77001);
    std::uniform_int_distribution<std::uint64_t> bits;

    auto random_system = [&]() {
        while (true) {
            int ground = 3 + static_cast<int>(rng() % 3);
            Subset full = Subset::ground(ground);
            std::vector<Subset> family{full};
            for (int i = 0; i < 4; ++i) family.push_back(Subset(bits(rng) % full.mask() + 1));
            BuildingSet b = closure(family, ground);
            if (b.connected()) return facet_system_from_building_set(b);
        }
    };

    int shaves = 0, label = 0;
    IntVec neg_one{-1};
    while (shaves < 500) {
        FacetSystem current = random_system();
        g_registry.record(current, "shave base");
        bool current_flag = is_flag_polytope(current);
        int chain = 0;
        while (shaves < 500 && chain < 4 && current.facet_count() < 40) {
            std::vector<Face> candidates;
            for (const Face& face : all_faces(current))
                if (face.dim <= current.dim - 2) candidates.push_back(face);
            if (candidates.empty()) break;

            Face face = candidates[rng() % candidates.size()];
            FacetSystem g = face_subsystem(current, face);
            int codim = current.dim - face.dim;
            if (g.facet_count() + codim > 24) {
                ++chain;
                continue;
            }
            g_registry.record(g, "shaved face");

            std::string name = "t" + std::to_string(label++);
            FacetSystem next = shave(current, face, name);
            g_registry.record(next, "shave result");
            ++shaves;

            // face-count identity
            IntVec fg = f_vector(g);
            IntVec rhs = poly_add(f_vector(current),
                                  poly_add(poly_mul(fg, f_simplex(codim - 1)),
                                           poly_mul(fg, neg_one)));
            f.expect(f_vector(next) == rhs, "shave " + name + ": f-vector identity failed");

            // gamma identity
            IntVec bump = poly_shift(
                poly_mul(polynomial_bundle(fg).gamma, gamma_simplex(codim - 2)), 1);
            IntVec expect = poly_add(polynomial_bundle(f_vector(current)).gamma, bump);
            IntVec got = polynomial_bundle(f_vector(next)).gamma;
            size_t width = std::max(expect.size(), got.size());
            f.expect(padded(got, width) == padded(expect, width),
                     "shave " + name + ": gamma identity failed");

            // the new facet is the product of the face with a simplex
            Face cut = face_from(next, std::uint64_t{1} << next.label_index(name));
            FacetSystem wall = face_subsystem(next, cut);
            g_registry.record(wall, "new facet");
            FacetSystem prod = product_system(g, simplex_system(codim - 1));
            g_registry.record(prod, "face-simplex product");
            f.expect(static_cast<bool>(are_isomorphic(wall, prod)),
                     "shave " + name + ": new facet is not the expected product");

            // codimension-2 shaving preserves flagness
            bool next_flag = is_flag_polytope(next);
            if (codim == 2 && current_flag)
                f.expect(next_flag, "shave " + name + ": flagness lost at codimension 2");

            current = std::move(next);
            current_flag = next_flag;
            ++chain;
        }
    }
    f.expect(shaves == 500, "expected 500 shaves");
    return f;
}

}  // namespace

int main() {
    struct Line {
        std::string text;
        bool pass;
    };
    std::vector<Line> lines;
    auto report = [&](int num, const Failures& f, const std::string& title) {
        std::string text = "criterion " + std::to_string(num) + ": " +
                           (f.pass() ? "PASS" : "FAIL") + " - " + title;
        if (!f.pass()) text += " [" + f.detail() + "]";
        lines.push_back({text, f.pass()});
        std::printf("%s\n", text.c_str());
        std::fflush(stdout);
    };

    report(1, criterion1(), "exact gamma values at desk scale");
    report(2, criterion2(), "golden three-step shaving of the associahedron");

    std::vector<Member> catalog = build_catalog();
    double replay_elapsed = 0;
    Failures c3 = criterion3(catalog, &replay_elapsed);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", replay_elapsed);
    report(3, c3, "plan gamma equals direct gamma on " + std::to_string(catalog.size()) +
                      " catalog members (" + buf + "s)");
    report(4, criterion4(catalog), "gamma nonnegativity, upper bound, and monotonicity");
    report(5, criterion5(catalog), "cubical geometry and the permutohedron-4 enumeration");
    report(6, criterion6(), "500 random shaves satisfy the face and gamma identities");

    Failures c7;
    c7.expect(g_registry.systems > 0, "no facet systems were recorded");
    for (const std::string& v : g_registry.violations) c7.expect(false, v);
    report(7, c7, "Dehn-Sommerville held for " + std::to_string(g_registry.systems) +
                      " facet systems");

    int failed = 0;
    for (const Line& l : lines)
        if (!l.pass) ++failed;
    if (failed) std::printf("%d criteria FAILED\n", failed);
    return failed ? 1 : 0;
}
