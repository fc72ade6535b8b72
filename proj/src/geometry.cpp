#include "nesto/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <functional>
#include <map>

namespace nesto {

namespace {

// Augmented row over the reduced coordinates: dr coefficients, then the rhs.
using Row = std::vector<Rational>;

struct ReducedSystem {
    int dr = 0;      // intrinsic dimension
    int pivot = -1;  // ambient coordinate eliminated via the hyperplane
    std::vector<Row> rows;
};

ReducedSystem reduce_system(const HRepresentation& h) {
    if (h.dim < 0) throw input_error("negative ambient dimension");
    if (h.ineqs.size() > 64) throw capacity_error("vertex enumeration limited to 64 inequalities");
    ReducedSystem rs;
    if (h.hyperplane) {
        if (static_cast<int>(h.hyperplane->coeffs.size()) != h.dim)
            throw input_error("hyperplane arity does not match the ambient dimension");
        for (int i = h.dim - 1; i >= 0; --i)
            if (h.hyperplane->coeffs[static_cast<size_t>(i)] != 0) {
                rs.pivot = i;
                break;
            }
        if (rs.pivot < 0) throw input_error("hyperplane has zero normal");
        rs.dr = h.dim - 1;
    } else {
        rs.dr = h.dim;
    }
    for (const Inequality& iq : h.ineqs) {
        if (static_cast<int>(iq.normal.size()) != h.dim)
            throw input_error("inequality arity does not match the ambient dimension");
        Row row;
        row.reserve(static_cast<size_t>(rs.dr) + 1);
        if (h.hyperplane) {
            Rational am(iq.normal[static_cast<size_t>(rs.pivot)]);
            Rational cm(h.hyperplane->coeffs[static_cast<size_t>(rs.pivot)]);
            for (int i = 0; i < h.dim; ++i) {
                if (i == rs.pivot) continue;
                row.push_back(Rational(iq.normal[static_cast<size_t>(i)]) -
                              am * h.hyperplane->coeffs[static_cast<size_t>(i)] / cm);
            }
            row.push_back(iq.rhs - am * h.hyperplane->rhs / cm);
        } else {
            for (long long c : iq.normal) row.emplace_back(c);
            row.push_back(iq.rhs);
        }
        rs.rows.push_back(std::move(row));
    }
    return rs;
}

std::vector<Rational> to_ambient(const ReducedSystem& rs, const HRepresentation& h,
                                 const std::vector<Rational>& x) {
    if (!h.hyperplane) return x;
    std::vector<Rational> full(static_cast<size_t>(h.dim));
    Rational acc = h.hyperplane->rhs;
    size_t j = 0;
    for (int i = 0; i < h.dim; ++i) {
        if (i == rs.pivot) continue;
        full[static_cast<size_t>(i)] = x[j++];
        acc -= Rational(h.hyperplane->coeffs[static_cast<size_t>(i)]) * full[static_cast<size_t>(i)];
    }
    full[static_cast<size_t>(rs.pivot)] = acc / h.hyperplane->coeffs[static_cast<size_t>(rs.pivot)];
    return full;
}

// Gauss-Jordan on a square augmented system; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<Row> m, int dr) {
    for (int col = 0; col < dr; ++col) {
        int piv = -1;
        for (int r = col; r < dr; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(piv)]);
        for (int r = 0; r < dr; ++r) {
            if (r == col || m[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
            Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                         m[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (int c = col; c <= dr; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * m[static_cast<size_t>(col)][static_cast<size_t>(c)];
        }
    }
    std::vector<Rational> x(static_cast<size_t>(dr));
    for (int r = 0; r < dr; ++r)
        x[static_cast<size_t>(r)] =
            m[static_cast<size_t>(r)][static_cast<size_t>(dr)] / m[static_cast<size_t>(r)][static_cast<size_t>(r)];
    return x;
}

// Rank of the coefficient part (first dr columns).
int rank_of(std::vector<Row> rows, int dr) {
    int rank = 0;
    for (int col = 0; col < dr && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
            Rational f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                         rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            for (int c = col; c < dr; ++c)
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * rows[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

// A nonzero recession direction exists iff some kernel ray of dr-1
// independent rows satisfies all inequalities homogeneously.
void check_bounded(const ReducedSystem& rs) {
    int dr = rs.dr;
    int m = static_cast<int>(rs.rows.size());
    if (dr == 0) return;
    if (rank_of(rs.rows, dr) < dr)
        throw input_error("unbounded polyhedron: inequality normals do not span");

    int k = dr - 1;
    std::vector<int> comb(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
    while (true) {
        // Reduced row echelon of the selected rows, pivot columns recorded.
        std::vector<Row> mat;
        for (int i : comb)
            mat.emplace_back(rs.rows[static_cast<size_t>(i)].begin(),
                             rs.rows[static_cast<size_t>(i)].begin() + dr);
        std::vector<int> pivots;
        int rank = 0;
        for (int col = 0; col < dr && rank < k; ++col) {
            int piv = -1;
            for (int r = rank; r < k; ++r)
                if (mat[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(mat[static_cast<size_t>(rank)], mat[static_cast<size_t>(piv)]);
            Rational lead = mat[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            for (int c = 0; c < dr; ++c) mat[static_cast<size_t>(rank)][static_cast<size_t>(c)] /= lead;
            for (int r = 0; r < k; ++r) {
                if (r == rank || mat[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
                Rational f = mat[static_cast<size_t>(r)][static_cast<size_t>(col)];
                for (int c = 0; c < dr; ++c)
                    mat[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                        f * mat[static_cast<size_t>(rank)][static_cast<size_t>(c)];
            }
            pivots.push_back(col);
            ++rank;
        }
        if (rank == k) {
            int free_col = 0;
            while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
            std::vector<Rational> ray(static_cast<size_t>(dr), Rational(0));
            ray[static_cast<size_t>(free_col)] = 1;
            for (int r = 0; r < k; ++r)
                ray[static_cast<size_t>(pivots[static_cast<size_t>(r)])] =
                    -mat[static_cast<size_t>(r)][static_cast<size_t>(free_col)];
            bool nonpos = true, nonneg = true;
            for (const Row& row : rs.rows) {
                Rational s(0);
                for (int c = 0; c < dr; ++c) s += row[static_cast<size_t>(c)] * ray[static_cast<size_t>(c)];
                if (s > 0) nonpos = false;
                if (s < 0) nonneg = false;
                if (!nonpos && !nonneg) break;
            }
            if (nonpos || nonneg) throw input_error("unbounded polyhedron: recession ray found");
        }
        int i = k - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == m - (k - i)) --i;
        if (i < 0) break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
}

int ineq_index(const HRepresentation& h, const std::string& label) {
    for (size_t i = 0; i < h.ineqs.size(); ++i)
        if (h.ineqs[i].label == label) return static_cast<int>(i);
    return -1;
}

std::string coords_str(const std::vector<Rational>& coords) {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += format_rational(coords[i]);
    }
    return s + ")";
}

long long det_ll(const std::vector<std::vector<long long>>& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long det = 0;
    for (size_t r = 0; r < n; ++r) {
        if (m[r][0] == 0) continue;
        std::vector<std::vector<long long>> minor;
        minor.reserve(n - 1);
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        long long term = m[r][0] * det_ll(minor);
        det += (r % 2 == 0) ? term : -term;
    }
    return det;
}

}  // namespace

HRepresentation standard_realization(const BuildingSet& b) {
    if (!b.connected())
        throw input_error("standard realization needs a connected building set; connectify first");
    HRepresentation h;
    h.dim = b.ground();
    h.hyperplane = Hyperplane{std::vector<long long>(static_cast<size_t>(h.dim), 1),
                              Rational(static_cast<long long>(b.size()))};
    for (const Subset& s : b.elements()) {
        if (s == b.ground_set()) continue;
        Inequality iq;
        iq.label = s.str();
        iq.normal.assign(static_cast<size_t>(h.dim), 0);
        for (int e : s.elements()) iq.normal[static_cast<size_t>(e - 1)] = -1;
        iq.rhs = Rational(-static_cast<long long>(b.count_inside(s)));
        h.ineqs.push_back(std::move(iq));
    }
    return h;
}

HRepresentation cube_realization(const SplitTree& tree) {
    if (tree.nodes.empty() || tree.ground < 1)
        throw input_error("cube realization: empty split tree");
    if (tree.nodes.front().subset != Subset::ground(tree.ground))
        throw input_error("cube realization: root is not the ground set");
    int n = tree.ground - 1;
    std::vector<int> parent(tree.nodes.size(), -1);
    int internal = 0;
    for (size_t i = 0; i < tree.nodes.size(); ++i) {
        const SplitNode& node = tree.nodes[i];
        if (node.leaf()) {
            if (node.subset.size() != 1) throw input_error("cube realization: non-singleton leaf");
            continue;
        }
        ++internal;
        if (node.axis < 0 || node.axis >= n) throw input_error("cube realization: bad axis");
        for (int child : {node.left, node.right}) {
            if (child <= 0 || child >= static_cast<int>(tree.nodes.size()))
                throw input_error("cube realization: bad child index");
            if (parent[static_cast<size_t>(child)] >= 0)
                throw input_error("cube realization: node has two parents");
            parent[static_cast<size_t>(child)] = static_cast<int>(i);
        }
        if (!tree.nodes[static_cast<size_t>(node.left)].subset.disjoint(
                tree.nodes[static_cast<size_t>(node.right)].subset) ||
            tree.nodes[static_cast<size_t>(node.left)].subset.unite(
                tree.nodes[static_cast<size_t>(node.right)].subset) != node.subset)
            throw input_error("cube realization: children do not partition their node");
    }
    if (internal != n) throw input_error("cube realization: wrong internal node count");

    HRepresentation h;
    h.dim = n;
    for (size_t v = 1; v < tree.nodes.size(); ++v) {
        int p = parent[v];
        if (p < 0) throw input_error("cube realization: disconnected node");
        const SplitNode& par = tree.nodes[static_cast<size_t>(p)];
        const SplitNode& sibling =
            tree.nodes[static_cast<size_t>(par.left == static_cast<int>(v) ? par.right : par.left)];
        bool positive = tree.nodes[v].subset.lex_less(sibling.subset);
        Inequality iq;
        iq.label = tree.nodes[v].subset.str();
        iq.normal.assign(static_cast<size_t>(n), 0);
        iq.normal[static_cast<size_t>(par.axis)] = positive ? 1 : -1;
        iq.rhs = Rational(1);
        h.ineqs.push_back(std::move(iq));
    }
    return h;
}

CubicalResult cubical_realization(const ShavingPlan& plan, const Rational& shrink) {
    if (!plan.tree) throw input_error("cubical realization needs a plan with a split tree");
    if (shrink <= 0 || shrink >= 1) throw input_error("shrink factor must lie strictly in (0,1)");
    HRepresentation h = cube_realization(*plan.tree);
    std::vector<Rational> epsilons;
    epsilons.reserve(plan.steps.size());
    for (const ShavingStep& st : plan.steps) {
        if (st.parts.size() != 2)
            throw input_error("cubical realization needs two-part steps; got " +
                              std::to_string(st.parts.size()) + " for " + st.s.str());
        int i1 = ineq_index(h, st.parts[0].str());
        int i2 = ineq_index(h, st.parts[1].str());
        if (i1 < 0 || i2 < 0)
            throw consistency_error("plan step " + st.s.str() + " references a missing facet");
        LinearForm l(static_cast<size_t>(h.dim), 0);
        for (int c = 0; c < h.dim; ++c)
            l[static_cast<size_t>(c)] = h.ineqs[static_cast<size_t>(i1)].normal[static_cast<size_t>(c)] +
                                        h.ineqs[static_cast<size_t>(i2)].normal[static_cast<size_t>(c)];
        Rational base = h.ineqs[static_cast<size_t>(i1)].rhs + h.ineqs[static_cast<size_t>(i2)].rhs;

        VertexIncidence inc = enumerate_vertices(h);
        std::uint64_t parents =
            (std::uint64_t{1} << i1) | (std::uint64_t{1} << i2);
        bool face_met = false;
        std::optional<Rational> min_slack;
        for (const Vertex& v : inc.vertices) {
            if ((v.tight & parents) == parents) face_met = true;
            Rational value(0);
            for (int c = 0; c < h.dim; ++c)
                value += Rational(l[static_cast<size_t>(c)]) * v.coords[static_cast<size_t>(c)];
            Rational slack = base - value;
            if (slack > 0 && (!min_slack || slack < *min_slack)) min_slack = slack;
        }
        if (!face_met)
            throw consistency_error("no vertex is tight on both parents of " + st.s.str());
        if (!min_slack)
            throw consistency_error("no positive slack available for " + st.s.str());
        Rational eps = shrink * *min_slack;
        epsilons.push_back(eps);
        h.ineqs.push_back({st.s.str(), std::move(l), base - eps});
    }
    return {std::move(h), std::move(epsilons)};
}

VertexIncidence enumerate_vertices(const HRepresentation& h) {
    ReducedSystem rs = reduce_system(h);
    int dr = rs.dr;
    int m = static_cast<int>(rs.rows.size());

    VertexIncidence inc;
    inc.dim = dr;
    for (const Inequality& iq : h.ineqs) inc.labels.push_back(iq.label);

    if (dr == 0) {
        std::uint64_t tight = 0;
        for (int i = 0; i < m; ++i) {
            const Rational& rhs = rs.rows[static_cast<size_t>(i)].back();
            if (rhs < 0) throw input_error("infeasible zero-dimensional system");
            if (rhs == 0) tight |= std::uint64_t{1} << i;
        }
        if (std::popcount(tight) > 0) throw not_simple_error("point polytope touched by a facet");
        inc.vertices.push_back({to_ambient(rs, h, {}), tight});
        return inc;
    }

    check_bounded(rs);

    const long long budget = enum_budget();
    long long nodes = 0;

    std::vector<Row> echelon;  // coefficient rows only
    std::vector<int> pivcols;
    std::vector<int> chosen;
    std::map<std::vector<Rational>, std::uint64_t> found;

    std::function<void(int)> dfs = [&](int start) {
        if (++nodes > budget) throw capacity_error("vertex enumeration exceeded budget");
        if (static_cast<int>(chosen.size()) == dr) {
            std::vector<Row> sys;
            for (int i : chosen) sys.push_back(rs.rows[static_cast<size_t>(i)]);
            auto x = solve_square(std::move(sys), dr);
            if (!x) throw consistency_error("independent subset failed to solve");
            std::uint64_t tight = 0;
            for (int i = 0; i < m; ++i) {
                Rational lhs(0);
                for (int c = 0; c < dr; ++c)
                    lhs += rs.rows[static_cast<size_t>(i)][static_cast<size_t>(c)] * (*x)[static_cast<size_t>(c)];
                if (lhs > rs.rows[static_cast<size_t>(i)].back()) return;
                if (lhs == rs.rows[static_cast<size_t>(i)].back()) tight |= std::uint64_t{1} << i;
            }
            if (std::popcount(tight) > dr)
                throw not_simple_error("vertex " + coords_str(to_ambient(rs, h, *x)) +
                                       " is tight on more than dim facets");
            found.emplace(*x, tight);
            return;
        }
        int need = dr - static_cast<int>(chosen.size());
        for (int i = start; i <= m - need; ++i) {
            Row row(rs.rows[static_cast<size_t>(i)].begin(),
                    rs.rows[static_cast<size_t>(i)].begin() + dr);
            for (size_t k = 0; k < echelon.size(); ++k) {
                int p = pivcols[k];
                if (row[static_cast<size_t>(p)] == 0) continue;
                Rational f = row[static_cast<size_t>(p)] / echelon[k][static_cast<size_t>(p)];
                for (int c = 0; c < dr; ++c) row[static_cast<size_t>(c)] -= f * echelon[k][static_cast<size_t>(c)];
            }
            int piv = -1;
            for (int c = 0; c < dr; ++c)
                if (row[static_cast<size_t>(c)] != 0) {
                    piv = c;
                    break;
                }
            if (piv < 0) continue;
            echelon.push_back(std::move(row));
            pivcols.push_back(piv);
            chosen.push_back(i);
            dfs(i + 1);
            chosen.pop_back();
            pivcols.pop_back();
            echelon.pop_back();
        }
    };
    dfs(0);

    if (found.empty()) throw input_error("empty polyhedron: no feasible vertex");
    inc.vertices.reserve(found.size());
    for (const auto& [coords, tight] : found)
        inc.vertices.push_back({to_ambient(rs, h, coords), tight});
    std::sort(inc.vertices.begin(), inc.vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.coords < b.coords; });
    return inc;
}

GeometryReport delzant_check(const HRepresentation& h, const VertexIncidence& inc) {
    GeometryReport report;
    int d = inc.dim;

    std::vector<std::vector<long long>> normals;
    if (h.hyperplane) {
        int pivot = -1;
        for (int i = h.dim - 1; i >= 0; --i)
            if (h.hyperplane->coeffs[static_cast<size_t>(i)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw input_error("hyperplane has zero normal");
        for (const Inequality& iq : h.ineqs) {
            Rational am(iq.normal[static_cast<size_t>(pivot)]);
            Rational cm(h.hyperplane->coeffs[static_cast<size_t>(pivot)]);
            std::vector<long long> row;
            for (int i = 0; i < h.dim; ++i) {
                if (i == pivot) continue;
                Rational v = Rational(iq.normal[static_cast<size_t>(i)]) -
                             am * h.hyperplane->coeffs[static_cast<size_t>(i)] / cm;
                if (denominator(v) != 1)
                    throw input_error("normals are not integer in the reduced basis");
                row.push_back(numerator(v).convert_to<long long>());
            }
            normals.push_back(std::move(row));
        }
    } else {
        for (const Inequality& iq : h.ineqs) normals.push_back(iq.normal);
    }

    for (const Vertex& v : inc.vertices) {
        std::vector<std::vector<long long>> mat;
        for (int i = 0; i < static_cast<int>(h.ineqs.size()); ++i)
            if (v.tight & (std::uint64_t{1} << i)) mat.push_back(normals[static_cast<size_t>(i)]);
        if (static_cast<int>(mat.size()) != d) {
            report.passed = false;
            report.violations.push_back("vertex " + coords_str(v.coords) +
                                        " is not simple (tight count " +
                                        std::to_string(mat.size()) + ")");
            continue;
        }
        long long det = det_ll(mat);
        if (det != 1 && det != -1) {
            report.passed = false;
            report.violations.push_back("vertex " + coords_str(v.coords) + " has determinant " +
                                        std::to_string(det));
        }
    }
    return report;
}

GeometryReport normals_check(const HRepresentation& h, const BuildingSet& b) {
    GeometryReport report;
    for (const Inequality& iq : h.ineqs)
        for (size_t c = 0; c < iq.normal.size(); ++c)
            if (iq.normal[c] < -1 || iq.normal[c] > 1) {
                report.passed = false;
                report.violations.push_back("facet " + iq.label + " has coefficient " +
                                            std::to_string(iq.normal[c]) + " at coordinate " +
                                            std::to_string(c + 1));
            }

    std::vector<Subset> subsets;
    subsets.reserve(h.ineqs.size());
    for (const Inequality& iq : h.ineqs) subsets.push_back(Subset::parse(iq.label));
    for (size_t i = 0; i < h.ineqs.size(); ++i)
        for (size_t j = i + 1; j < h.ineqs.size(); ++j) {
            if (!subsets[i].disjoint(subsets[j])) continue;
            if (b.contains(subsets[i].unite(subsets[j]))) continue;
            for (size_t c = 0; c < h.ineqs[i].normal.size(); ++c)
                if (h.ineqs[i].normal[c] != 0 && h.ineqs[j].normal[c] != 0) {
                    report.passed = false;
                    report.violations.push_back(
                        "facets " + h.ineqs[i].label + " and " + h.ineqs[j].label +
                        " share support coordinate " + std::to_string(c + 1) +
                        " although their union is not in the building set");
                }
        }
    return report;
}

bool combinatorial_equivalence(const VertexIncidence& inc, const FacetSystem& fs) {
    if (static_cast<int>(inc.labels.size()) != fs.facet_count())
        throw input_error("combinatorial equivalence: facet counts differ");
    std::vector<int> to_fs(inc.labels.size());
    for (size_t i = 0; i < inc.labels.size(); ++i) {
        int idx = fs.label_index(inc.labels[i]);
        if (idx < 0)
            throw input_error("combinatorial equivalence: label '" + inc.labels[i] +
                              "' is missing from the facet system");
        to_fs[i] = idx;
    }
    if (inc.vertices.size() != fs.vertices.size()) return false;
    std::vector<std::uint64_t> mapped;
    mapped.reserve(inc.vertices.size());
    for (const Vertex& v : inc.vertices) {
        std::uint64_t mask = 0;
        for (size_t i = 0; i < inc.labels.size(); ++i)
            if (v.tight & (std::uint64_t{1} << i)) mask |= std::uint64_t{1} << to_fs[i];
        mapped.push_back(mask);
    }
    std::sort(mapped.begin(), mapped.end(), index_lex_less);
    return mapped == fs.vertices;
}

std::string off_export(const HRepresentation& h, const VertexIncidence& inc) {
    if (h.dim != 3 || h.hyperplane)
        throw input_error("OFF export needs ambient dimension 3 without a hyperplane");

    size_t nv = inc.vertices.size();
    std::vector<std::vector<int>> faces;
    size_t edge_total = 0;
    for (size_t f = 0; f < h.ineqs.size(); ++f) {
        std::vector<int> on_face;
        for (size_t v = 0; v < nv; ++v)
            if (inc.vertices[v].tight & (std::uint64_t{1} << f)) on_face.push_back(static_cast<int>(v));
        if (on_face.size() < 3)
            throw consistency_error("facet " + h.ineqs[f].label + " has fewer than 3 vertices");
        // Cyclic walk: two facet vertices are polygon neighbours exactly when
        // they share two tight facets.
        auto adjacent = [&](int a, int b) {
            return std::popcount(inc.vertices[static_cast<size_t>(a)].tight &
                                 inc.vertices[static_cast<size_t>(b)].tight) == 2;
        };
        std::vector<int> cycle{on_face[0]};
        std::vector<bool> used(on_face.size(), false);
        used[0] = true;
        while (cycle.size() < on_face.size()) {
            bool advanced = false;
            for (size_t k = 0; k < on_face.size(); ++k) {
                if (used[k] || !adjacent(cycle.back(), on_face[k])) continue;
                cycle.push_back(on_face[k]);
                used[k] = true;
                advanced = true;
                break;
            }
            if (!advanced) throw consistency_error("facet " + h.ineqs[f].label + " is not a cycle");
        }
        if (!adjacent(cycle.back(), cycle.front()))
            throw consistency_error("facet " + h.ineqs[f].label + " does not close up");
        edge_total += cycle.size();
        faces.push_back(std::move(cycle));
    }

    std::string out = "OFF\n";
    out += std::to_string(nv) + " " + std::to_string(faces.size()) + " " +
           std::to_string(edge_total / 2) + "\n";
    char buf[64];
    for (const Vertex& v : inc.vertices) {
        for (size_t c = 0; c < v.coords.size(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.12g", v.coords[c].convert_to<double>());
            out += (c ? " " : "") + std::string(buf);
        }
        out += "\n";
    }
    for (const std::vector<int>& face : faces) {
        out += std::to_string(face.size());
        for (int v : face) out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

}  // namespace nesto
