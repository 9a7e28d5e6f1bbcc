#include "sepchk/nerve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "sepchk/delaunay.hpp"
#include "sepchk/geometry.hpp"

namespace sepchk {

using geom::Vec2;

namespace {

void check_cloud(const PointCloud& cloud) {
    if (!cloud.labels.empty() && cloud.labels.size() != cloud.points.size())
        throw std::invalid_argument("nerve: label count does not match point count");
    std::vector<std::array<double, 2>> sorted = cloud.points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("nerve: duplicate points in cloud");
}

/// Uniform bucket index over the cloud with cell size 2 eps, for neighbor
/// queries at radius 2 eps.
struct BucketIndex {
    double cell;
    double x0, y0;
    int bx, by;
    std::vector<std::vector<int>> buckets;

    BucketIndex(const PointCloud& cloud, double eps) : cell(2 * eps) {
        double x1 = -1e300, y1 = -1e300;
        x0 = 1e300;
        y0 = 1e300;
        for (const auto& p : cloud.points) {
            x0 = std::min(x0, p[0]);
            y0 = std::min(y0, p[1]);
            x1 = std::max(x1, p[0]);
            y1 = std::max(y1, p[1]);
        }
        if (cloud.points.empty()) x0 = y0 = x1 = y1 = 0;
        bx = static_cast<int>((x1 - x0) / cell) + 1;
        by = static_cast<int>((y1 - y0) / cell) + 1;
        buckets.assign(static_cast<size_t>(bx) * by, {});
        for (int i = 0; i < static_cast<int>(cloud.points.size()); ++i)
            buckets[slot(cloud.points[i])].push_back(i);
    }
    size_t slot(const std::array<double, 2>& p) const {
        int cx = static_cast<int>((p[0] - x0) / cell);
        int cy = static_cast<int>((p[1] - y0) / cell);
        return static_cast<size_t>(cy) * bx + cx;
    }
};

/// adjacency lists of neighbors with larger index, sorted ascending
std::vector<std::vector<int>> upper_adjacency(const PointCloud& cloud, double eps) {
    int n = cloud.size();
    std::vector<std::vector<int>> adj(n);
    if (n == 0) return adj;
    BucketIndex index(cloud, eps);
    double r2 = 4 * eps * eps;
    for (int i = 0; i < n; ++i) {
        const auto& p = cloud.points[i];
        int cx = static_cast<int>((p[0] - index.x0) / index.cell);
        int cy = static_cast<int>((p[1] - index.y0) / index.cell);
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                int nx = cx + dx, ny = cy + dy;
                if (nx < 0 || nx >= index.bx || ny < 0 || ny >= index.by) continue;
                for (int j : index.buckets[static_cast<size_t>(ny) * index.bx + nx]) {
                    if (j <= i) continue;
                    const auto& q = cloud.points[j];
                    double ddx = p[0] - q[0], ddy = p[1] - q[1];
                    if (ddx * ddx + ddy * ddy <= r2) adj[i].push_back(j);
                }
            }
        std::sort(adj[i].begin(), adj[i].end());
    }
    return adj;
}

bool cech_triangle(const Vec2& a, const Vec2& b, const Vec2& c, double eps) {
    double ab = geom::squared_distance(a, b);
    double ac = geom::squared_distance(a, c);
    double bc = geom::squared_distance(b, c);
    // obtuse or right: the longest side is the diameter, and the edge rule
    // already caps sides at 2 eps
    if (ab + ac <= bc || ab + bc <= ac || ac + bc <= ab) return true;
    double cross = geom::orient2d(a, b, c);
    return ab * ac * bc <= 4.0 * eps * eps * cross * cross;
}

struct UnionFindInt {
    std::vector<int> parent;
    explicit UnionFindInt(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

/// Streams the triangles of the nerve at scale eps in lexicographic order.
/// Edge ids fall out of the two-pointer positions, so no lookups are needed:
/// id(u, v) = offset[u] + position of v in adj[u]. An optional per-edge
/// filter prunes candidates before the geometric test runs.
template <typename Fn>
void for_each_triangle(const PointCloud& cloud, const std::vector<std::vector<int>>& adj,
                       const std::vector<long>& offset, double eps, bool cech,
                       const std::vector<uint8_t>* edge_filter, Fn&& fn) {
    int n = cloud.size();
    for (int i = 0; i < n; ++i) {
        const auto& ai = adj[i];
        for (size_t ji = 0; ji < ai.size(); ++ji) {
            int j = ai[ji];
            const auto& aj = adj[j];
            long e_ij = offset[i] + static_cast<long>(ji);
            if (edge_filter && !(*edge_filter)[e_ij]) continue;
            // common neighbors l > j of i and j
            size_t pi = ji + 1, pj = 0;
            while (pi < ai.size() && pj < aj.size()) {
                if (ai[pi] < aj[pj])
                    ++pi;
                else if (ai[pi] > aj[pj])
                    ++pj;
                else {
                    int l = ai[pi];
                    long e_il = offset[i] + static_cast<long>(pi);
                    long e_jl = offset[j] + static_cast<long>(pj);
                    bool wanted = !edge_filter || ((*edge_filter)[e_il] && (*edge_filter)[e_jl]);
                    if (wanted &&
                        (!cech || cech_triangle(cloud.points[i], cloud.points[j],
                                                cloud.points[l], eps)))
                        fn(i, j, l, e_ij, e_il, e_jl);
                    ++pi;
                    ++pj;
                }
            }
        }
    }
}

/// Sparse GF(2) column reduction over streamed triangle boundaries; returns
/// the rank of the boundary operator from triangles to edges.
struct ColumnReduction {
    std::vector<long> owner;
    std::vector<std::vector<long>> stored;
    long rank = 0;
    std::vector<long> col, merged;

    explicit ColumnReduction(long edge_count) : owner(edge_count, -1) {}

    void add(long e1, long e2, long e3) {
        col = {e1, e2, e3};
        std::sort(col.begin(), col.end());
        while (!col.empty()) {
            long pivot = col.back();
            if (owner[pivot] < 0) {
                owner[pivot] = static_cast<long>(stored.size());
                stored.push_back(col);
                ++rank;
                return;
            }
            const auto& other = stored[owner[pivot]];
            merged.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(merged));
            col.swap(merged);
        }
    }
};

/// beta_1 of the at-scale nerve by direct column reduction over every
/// triangle. Exact for both modes, but only tractable when the complex is
/// not too dense; the cech path below goes through the alpha complex
/// instead.
int nerve_beta1_direct(const PointCloud& cloud, double eps, bool cech) {
    int n = cloud.size();
    auto adj = upper_adjacency(cloud, eps);
    std::vector<long> offset(n + 1, 0);
    for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + static_cast<long>(adj[i].size());
    long edge_count = offset[n];

    UnionFindInt uf(n);
    int components = n;
    for (int i = 0; i < n; ++i)
        for (int j : adj[i])
            if (uf.unite(i, j)) --components;

    ColumnReduction reduction(edge_count);
    for_each_triangle(cloud, adj, offset, eps, cech, nullptr,
                      [&reduction](int, int, int, long e1, long e2, long e3) {
                          reduction.add(e1, e2, e3);
                      });
    long z1 = edge_count - n + components;
    return static_cast<int>(z1 - reduction.rank);
}

/// beta_1 of the union of eps-balls via the alpha complex: a subcomplex of
/// the Delaunay triangulation with the same homotopy type as the union,
/// which the nerve theorem identifies with the cech nerve. Linear size, so
/// it handles the dense corpus samples. A deterministic jitter far below
/// every geometric tolerance puts the internal copy of the points in
/// general position for the incremental Delaunay construction.
int nerve_beta1_alpha(const PointCloud& cloud, double eps) {
    int n = cloud.size();
    if (n == 0) return 0;
    std::vector<std::array<double, 2>> pts = cloud.points;
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < n; ++i) {
        h = (h ^ (i + 1)) * 0xbf58476d1ce4e5b9ull;
        pts[i][0] += 1e-8 * (static_cast<double>(h % 2001) - 1000.0) / 1000.0;
        h = (h ^ ~static_cast<uint64_t>(i)) * 0x94d049bb133111ebull;
        pts[i][1] += 1e-8 * (static_cast<double>(h % 2001) - 1000.0) / 1000.0;
    }

    DelaunayTriangulation dt = delaunay_2d(pts);

    // squared circumradius per Delaunay triangle
    auto circum2 = [&pts](const std::array<int, 3>& t) {
        const auto& a = pts[t[0]];
        const auto& b = pts[t[1]];
        const auto& c = pts[t[2]];
        double ab = geom::squared_distance(Vec2{a[0], a[1]}, Vec2{b[0], b[1]});
        double ac = geom::squared_distance(Vec2{a[0], a[1]}, Vec2{c[0], c[1]});
        double bc = geom::squared_distance(Vec2{b[0], b[1]}, Vec2{c[0], c[1]});
        double cross = geom::orient2d(Vec2{a[0], a[1]}, Vec2{b[0], b[1]}, Vec2{c[0], c[1]});
        return ab * ac * bc / (4.0 * cross * cross);
    };

    // Delaunay edges with their incident triangles
    std::map<std::pair<int, int>, std::array<int, 2>> edges;  // -1 when absent
    std::vector<double> tri_r2(dt.triangles.size());
    for (size_t t = 0; t < dt.triangles.size(); ++t) {
        tri_r2[t] = circum2(dt.triangles[t]);
        const auto& v = dt.triangles[t];
        for (int i = 0; i < 3; ++i) {
            int a = v[i], b = v[(i + 1) % 3];
            if (a > b) std::swap(a, b);
            auto [it, fresh] = edges.try_emplace({a, b}, std::array<int, 2>{-1, -1});
            if (fresh)
                it->second[0] = static_cast<int>(t);
            else
                it->second[1] = static_cast<int>(t);
        }
    }

    // alpha value of an edge: half length if its diametral disk is empty
    // (checked against the opposite vertices only, enough for Delaunay
    // edges), otherwise the smallest incident circumradius
    double eps2 = eps * eps;
    long alpha_edges = 0;
    std::map<std::pair<int, int>, long> edge_id;
    UnionFindInt uf(n);
    int components = n;
    for (const auto& [key, tris] : edges) {
        const auto& p = pts[key.first];
        const auto& q = pts[key.second];
        double d2 = geom::squared_distance(Vec2{p[0], p[1]}, Vec2{q[0], q[1]});
        double alpha2 = d2 / 4.0;
        bool gabriel = true;
        std::array<double, 2> mid = {(p[0] + q[0]) / 2, (p[1] + q[1]) / 2};
        for (int t : tris) {
            if (t < 0) continue;
            for (int w : dt.triangles[t]) {
                if (w == key.first || w == key.second) continue;
                if (geom::squared_distance(Vec2{pts[w][0], pts[w][1]}, Vec2{mid[0], mid[1]}) < d2 / 4.0)
                    gabriel = false;
            }
        }
        if (!gabriel) {
            alpha2 = 1e300;
            for (int t : tris)
                if (t >= 0) alpha2 = std::min(alpha2, tri_r2[t]);
        }
        if (alpha2 <= eps2) {
            edge_id[key] = alpha_edges++;
            if (uf.unite(key.first, key.second)) --components;
        }
    }

    ColumnReduction reduction(alpha_edges);
    for (size_t t = 0; t < dt.triangles.size(); ++t) {
        if (tri_r2[t] > eps2) continue;
        const auto& v = dt.triangles[t];
        std::array<long, 3> ids;
        for (int i = 0; i < 3; ++i) {
            int a = v[i], b = v[(i + 1) % 3];
            if (a > b) std::swap(a, b);
            auto it = edge_id.find({a, b});
            if (it == edge_id.end())
                throw std::logic_error("nerve: alpha triangle with a missing edge");
            ids[i] = it->second;
        }
        reduction.add(ids[0], ids[1], ids[2]);
    }
    long z1 = alpha_edges - n + components;
    return static_cast<int>(z1 - reduction.rank);
}

int nerve_beta0(const PointCloud& cloud, double eps) {
    auto adj = upper_adjacency(cloud, eps);
    UnionFindInt uf(cloud.size());
    int components = cloud.size();
    for (int i = 0; i < cloud.size(); ++i)
        for (int j : adj[i])
            if (uf.unite(i, j)) --components;
    return components;
}

int rank_at_scale(const PointCloud& cloud, double eps, int k, bool cech) {
    if (eps <= 0) throw std::invalid_argument("nerve: scale must be positive");
    check_cloud(cloud);
    if (k == 0) return nerve_beta0(cloud, eps);
    if (k == 1) return cech ? nerve_beta1_alpha(cloud, eps) : nerve_beta1_direct(cloud, eps, false);
    throw std::invalid_argument("nerve: ranks are supported for k = 0, 1 only");
}

}  // namespace

NerveComplex build_nerve(const PointCloud& cloud, double eps, int max_dim, NerveMode mode) {
    if (eps <= 0) throw std::invalid_argument("nerve: scale must be positive");
    if (max_dim < 1) throw std::invalid_argument("nerve: max_dim must be at least 1");
    check_cloud(cloud);
    auto adj = upper_adjacency(cloud, eps);
    std::vector<Simplex> tops;
    for (int i = 0; i < cloud.size(); ++i) tops.push_back({i});
    for (int i = 0; i < cloud.size(); ++i)
        for (int j : adj[i]) tops.push_back({i, j});
    if (max_dim >= 2) {
        std::vector<long> offset(cloud.size() + 1, 0);
        for (int i = 0; i < cloud.size(); ++i)
            offset[i + 1] = offset[i] + static_cast<long>(adj[i].size());
        for_each_triangle(cloud, adj, offset, eps, mode == NerveMode::cech, nullptr,
                          [&tops](int i, int j, int l, long, long, long) {
                              tops.push_back({i, j, l});
                          });
    }
    NerveComplex out;
    out.complex = SimplicialComplex::from_top_simplices(cloud.size(), std::move(tops));
    out.scale = eps;
    out.mode = mode;
    return out;
}

int cech_rank_at_scale(const PointCloud& cloud, double eps, int k) {
    return rank_at_scale(cloud, eps, k, true);
}

int cech_rank_direct(const PointCloud& cloud, double eps, int k) {
    if (eps <= 0) throw std::invalid_argument("nerve: scale must be positive");
    check_cloud(cloud);
    if (k == 0) return nerve_beta0(cloud, eps);
    if (k == 1) return nerve_beta1_direct(cloud, eps, true);
    throw std::invalid_argument("nerve: ranks are supported for k = 0, 1 only");
}

int rips_rank_at_scale(const PointCloud& cloud, double eps, int k) {
    return rank_at_scale(cloud, eps, k, false);
}

PointCloud warsaw_circle_sample(int m, double x_min) {
    if (m < 100) throw std::invalid_argument("warsaw: need m >= 100");
    if (x_min <= 0 || x_min >= 1) throw std::invalid_argument("warsaw: need 0 < x_min < 1");
    const double gap = x_min * x_min / 2.0;
    const double target = std::min(gap * 0.98, 20.0 / m);  // m densifies beyond the gap bound

    PointCloud cloud;
    auto push = [&cloud](double x, double y, const std::string& label) {
        if (!cloud.points.empty()) {
            double dx = cloud.points.back()[0] - x, dy = cloud.points.back()[1] - y;
            if (dx * dx + dy * dy < 1e-24) return;  // drop duplicated joints
        }
        cloud.points.push_back({x, y});
        cloud.labels.push_back(label);
    };

    // sine arc, adaptively subdivided; the step criterion bounds the arc
    // length between samples using the local slope bound of sin(1/x)
    auto label_at = [](double x) { return (x > 0.35 && x < 0.55) ? std::string("U")
                                                                 : std::string("sine"); };
    struct Seg {
        double x0, x1;
    };
    std::vector<Seg> work;
    push(x_min, std::sin(1.0 / x_min), label_at(x_min));
    work.push_back({x_min, 1.0});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        double phi0 = 1.0 / s.x0, phi1 = 1.0 / s.x1;
        double dphi = phi0 - phi1;
        double slope_bound =
            std::min(1.0, std::max(std::abs(std::cos(phi0)), std::abs(std::cos(phi1))) + dphi);
        double arc_bound = (s.x1 - s.x0) *
                           std::sqrt(1.0 + slope_bound * slope_bound / std::pow(s.x0, 4));
        if (arc_bound < target) {
            push(s.x1, std::sin(1.0 / s.x1), label_at(s.x1));
        } else {
            double mid = (s.x0 + s.x1) / 2;
            // process the left half first so points come out left to right
            work.push_back({mid, s.x1});
            work.push_back({s.x0, mid});
        }
    }

    // remaining pieces are straight; spacing driven by m with a 0.01 cap
    double straight_step = std::min(0.01, 20.0 / m);
    auto polyline = [&](std::initializer_list<std::array<double, 2>> pts,
                        const std::string& label) {
        auto it = pts.begin();
        std::array<double, 2> prev = *it++;
        push(prev[0], prev[1], label);
        for (; it != pts.end(); ++it) {
            double len = std::hypot((*it)[0] - prev[0], (*it)[1] - prev[1]);
            int steps = std::max(1, static_cast<int>(std::ceil(len / straight_step)));
            for (int s = 1; s <= steps; ++s) {
                double t = static_cast<double>(s) / steps;
                push(prev[0] + t * ((*it)[0] - prev[0]), prev[1] + t * ((*it)[1] - prev[1]),
                     label);
            }
            prev = *it;
        }
    };

    // return arc from the right end of the sine arc to a vertical line at
    // x = -x_min, stopping next to the limit segment without touching it
    double y1 = std::sin(1.0);
    polyline({{1.0, y1}, {1.2, y1}, {1.2, -1.8}, {-x_min, -1.8}, {-x_min, 0.0}}, "return");
    // limit segment
    polyline({{0.0, -1.0}, {0.0, 1.0}}, "limit");

    check_cloud(cloud);
    return cloud;
}

PointCloud remove_labeled(const PointCloud& cloud, const std::string& label) {
    PointCloud out;
    for (int i = 0; i < cloud.size(); ++i) {
        if (!cloud.labels.empty() && cloud.labels[i] == label) continue;
        out.points.push_back(cloud.points[i]);
        out.labels.push_back(cloud.labels.empty() ? "" : cloud.labels[i]);
    }
    return out;
}

bool stability_check(const PointCloud& cloud, double e1, double e2, int k) {
    if (!(e1 < e2)) throw std::invalid_argument("nerve: stability check needs e1 < e2");
    return cech_rank_at_scale(cloud, e1, k) == cech_rank_at_scale(cloud, e2, k);
}

}  // namespace sepchk
