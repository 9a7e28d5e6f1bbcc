#include "sepchk/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sepchk {

namespace {

using Pt = std::array<double, 2>;

double orient(const Pt& a, const Pt& b, const Pt& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

/// > 0 iff p lies strictly inside the circumcircle of ccw triangle (a, b, c).
double incircle(const Pt& a, const Pt& b, const Pt& c, const Pt& p) {
    double adx = a[0] - p[0], ady = a[1] - p[1];
    double bdx = b[0] - p[0], bdy = b[1] - p[1];
    double cdx = c[0] - p[0], cdy = c[1] - p[1];
    double ad = adx * adx + ady * ady;
    double bd = bdx * bdx + bdy * bdy;
    double cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
           ad * (bdx * cdy - bdy * cdx);
}

struct Tri {
    std::array<int, 3> v;    // ccw
    std::array<int, 3> nbr;  // nbr[i] across the edge opposite v[i]; -1 outside
    bool alive = true;
};

struct Mesh {
    const std::vector<Pt>& pts;
    std::vector<Tri> tris;

    explicit Mesh(const std::vector<Pt>& p) : pts(p) {}

    int edge_in(int t, int u, int w) const {  // index of the vertex opposite edge (u, w)
        for (int i = 0; i < 3; ++i)
            if (tris[t].v[i] != u && tris[t].v[i] != w) return i;
        throw std::logic_error("delaunay: edge not in triangle");
    }

    bool contains(int t, const Pt& p) const {
        const auto& v = tris[t].v;
        return orient(pts[v[0]], pts[v[1]], p) >= 0 && orient(pts[v[1]], pts[v[2]], p) >= 0 &&
               orient(pts[v[2]], pts[v[0]], p) >= 0;
    }

    int locate(int start, const Pt& p) const {
        int t = start;
        for (long guard = 0; guard < static_cast<long>(tris.size()) + 16; ++guard) {
            const auto& v = tris[t].v;
            int next = -1;
            for (int i = 0; i < 3; ++i) {
                int a = v[(i + 1) % 3], b = v[(i + 2) % 3];
                if (orient(pts[a], pts[b], p) < 0) {
                    next = tris[t].nbr[i];
                    break;
                }
            }
            if (next < 0) return t;
            t = next;
        }
        throw std::runtime_error("delaunay: point location walk did not terminate");
    }

    bool in_conflict(int t, const Pt& p) const {
        const auto& v = tris[t].v;
        return incircle(pts[v[0]], pts[v[1]], pts[v[2]], p) > 0;
    }
};

}  // namespace

DelaunayTriangulation delaunay_2d(const std::vector<Pt>& points) {
    DelaunayTriangulation out;
    int n = static_cast<int>(points.size());
    if (n < 3) return out;

    // bounding super-triangle, far enough to stay out of every circumcircle
    double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
    for (const auto& p : points) {
        lo_x = std::min(lo_x, p[0]);
        lo_y = std::min(lo_y, p[1]);
        hi_x = std::max(hi_x, p[0]);
        hi_y = std::max(hi_y, p[1]);
    }
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
    double cx = (lo_x + hi_x) / 2, cy = (lo_y + hi_y) / 2;
    double big = 1e7 * span;

    std::vector<Pt> pts(points);
    pts.push_back({cx - 2 * big, cy - big});
    pts.push_back({cx + 2 * big, cy - big});
    pts.push_back({cx, cy + 2 * big});

    Mesh mesh(pts);
    mesh.tris.push_back({{n, n + 1, n + 2}, {-1, -1, -1}, true});

    // randomized insertion order keeps expected cavity sizes constant;
    // structured inputs (points along a curve) are quadratic otherwise.
    // Explicit Fisher-Yates so the order is identical on every platform.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937 rng(0x5ee5u);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng() % static_cast<unsigned>(i + 1)]);

    int recent = 0;
    std::vector<int> cavity, stack;
    std::vector<int> visit_mark;  // stamped instead of cleared per insertion
    int stamp = 0;
    for (int idx : order) {
        const Pt& p = pts[idx];
        int t0 = mesh.locate(recent, p);

        // grow the conflict cavity from the containing triangle
        cavity.clear();
        stack.assign(1, t0);
        visit_mark.resize(mesh.tris.size() + 8, -1);
        ++stamp;
        auto in_cavity = [&](int t) { return visit_mark[t] == stamp; };
        visit_mark[t0] = stamp;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            cavity.push_back(t);
            for (int i = 0; i < 3; ++i) {
                int nb = mesh.tris[t].nbr[i];
                if (nb < 0 || in_cavity(nb)) continue;
                if (mesh.in_conflict(nb, p)) {
                    visit_mark[nb] = stamp;
                    stack.push_back(nb);
                }
            }
        }

        // boundary edges of the cavity, oriented ccw as seen from inside
        struct BoundaryEdge {
            int a, b;       // directed edge
            int outside;    // triangle across, or -1
        };
        std::vector<BoundaryEdge> rim;
        for (int t : cavity) {
            for (int i = 0; i < 3; ++i) {
                int nb = mesh.tris[t].nbr[i];
                if (nb >= 0 && in_cavity(nb)) continue;
                rim.push_back({mesh.tris[t].v[(i + 1) % 3], mesh.tris[t].v[(i + 2) % 3], nb});
            }
        }
        for (int t : cavity) mesh.tris[t].alive = false;

        // fan new triangles (idx, a, b) over the rim; rim edges form a closed
        // loop, so spokes pair up by shared rim vertices
        std::map<int, int> starts, ends;  // rim vertex -> new triangle id
        std::vector<int> created;
        for (const auto& e : rim) {
            int id = static_cast<int>(mesh.tris.size());
            mesh.tris.push_back({{idx, e.a, e.b}, {e.outside, -1, -1}, true});
            if (e.outside >= 0) {
                int oi = mesh.edge_in(e.outside, e.a, e.b);
                mesh.tris[e.outside].nbr[oi] = id;
            }
            starts[e.a] = id;
            ends[e.b] = id;
            created.push_back(id);
        }
        for (int id : created) {
            int a = mesh.tris[id].v[1], b = mesh.tris[id].v[2];
            mesh.tris[id].nbr[1] = starts.at(b);  // across the spoke (idx, b)
            mesh.tris[id].nbr[2] = ends.at(a);    // across the spoke (idx, a)
        }
        recent = created.empty() ? recent : created.front();
    }

    for (const auto& t : mesh.tris) {
        if (!t.alive) continue;
        if (t.v[0] >= n || t.v[1] >= n || t.v[2] >= n) continue;  // super vertices
        std::array<int, 3> tri = t.v;
        out.triangles.push_back(tri);
    }
    return out;
}

}  // namespace sepchk
