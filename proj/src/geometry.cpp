#include "sepchk/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace sepchk::geom {

int sign_of(double v) {
    if (v > TIE) return 1;
    if (v < -TIE) return -1;
    return 0;
}

double orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

double squared_distance(const Vec2& a, const Vec2& b) {
    double dx = a[0] - b[0], dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

double squared_distance(const Vec3& a, const Vec3& b) {
    double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    return dx * dx + dy * dy + dz * dz;
}

namespace {

// parameter of p along [a, b]; caller guarantees collinearity
double segment_parameter(const Vec2& p, const Vec2& a, const Vec2& b) {
    double dx = b[0] - a[0], dy = b[1] - a[1];
    if (std::abs(dx) >= std::abs(dy)) return (p[0] - a[0]) / dx;
    return (p[1] - a[1]) / dy;
}

}  // namespace

bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    if (sign_of(orient2d(a, b, p)) != 0) return false;
    return p[0] >= std::min(a[0], b[0]) - TIE && p[0] <= std::max(a[0], b[0]) + TIE &&
           p[1] >= std::min(a[1], b[1]) - TIE && p[1] <= std::max(a[1], b[1]) + TIE;
}

bool point_in_open_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    if (!point_on_segment(p, a, b)) return false;
    double t = segment_parameter(p, a, b);
    return t > TIE && t < 1.0 - TIE;
}

bool segment_meets_open_segment(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    int o1 = sign_of(orient2d(a, b, c));
    int o2 = sign_of(orient2d(a, b, d));
    int o3 = sign_of(orient2d(c, d, a));
    int o4 = sign_of(orient2d(c, d, b));

    if (o1 == 0 && o2 == 0) {
        // collinear: overlap of [c,d] with the open parameter interval (0,1)
        double tc = segment_parameter(c, a, b);
        double td = segment_parameter(d, a, b);
        double lo = std::min(tc, td), hi = std::max(tc, td);
        return hi > TIE && lo < 1.0 - TIE;
    }
    if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) {
        // crossing; the intersection parameter along [a, b]
        double s = orient2d(c, d, a) / (orient2d(c, d, a) - orient2d(c, d, b));
        return s > TIE && s < 1.0 - TIE;
    }
    // endpoint of [c,d] lying inside the open segment
    if (o1 == 0 && point_in_open_segment(c, a, b)) return true;
    if (o2 == 0 && point_in_open_segment(d, a, b)) return true;
    return false;
}

namespace {

template <size_t N>
bool slab_clip(const std::array<double, N>& a, const std::array<double, N>& b,
               const std::array<double, N>& lo, const std::array<double, N>& hi) {
    double tmin = 0.0, tmax = 1.0;
    for (size_t i = 0; i < N; ++i) {
        double d = b[i] - a[i];
        if (std::abs(d) < TIE) {
            if (a[i] < lo[i] - TIE || a[i] > hi[i] + TIE) return false;
            continue;
        }
        double t0 = (lo[i] - a[i]) / d;
        double t1 = (hi[i] - a[i]) / d;
        if (t0 > t1) std::swap(t0, t1);
        tmin = std::max(tmin, t0);
        tmax = std::min(tmax, t1);
        if (tmin > tmax + TIE) return false;
    }
    return true;
}

}  // namespace

bool segment_intersects_box(const Vec2& a, const Vec2& b, const Vec2& lo, const Vec2& hi) {
    return slab_clip<2>(a, b, lo, hi);
}

bool segment_intersects_box(const Vec3& a, const Vec3& b, const Vec3& lo, const Vec3& hi) {
    return slab_clip<3>(a, b, lo, hi);
}

bool point_in_box(const Vec2& p, const Vec2& lo, const Vec2& hi) {
    return p[0] >= lo[0] - TIE && p[0] <= hi[0] + TIE && p[1] >= lo[1] - TIE &&
           p[1] <= hi[1] + TIE;
}

bool point_in_box(const Vec3& p, const Vec3& lo, const Vec3& hi) {
    for (int i = 0; i < 3; ++i)
        if (p[i] < lo[i] - TIE || p[i] > hi[i] + TIE) return false;
    return true;
}

double point_box_distance(const Vec2& p, const Vec2& lo, const Vec2& hi) {
    double d2 = 0;
    for (int i = 0; i < 2; ++i) {
        double d = std::max({lo[i] - p[i], 0.0, p[i] - hi[i]});
        d2 += d * d;
    }
    return std::sqrt(d2);
}

double point_box_distance(const Vec3& p, const Vec3& lo, const Vec3& hi) {
    double d2 = 0;
    for (int i = 0; i < 3; ++i) {
        double d = std::max({lo[i] - p[i], 0.0, p[i] - hi[i]});
        d2 += d * d;
    }
    return std::sqrt(d2);
}

bool triangle_intersects_box(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& lo,
                             const Vec2& hi) {
    // SAT in the plane: box axes plus the three edge normals
    const Vec2 pts[3] = {a, b, c};
    for (int axis = 0; axis < 2; ++axis) {
        double mn = std::min({a[axis], b[axis], c[axis]});
        double mx = std::max({a[axis], b[axis], c[axis]});
        if (mx < lo[axis] - TIE || mn > hi[axis] + TIE) return false;
    }
    Vec2 corners[4] = {{lo[0], lo[1]}, {hi[0], lo[1]}, {hi[0], hi[1]}, {lo[0], hi[1]}};
    for (int e = 0; e < 3; ++e) {
        const Vec2& p = pts[e];
        const Vec2& q = pts[(e + 1) % 3];
        Vec2 normal = {-(q[1] - p[1]), q[0] - p[0]};
        double tmin = 1e300, tmax = -1e300;
        for (const Vec2& v : pts) {
            double proj = normal[0] * v[0] + normal[1] * v[1];
            tmin = std::min(tmin, proj);
            tmax = std::max(tmax, proj);
        }
        double bmin = 1e300, bmax = -1e300;
        for (const Vec2& v : corners) {
            double proj = normal[0] * v[0] + normal[1] * v[1];
            bmin = std::min(bmin, proj);
            bmax = std::max(bmax, proj);
        }
        if (tmax < bmin - TIE || tmin > bmax + TIE) return false;
    }
    return true;
}

namespace {

Vec3 sub3(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool axis_separates(const Vec3& axis, const Vec3 tri[3], const Vec3& half) {
    double len2 = dot3(axis, axis);
    if (len2 < TIE * TIE) return false;
    double tmin = 1e300, tmax = -1e300;
    for (int i = 0; i < 3; ++i) {
        double p = dot3(axis, tri[i]);
        tmin = std::min(tmin, p);
        tmax = std::max(tmax, p);
    }
    double r = half[0] * std::abs(axis[0]) + half[1] * std::abs(axis[1]) +
               half[2] * std::abs(axis[2]);
    return tmin > r + TIE || tmax < -r - TIE;
}

}  // namespace

bool triangle_intersects_box(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& lo,
                             const Vec3& hi) {
    Vec3 center = {(lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2, (lo[2] + hi[2]) / 2};
    Vec3 half = {(hi[0] - lo[0]) / 2, (hi[1] - lo[1]) / 2, (hi[2] - lo[2]) / 2};
    Vec3 tri[3] = {sub3(a, center), sub3(b, center), sub3(c, center)};
    Vec3 edges[3] = {sub3(tri[1], tri[0]), sub3(tri[2], tri[1]), sub3(tri[0], tri[2])};

    for (int axis = 0; axis < 3; ++axis) {
        double mn = std::min({tri[0][axis], tri[1][axis], tri[2][axis]});
        double mx = std::max({tri[0][axis], tri[1][axis], tri[2][axis]});
        if (mn > half[axis] + TIE || mx < -half[axis] - TIE) return false;
    }
    if (axis_separates(cross3(edges[0], edges[1]), tri, half)) return false;
    const Vec3 box_axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const auto& u : box_axes)
        for (const auto& e : edges)
            if (axis_separates(cross3(u, e), tri, half)) return false;
    return true;
}

bool point_in_open_triangle(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
    int o1 = sign_of(orient2d(a, b, p));
    int o2 = sign_of(orient2d(b, c, p));
    int o3 = sign_of(orient2d(c, a, p));
    return (o1 > 0 && o2 > 0 && o3 > 0) || (o1 < 0 && o2 < 0 && o3 < 0);
}

namespace {

struct TriFrame {
    Vec3 origin;
    Vec3 normal;
    // in-plane axes for 2-D reduction
    Vec3 u, v;
    Vec2 project(const Vec3& p) const {
        Vec3 d = sub3(p, origin);
        return {dot3(d, u), dot3(d, v)};
    }
};

TriFrame frame_of(const Vec3& a, const Vec3& b, const Vec3& c) {
    TriFrame f;
    f.origin = a;
    f.normal = cross3(sub3(b, a), sub3(c, a));
    Vec3 e = sub3(b, a);
    double el = std::sqrt(dot3(e, e));
    f.u = {e[0] / el, e[1] / el, e[2] / el};
    Vec3 w = cross3(f.normal, f.u);
    double wl = std::sqrt(dot3(w, w));
    f.v = {w[0] / wl, w[1] / wl, w[2] / wl};
    return f;
}

bool barycentric_interior(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
    return point_in_open_triangle(p, a, b, c);
}

// Candidate intersection points of segment [p, q] with the plane of the
// frame's triangle, in the triangle's 2-D coordinates. Coplanar segments
// report both endpoints.
int plane_candidates(const TriFrame& f, const Vec3& p, const Vec3& q, Vec2 out[2]) {
    double dp = dot3(f.normal, sub3(p, f.origin));
    double dq = dot3(f.normal, sub3(q, f.origin));
    double scale = std::sqrt(dot3(f.normal, f.normal));
    int sp = sign_of(dp / scale);
    int sq = sign_of(dq / scale);
    if (sp == 0 && sq == 0) {
        out[0] = f.project(p);
        out[1] = f.project(q);
        return 2;
    }
    if (sp == 0) {
        out[0] = f.project(p);
        return 1;
    }
    if (sq == 0) {
        out[0] = f.project(q);
        return 1;
    }
    if (sp == sq) return 0;
    double t = dp / (dp - dq);
    Vec3 x = {p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]), p[2] + t * (q[2] - p[2])};
    out[0] = f.project(x);
    return 1;
}

}  // namespace

bool segment_meets_open_triangle(const Vec3& p, const Vec3& q, const Vec3& a, const Vec3& b,
                                 const Vec3& c) {
    TriFrame f = frame_of(a, b, c);
    Vec2 a2 = f.project(a), b2 = f.project(b), c2 = f.project(c);
    Vec2 cand[2];
    int ncand = plane_candidates(f, p, q, cand);
    if (ncand == 0) return false;
    if (ncand == 1) return barycentric_interior(cand[0], a2, b2, c2);
    // coplanar: clip the segment to the closed triangle; it meets the open
    // interior iff the clipped part is nonempty with interior midpoint
    for (int i = 0; i < 2; ++i)
        if (barycentric_interior(cand[i], a2, b2, c2)) return true;
    double tmin = 0.0, tmax = 1.0;
    Vec2 dir = {cand[1][0] - cand[0][0], cand[1][1] - cand[0][1]};
    const Vec2 tri2[3] = {a2, b2, c2};
    double tri_orient = orient2d(a2, b2, c2) > 0 ? 1.0 : -1.0;
    for (int e = 0; e < 3 && tmin <= tmax; ++e) {
        const Vec2& r = tri2[e];
        const Vec2& s = tri2[(e + 1) % 3];
        // inside half-plane: tri_orient * orient2d(r, s, p) >= 0
        double f0 = tri_orient * orient2d(r, s, cand[0]);
        double fd = tri_orient * (orient2d(r, s, {cand[0][0] + dir[0], cand[0][1] + dir[1]}) -
                                  orient2d(r, s, cand[0]));
        if (std::abs(fd) < TIE) {
            if (f0 < -TIE) return false;  // parallel and outside
            continue;
        }
        double t_cross = -f0 / fd;
        if (fd > 0)
            tmin = std::max(tmin, t_cross);
        else
            tmax = std::min(tmax, t_cross);
    }
    if (tmin > tmax - TIE) return false;
    double tm = (tmin + tmax) / 2;
    Vec2 mid = {cand[0][0] + tm * dir[0], cand[0][1] + tm * dir[1]};
    return barycentric_interior(mid, a2, b2, c2);
}

bool triangle_meets_open_triangle(const Vec3& p, const Vec3& q, const Vec3& r, const Vec3& a,
                                  const Vec3& b, const Vec3& c) {
    if (segment_meets_open_triangle(p, q, a, b, c)) return true;
    if (segment_meets_open_triangle(q, r, a, b, c)) return true;
    if (segment_meets_open_triangle(r, p, a, b, c)) return true;
    // coplanar containment has no edge crossing the open part: probe the
    // centroids both ways
    Vec3 pqr_centroid = {(p[0] + q[0] + r[0]) / 3, (p[1] + q[1] + r[1]) / 3,
                         (p[2] + q[2] + r[2]) / 3};
    Vec3 abc_centroid = {(a[0] + b[0] + c[0]) / 3, (a[1] + b[1] + c[1]) / 3,
                         (a[2] + b[2] + c[2]) / 3};
    if (segment_meets_open_triangle(pqr_centroid, pqr_centroid, a, b, c)) return true;
    if (segment_meets_open_triangle(abc_centroid, abc_centroid, p, q, r) &&
        segment_meets_open_triangle(abc_centroid, abc_centroid, a, b, c))
        return true;
    // (a,b,c) could also pierce (p,q,r) through its interior with all of
    // (p,q,r)'s edges missing the open part of (a,b,c); then an edge of
    // (a,b,c) crosses the plane inside (p,q,r), reaching interior points of
    // (a,b,c) unless the crossing sits exactly on its boundary
    TriFrame f = frame_of(a, b, c);
    Vec2 a2 = f.project(a), b2 = f.project(b), c2 = f.project(c);
    const Vec3 other[3] = {p, q, r};
    for (int e = 0; e < 3; ++e) {
        Vec2 cand[2];
        int n = plane_candidates(f, other[e], other[(e + 1) % 3], cand);
        for (int i = 0; i < n; ++i)
            if (barycentric_interior(cand[i], a2, b2, c2)) return true;
    }
    return false;
}

double smallest_enclosing_radius(const Vec2& a, const Vec2& b, const Vec2& c) {
    double ab = squared_distance(a, b);
    double ac = squared_distance(a, c);
    double bc = squared_distance(b, c);
    // obtuse or right: the longest side is a diameter
    if (ab + ac <= bc || ab + bc <= ac || ac + bc <= ab)
        return std::sqrt(std::max({ab, ac, bc})) / 2.0;
    double cross = orient2d(a, b, c);
    return std::sqrt(ab * ac * bc) / (2.0 * std::abs(cross));
}

}  // namespace sepchk::geom
