#ifndef SEPCHK_GEOMETRY_HPP
#define SEPCHK_GEOMETRY_HPP

#include <array>

namespace sepchk::geom {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

/// Sign policy: values within TIE of zero are treated as zero, so touching
/// configurations classify as degenerate rather than flipping sign with
/// rounding. Corpus coordinates keep true signs far above this threshold.
inline constexpr double TIE = 1e-12;

int sign_of(double v);

/// Twice the signed area of triangle (a, b, c).
double orient2d(const Vec2& a, const Vec2& b, const Vec2& c);

bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b);        // closed
bool point_in_open_segment(const Vec2& p, const Vec2& a, const Vec2& b);   // endpoints excluded

/// Does segment [c, d] meet the open segment (a, b)? Shared endpoints do
/// not count; collinear overlaps and interior touches do.
bool segment_meets_open_segment(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// Closed segment vs closed axis-aligned box, 2-D and 3-D (slab clipping).
bool segment_intersects_box(const Vec2& a, const Vec2& b, const Vec2& lo, const Vec2& hi);
bool segment_intersects_box(const Vec3& a, const Vec3& b, const Vec3& lo, const Vec3& hi);

/// Closed triangle vs closed axis-aligned box.
bool triangle_intersects_box(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& lo,
                             const Vec2& hi);
/// Separating-axis test (box axes, triangle normal, nine edge cross axes).
bool triangle_intersects_box(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& lo,
                             const Vec3& hi);

bool point_in_box(const Vec2& p, const Vec2& lo, const Vec2& hi);
bool point_in_box(const Vec3& p, const Vec3& lo, const Vec3& hi);

/// Euclidean distance from a point to a closed axis-aligned box.
double point_box_distance(const Vec2& p, const Vec2& lo, const Vec2& hi);
double point_box_distance(const Vec3& p, const Vec3& lo, const Vec3& hi);

double squared_distance(const Vec2& a, const Vec2& b);
double squared_distance(const Vec3& a, const Vec3& b);

/// Does point p lie strictly inside triangle (a, b, c) in the plane?
bool point_in_open_triangle(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c);

/// Does segment [p, q] meet the open interior (relative to its plane) of
/// triangle (a, b, c) in 3-space? Touches confined to the triangle boundary
/// do not count.
bool segment_meets_open_triangle(const Vec3& p, const Vec3& q, const Vec3& a, const Vec3& b,
                                 const Vec3& c);

/// Does triangle (p, q, r) meet the open interior of triangle (a, b, c)?
bool triangle_meets_open_triangle(const Vec3& p, const Vec3& q, const Vec3& r, const Vec3& a,
                                  const Vec3& b, const Vec3& c);

/// Radius of the smallest ball enclosing three points in the plane.
double smallest_enclosing_radius(const Vec2& a, const Vec2& b, const Vec2& c);

}  // namespace sepchk::geom

#endif
