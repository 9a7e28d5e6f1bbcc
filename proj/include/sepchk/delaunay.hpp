#ifndef SEPCHK_DELAUNAY_HPP
#define SEPCHK_DELAUNAY_HPP

#include <array>
#include <vector>

namespace sepchk {

/// Planar Delaunay triangulation, incremental Bowyer-Watson. Callers must
/// provide points in general position (no exact duplicates; ties broken by
/// the caller, e.g. with a deterministic jitter).
struct DelaunayTriangulation {
    std::vector<std::array<int, 3>> triangles;  // ccw vertex triples
};

DelaunayTriangulation delaunay_2d(const std::vector<std::array<double, 2>>& points);

}  // namespace sepchk

#endif
