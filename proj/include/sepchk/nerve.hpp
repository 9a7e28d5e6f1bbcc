#ifndef SEPCHK_NERVE_HPP
#define SEPCHK_NERVE_HPP

#include <array>
#include <string>
#include <vector>

#include "sepchk/simplicial.hpp"

namespace sepchk {

/// Finite planar point sample with optional per-point tags.
struct PointCloud {
    std::vector<std::array<double, 2>> points;
    std::vector<std::string> labels;  // empty or one tag per point

    int size() const { return static_cast<int>(points.size()); }
};

enum class NerveMode { cech, rips };

/// Nerve of the closed eps-ball cover at a fixed scale, materialized as a
/// simplicial complex. Built up to dimension two; a k-simplex is present in
/// cech mode iff the smallest ball enclosing its points has radius <= eps,
/// and in rips mode iff all pairwise distances are <= 2 eps.
struct NerveComplex {
    SimplicialComplex complex;
    double scale = 0;
    NerveMode mode = NerveMode::cech;
};

NerveComplex build_nerve(const PointCloud& cloud, double eps, int max_dim, NerveMode mode);

/// dim H^k of the cech nerve at scale eps, k in {0, 1}. The k = 1 rank is
/// computed on the alpha complex of the sample, which carries the homotopy
/// type of the union of eps-balls and hence of the nerve, but stays linear
/// in the number of points; that is what makes the dense corpus samples
/// tractable. Ties against the scale are broken by a deterministic point
/// jitter of at most 1e-8.
int cech_rank_at_scale(const PointCloud& cloud, double eps, int k);

/// Same rank computed by direct GF(2) column reduction over the nerve's
/// triangles. Exact on the unjittered sample; feasible for moderate clouds
/// only. Kept as the independent cross-check route for the alpha path.
int cech_rank_direct(const PointCloud& cloud, double eps, int k);

/// Rank of the rips nerve; used by the --mode flag.
int rips_rank_at_scale(const PointCloud& cloud, double eps, int k);

/// Sample of the sine arc {(x, sin(1/x)) : x in [x_min, 1]}, the limit
/// segment {0} x [-1, 1], and a return arc joining the end of the sine arc
/// to a vertical line at distance x_min left of the segment. Consecutive
/// samples along the sine arc are closer than x_min^2/2. Labels: "sine",
/// "limit", "return", with the open sub-arc x in (0.35, 0.55) tagged "U".
PointCloud warsaw_circle_sample(int m, double x_min);

PointCloud remove_labeled(const PointCloud& cloud, const std::string& label);

/// True iff cech_rank_at_scale agrees at the two scales. Requires e1 < e2.
bool stability_check(const PointCloud& cloud, double e1, double e2, int k);

}  // namespace sepchk

#endif
