#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sepchk/homology.hpp"
#include "sepchk/nerve.hpp"

using namespace sepchk;

namespace {

PointCloud circle_sample(int n, double r) {
    PointCloud cloud;
    for (int i = 0; i < n; ++i) {
        double a = 2.0 * std::numbers::pi * i / n;
        cloud.points.push_back({r * std::cos(a), r * std::sin(a)});
        cloud.labels.push_back("");
    }
    return cloud;
}

}  // namespace

TEST_CASE("build_nerve: two balls, disjoint or touching") {
    PointCloud cloud;
    cloud.points = {{0, 0}, {3, 0}};
    NerveComplex apart = build_nerve(cloud, 1.0, 2, NerveMode::cech);
    CHECK(apart.complex.simplex_count(0) == 2);
    CHECK(apart.complex.simplex_count(1) == 0);

    cloud.points = {{0, 0}, {1, 0}};
    NerveComplex touching = build_nerve(cloud, 1.0, 2, NerveMode::cech);
    CHECK(touching.complex.simplex_count(1) == 1);
}

TEST_CASE("build_nerve: equilateral triangle separates cech from rips") {
    PointCloud cloud;
    cloud.points = {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
    // circumradius 1/sqrt(3) ~ 0.577 > 0.55, but pairwise distances are 1 <= 1.1
    NerveComplex cech = build_nerve(cloud, 0.55, 2, NerveMode::cech);
    CHECK(cech.complex.simplex_count(1) == 3);
    CHECK(cech.complex.simplex_count(2) == 0);
    NerveComplex rips = build_nerve(cloud, 0.55, 2, NerveMode::rips);
    CHECK(rips.complex.simplex_count(2) == 1);
    // at a slightly larger scale the cech triangle appears too
    CHECK(build_nerve(cloud, 0.58, 2, NerveMode::cech).complex.simplex_count(2) == 1);
}

TEST_CASE("alpha, direct reduction and dense nerve ranks all agree") {
    PointCloud cloud = circle_sample(60, 1.0);
    for (double eps : {0.081, 0.153, 0.307, 0.811}) {
        NerveComplex nerve = build_nerve(cloud, eps, 2, NerveMode::cech);
        int dense_h1 = cohomology_basis(nerve.complex, 1).rank();
        CHECK(cech_rank_at_scale(cloud, eps, 1) == dense_h1);
        CHECK(cech_rank_direct(cloud, eps, 1) == dense_h1);
        int dense_h0 = cohomology_basis(nerve.complex, 0).rank();
        CHECK(cech_rank_at_scale(cloud, eps, 0) == dense_h0);
    }
    // a denser structured sample, alpha versus direct reduction only; the
    // direct route's fill-in keeps the scales moderate here
    PointCloud mid = circle_sample(400, 1.0);
    for (double eps : {0.021, 0.047, 0.083})
        CHECK(cech_rank_at_scale(mid, eps, 1) == cech_rank_direct(mid, eps, 1));
}

TEST_CASE("circle sample has a rank-one window") {
    PointCloud cloud = circle_sample(100, 1.0);
    CHECK(cech_rank_at_scale(cloud, 0.15, 1) == 1);
    CHECK(cech_rank_at_scale(cloud, 0.12, 1) == 1);
    CHECK(stability_check(cloud, 0.12, 0.18, 1));
    // below the sample spacing everything is dust
    CHECK(cech_rank_at_scale(cloud, 0.01, 1) == 0);
    CHECK_FALSE(stability_check(cloud, 0.01, 0.15, 1));
    // single point: stable rank zero at any scales
    PointCloud lonely;
    lonely.points = {{0, 0}};
    CHECK(stability_check(lonely, 0.1, 0.5, 1));
}

TEST_CASE("warsaw sample: density contract and labeled pieces") {
    PointCloud cloud = warsaw_circle_sample(2000, 0.05);
    REQUIRE(cloud.size() >= 2000);
    double bound = 0.05 * 0.05 / 2;
    int u_count = 0;
    for (int i = 1; i < cloud.size(); ++i) {
        if (cloud.labels[i] != "sine" && cloud.labels[i] != "U") continue;
        if (cloud.labels[i - 1] != "sine" && cloud.labels[i - 1] != "U") continue;
        double dx = cloud.points[i][0] - cloud.points[i - 1][0];
        double dy = cloud.points[i][1] - cloud.points[i - 1][1];
        CHECK(std::sqrt(dx * dx + dy * dy) < bound);
    }
    for (int i = 0; i < cloud.size(); ++i)
        if (cloud.labels[i] == "U") u_count++;
    CHECK(u_count > 0);

    // removing U leaves three pieces at a scale below the bridging distance
    PointCloud trimmed = remove_labeled(cloud, "U");
    CHECK(cech_rank_at_scale(trimmed, 0.012, 0) == 3);
}

TEST_CASE("warsaw sample: rank window and its collapse without U") {
    PointCloud cloud = warsaw_circle_sample(2000, 0.05);
    CHECK(cech_rank_at_scale(cloud, 0.030, 1) == 1);
    CHECK(stability_check(cloud, 0.030, 0.034, 1));
    PointCloud trimmed = remove_labeled(cloud, "U");
    CHECK(cech_rank_at_scale(trimmed, 0.030, 1) == 0);
    CHECK(cech_rank_at_scale(trimmed, 0.034, 1) == 0);
}

TEST_CASE("nerve rejects bad inputs") {
    PointCloud cloud;
    cloud.points = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(build_nerve(cloud, 1.0, 2, NerveMode::cech), std::invalid_argument);
    PointCloud ok;
    ok.points = {{0, 0}};
    CHECK_THROWS_AS(build_nerve(ok, -1.0, 2, NerveMode::cech), std::invalid_argument);
    CHECK_THROWS_AS(cech_rank_at_scale(ok, 0.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(stability_check(ok, 0.5, 0.2, 1), std::invalid_argument);
    CHECK_THROWS_AS(warsaw_circle_sample(10, 0.05), std::invalid_argument);
}

TEST_CASE("max_dim one builds the graph skeleton only") {
    PointCloud cloud;
    cloud.points = {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
    NerveComplex skeleton = build_nerve(cloud, 0.9, 1, NerveMode::cech);
    CHECK(skeleton.complex.simplex_count(1) == 3);
    CHECK(skeleton.complex.simplex_count(2) == 0);
}

TEST_CASE("ladder at the coverage threshold: alpha and direct routes agree") {
    // two rails of points at gap g, rung spacing s, scale eps = 0.5:
    // rails connect for g <= 2 eps, but the squares are only covered
    // (and the sliver triangles only enter the nerve) when
    // g <= 2 sqrt(eps^2 - (s/2)^2). Straddle that threshold.
    double s = 0.2, eps = 0.5;
    auto ladder = [&](double g) {
        PointCloud cloud;
        for (int k = 0; k <= 20; ++k) {
            cloud.points.push_back({0.0, k * s});
            cloud.points.push_back({g, k * s});
        }
        cloud.labels.assign(cloud.points.size(), "");
        return cloud;
    };
    double covered = 2 * std::sqrt(eps * eps - (s / 2) * (s / 2));  // ~0.9798
    for (double g : {0.97, 0.975, covered + 1e-4, 0.985, 0.99, 0.9999}) {
        PointCloud cloud = ladder(g);
        int via_alpha = cech_rank_at_scale(cloud, eps, 1);
        int via_direct = cech_rank_direct(cloud, eps, 1);
        CHECK(via_alpha == via_direct);
    }
    // below the threshold every square fills; above, every square is a hole
    CHECK(cech_rank_at_scale(ladder(0.97), eps, 1) == 0);
    CHECK(cech_rank_at_scale(ladder(0.99), eps, 1) == 20);
}
