#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sepchk/geometry.hpp"
#include "sepchk/separation.hpp"

using namespace sepchk;

namespace {

constexpr double TAU = 2.0 * std::numbers::pi;

PlMap circle_map(int k, double r) {
    PlMap f;
    f.domain = circle(k);
    f.ambient_dim = 2;
    for (int i = 0; i < k; ++i)
        f.coords.push_back({r * std::cos(TAU * i / k), r * std::sin(TAU * i / k), 0});
    return f;
}

PlMap projected_circle_map(int k, double r) {
    PlMap f = circle_map(k, r);
    for (auto& p : f.coords) p[1] = 0;
    return f;
}

PlMap theta_map(int s, double r) {
    PlMap f;
    f.domain = theta_graph(s);
    f.ambient_dim = 2;
    f.coords.assign(f.domain.vertex_count(), {0, 0, 0});
    f.coords[0] = {-r, 0, 0};
    f.coords[1] = {r, 0, 0};
    int next = 2;
    for (int arc = 0; arc < 3; ++arc)
        for (int t = 1; t < s; ++t) {
            double frac = static_cast<double>(t) / s;
            double a = std::numbers::pi * (1.0 - frac);
            if (arc == 0)
                f.coords[next++] = {r * std::cos(a), r * std::sin(a), 0};
            else if (arc == 1)
                f.coords[next++] = {-r + 2 * r * frac, 0, 0};
            else
                f.coords[next++] = {r * std::cos(a), -r * std::sin(a), 0};
        }
    return f;
}

PlMap whisker_map(int k, int w, double r, double tip) {
    PlMap f;
    f.domain = circle_with_whisker(k, w);
    f.ambient_dim = 2;
    for (int i = 0; i < k; ++i)
        f.coords.push_back({r * std::cos(TAU * i / k), r * std::sin(TAU * i / k), 0});
    for (int i = 0; i < w; ++i) f.coords.push_back({r + (tip - r) * (i + 1) / w, 0, 0});
    return f;
}

PlMap torus_map(int a, int b, double big, double small) {
    PlMap f;
    f.domain = torus(a, b);
    f.ambient_dim = 3;
    f.coords.assign(f.domain.vertex_count(), {0, 0, 0});
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            double u = TAU * i / a, v = TAU * j / b;
            f.coords[i * b + j] = {(big + small * std::cos(v)) * std::cos(u),
                                   (big + small * std::cos(v)) * std::sin(u),
                                   small * std::sin(v)};
        }
    return f;
}

GridSpec planar_grid(double extent, double h) {
    GridSpec spec;
    spec.ambient_dim = 2;
    spec.lo = {-extent, -extent, 0};
    spec.hi = {extent, extent, 0};
    spec.h = h;
    return spec;
}

}  // namespace

TEST_CASE("injectivity: embeddings, projections, junction edges") {
    PlMap round = circle_map(16, 0.8);
    for (const auto& e : round.domain.simplices(1)) CHECK(check_injectivity_on_U(round, {e}));

    PlMap flat = projected_circle_map(16, 1.0);
    for (const auto& e : flat.domain.simplices(1))
        CHECK_FALSE(check_injectivity_on_U(flat, {e}));

    PlMap th = theta_map(8, 0.8);
    CHECK(check_injectivity_on_U(th, {{10, 11}}));  // middle of the bar
    CHECK(check_injectivity_on_U(th, {{3, 4}}));    // upper arc interior

    // degenerate image
    PlMap degenerate = circle_map(4, 0.5);
    degenerate.coords[1] = degenerate.coords[0];
    CHECK_THROWS_AS(check_injectivity_on_U(degenerate, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("injectivity on the embedded torus") {
    PlMap t = torus_map(8, 8, 1.5, 0.5);
    CHECK(check_injectivity_on_U(t, {t.domain.simplices(2)[0]}));
    CHECK(check_injectivity_on_U(t, {t.domain.simplices(2)[77]}));

    // collapse the torus onto a plane: the sheets overlap
    PlMap squashed = t;
    for (auto& p : squashed.coords) p[2] = 0;
    int hits = 0;
    for (const auto& cell : squashed.domain.simplices(2))
        if (!check_injectivity_on_U(squashed, {cell})) hits++;
    CHECK(hits == squashed.domain.simplex_count(2));
}

TEST_CASE("rasterize: single points cover 1, 2 or 4 cells") {
    GridSpec spec;
    spec.ambient_dim = 2;
    spec.lo = {0, 0, 0};
    spec.hi = {1, 1, 0};
    spec.h = 0.25;
    auto raster_point = [&spec](double x, double y) {
        PlMap f;
        f.domain = SimplicialComplex::from_top_simplices(1, {{0}});
        f.ambient_dim = 2;
        f.coords = {{x, y, 0}};
        return rasterize(f, spec).occupied_count();
    };
    CHECK(raster_point(0.30, 0.30) == 1);
    CHECK(raster_point(0.50, 0.30) == 2);  // on one gridline
    CHECK(raster_point(0.50, 0.50) == 4);  // on a lattice corner
}

TEST_CASE("rasterize: axis-aligned segment is a one-cell-thick run") {
    PlMap f;
    f.domain = SimplicialComplex::from_top_simplices(2, {{0, 1}});
    f.ambient_dim = 2;
    f.coords = {{0.30, 0.375, 0}, {1.30, 0.375, 0}};
    GridSpec spec;
    spec.ambient_dim = 2;
    spec.lo = {0, 0, 0};
    spec.hi = {1.5, 0.75, 0};
    spec.h = 0.25;
    Grid g = rasterize(f, spec);
    CHECK(g.occupied_count() == 5);
    for (int i = 0; i < g.nx(); ++i)
        for (int j = 0; j < g.ny(); ++j)
            if (g.occupied(g.index(i, j))) CHECK(j == 1);
}

TEST_CASE("rasterize: circle ring against a dense sampling oracle") {
    PlMap f = circle_map(64, 0.8);
    Grid g = rasterize(f, planar_grid(1.0, 0.05));

    // dense samples of the polygon image
    std::vector<std::array<double, 2>> samples;
    for (const auto& e : f.domain.simplices(1)) {
        auto& a = f.coords[e[0]];
        auto& b = f.coords[e[1]];
        for (int t = 0; t < 100; ++t) {
            double u = static_cast<double>(t) / 100;
            samples.push_back({a[0] + u * (b[0] - a[0]), a[1] + u * (b[1] - a[1])});
        }
    }
    double delta = 2 * 0.8 * std::sin(std::numbers::pi / 64) / 100;  // sample spacing
    for (int i = 0; i < g.nx(); ++i)
        for (int j = 0; j < g.ny(); ++j) {
            double best = 1e300;
            for (const auto& s : samples) {
                sepchk::geom::Vec2 lo2{g.cell_lo(i, j)[0], g.cell_lo(i, j)[1]};
                sepchk::geom::Vec2 hi2{g.cell_hi(i, j)[0], g.cell_hi(i, j)[1]};
                best = std::min(best, sepchk::geom::point_box_distance({s[0], s[1]}, lo2, hi2));
                if (best == 0) break;
            }
            if (best < 1e-12) CHECK(g.occupied(g.index(i, j)));
            if (g.occupied(g.index(i, j))) CHECK(best <= delta / 2 + 1e-9);
        }
}

TEST_CASE("complement components: empty, ring, strip") {
    Grid empty(planar_grid(1.0, 0.25));
    ComponentLabeling none = complement_components(empty);
    CHECK(none.count == 1);
    CHECK(none.infinity_id == 0);

    PlMap f = circle_map(64, 0.8);
    Grid ring = rasterize(f, planar_grid(1.0, 0.05));
    ComponentLabeling two = complement_components(ring);
    CHECK(two.count == 2);
    CHECK(two.count == oracle::flood_fill_components(ring));

    PlMap flat = projected_circle_map(32, 1.0);
    Grid strip = rasterize(flat, planar_grid(1.5, 0.05));
    ComponentLabeling one = complement_components(strip);
    CHECK(one.count == 1);
    CHECK(one.count == oracle::flood_fill_components(strip));
}

TEST_CASE("incident components and closure on the circle") {
    PlMap f = circle_map(64, 0.8);
    Grid g = rasterize(f, planar_grid(1.0, 0.05));
    ComponentLabeling labeling = complement_components(g);
    IncidenceReport report = incident_components(g, labeling, f, {{0, 1}});
    CHECK(report.incident_ids.size() == 2);
    CHECK(report.samples >= 32);
    CHECK(report.closure_pass);
    CHECK(report.samples_pass == report.samples);
}

TEST_CASE("theta image: three components, two incident at the bar") {
    PlMap f = theta_map(16, 0.8);
    Grid g = rasterize(f, planar_grid(1.0, 0.05));
    ComponentLabeling labeling = complement_components(g);
    CHECK(labeling.count == 3);
    CHECK(labeling.count == oracle::flood_fill_components(g));
    // middle edge of the bar: arc 1 intermediates are ids 17..31
    IncidenceReport report = incident_components(g, labeling, f, {{24, 25}});
    CHECK(report.incident_ids.size() == 2);
    CHECK(report.closure_pass);
    // neither incident component is the outside
    for (int id : report.incident_ids) CHECK(id != labeling.infinity_id);
}

TEST_CASE("whisker edge sees a single incident component") {
    PlMap f = whisker_map(12, 2, 0.8, 1.2);
    Grid g = rasterize(f, planar_grid(1.5, 0.05));
    ComponentLabeling labeling = complement_components(g);
    CHECK(labeling.count == 2);
    IncidenceReport report = incident_components(g, labeling, f, {{12, 13}});
    CHECK(report.incident_ids.size() == 1);
    CHECK(report.incident_ids[0] == labeling.infinity_id);
    CHECK_FALSE(report.closure_pass);
}

TEST_CASE("incidence throws when U rasterizes to nothing") {
    PlMap f = circle_map(64, 0.8);
    GridSpec far;  // a grid that misses the image entirely
    far.ambient_dim = 2;
    far.lo = {10, 10, 0};
    far.hi = {11, 11, 0};
    far.h = 0.25;
    Grid g(far);
    ComponentLabeling labeling = complement_components(g);
    CHECK_THROWS_AS(incident_components(g, labeling, f, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("extension coverage: disk cone covers the bounded side") {
    PlMap f = circle_map(64, 0.8);
    Grid g = rasterize(f, planar_grid(1.0, 0.05));
    ComponentLabeling labeling = complement_components(g);
    IncidenceReport inc = incident_components(g, labeling, f, {{0, 1}});
    REQUIRE(inc.incident_ids.size() == 2);

    auto [hat, hat_inc] = cone(circle(64));
    PlMap big_f;
    big_f.domain = hat;
    big_f.ambient_dim = 2;
    big_f.coords = f.coords;
    big_f.coords.push_back({0, 0, 0});

    CoverageVerdict verdict =
        extension_covers(big_f, f, g, labeling, {inc.incident_ids[0], inc.incident_ids[1]});
    REQUIRE(verdict.covered_id.has_value());
    CHECK(*verdict.covered_id != labeling.infinity_id);
    // exact fractions: all of the bounded interior, none of the unbounded
    bool v1_is_infinity = inc.incident_ids[0] == labeling.infinity_id;
    CHECK((v1_is_infinity ? verdict.v2_fraction : verdict.v1_fraction) == 1.0);
    CHECK((v1_is_infinity ? verdict.v1_fraction : verdict.v2_fraction) == 0.0);
}

TEST_CASE("extension coverage: collapsed annulus covers neither side") {
    PlMap f = circle_map(24, 0.8);
    Grid g = rasterize(f, planar_grid(1.0, 0.05));
    ComponentLabeling labeling = complement_components(g);
    IncidenceReport inc = incident_components(g, labeling, f, {{0, 1}});
    REQUIRE(inc.incident_ids.size() == 2);

    PlMap big_f;
    big_f.domain = annulus(24);
    big_f.ambient_dim = 2;
    big_f.coords = f.coords;
    for (int i = 0; i < 24; ++i) big_f.coords.push_back(f.coords[i]);  // F(x, t) = f(x)

    CoverageVerdict verdict =
        extension_covers(big_f, f, g, labeling, {inc.incident_ids[0], inc.incident_ids[1]});
    CHECK_FALSE(verdict.covered_id.has_value());
    CHECK(verdict.v1_fraction < 1.0);
    CHECK(verdict.v2_fraction < 1.0);

    // trivial extension on the same space also covers neither
    CoverageVerdict same = extension_covers(f, f, g, labeling,
                                            {inc.incident_ids[0], inc.incident_ids[1]});
    CHECK_FALSE(same.covered_id.has_value());

    // inconsistent extension is rejected
    PlMap broken = big_f;
    broken.coords[0][0] += 0.5;
    CHECK_THROWS_AS(
        extension_covers(broken, f, g, labeling, {inc.incident_ids[0], inc.incident_ids[1]}),
        std::invalid_argument);
}

TEST_CASE("duality at raster scale: ring, strip, theta") {
    PlMap f = circle_map(64, 0.8);
    Grid ring = rasterize(f, planar_grid(1.0, 0.05));
    CHECK(duality_check(ring, complement_components(ring)));

    PlMap flat = projected_circle_map(32, 1.0);
    Grid strip = rasterize(flat, planar_grid(1.5, 0.05));
    CHECK(duality_check(strip, complement_components(strip)));

    PlMap th = theta_map(16, 0.8);
    Grid theta_raster = rasterize(th, planar_grid(1.0, 0.05));
    CHECK(duality_check(theta_raster, complement_components(theta_raster)));
}

TEST_CASE("torus in space: two components, both incident") {
    PlMap f = torus_map(8, 8, 1.5, 0.5);
    GridSpec spec;
    spec.ambient_dim = 3;
    spec.lo = {-2.4, -2.4, -2.4};
    spec.hi = {2.4, 2.4, 2.4};
    spec.h = 0.2;
    Grid g = rasterize(f, spec);
    ComponentLabeling labeling = complement_components(g);
    CHECK(labeling.count == 2);
    CHECK(labeling.count == oracle::flood_fill_components(g));
    IncidenceReport report = incident_components(g, labeling, f, {f.domain.simplices(2)[0]});
    CHECK(report.incident_ids.size() == 2);
    CHECK(report.closure_pass);
}

TEST_CASE("grid rejects bad boxes and leaky maps") {
    GridSpec bad = planar_grid(1.0, 0.3);  // 2.0 / 0.3 is not integral
    CHECK_THROWS_AS((void)Grid{bad}, std::invalid_argument);

    PlMap f = circle_map(8, 1.2);
    CHECK_THROWS_AS(rasterize(f, planar_grid(1.0, 0.05)), std::invalid_argument);
}

TEST_CASE("refining h keeps the image raster connected") {
    PlMap f = circle_map(24, 0.8);
    for (double h : {0.1, 0.05, 0.025}) {
        Grid g = rasterize(f, planar_grid(1.0, h));
        // flood over occupied cells with face adjacency
        long start = -1;
        for (long i = 0; i < g.cell_count() && start < 0; ++i)
            if (g.occupied(i)) start = i;
        REQUIRE(start >= 0);
        std::vector<uint8_t> seen(g.cell_count(), 0);
        std::vector<long> stack{start};
        seen[start] = 1;
        long visited = 0;
        while (!stack.empty()) {
            long cur = stack.back();
            stack.pop_back();
            visited++;
            auto [i, j, k] = g.cell_of_index(cur);
            const int di[4] = {1, -1, 0, 0};
            const int dj[4] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                int i2 = i + di[d], j2 = j + dj[d];
                if (i2 < 0 || i2 >= g.nx() || j2 < 0 || j2 >= g.ny()) continue;
                long idx = g.index(i2, j2, 0);
                if (g.occupied(idx) && !seen[idx]) {
                    seen[idx] = 1;
                    stack.push_back(idx);
                }
            }
        }
        CHECK(visited == g.occupied_count());
    }
}
