#include "sepchk/separation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "sepchk/geometry.hpp"
#include "sepchk/homology.hpp"

namespace sepchk {

using geom::Vec2;
using geom::Vec3;

namespace {

Vec2 v2(const std::array<double, 3>& p) { return {p[0], p[1]}; }
Vec3 v3(const std::array<double, 3>& p) { return {p[0], p[1], p[2]}; }

int axis_cells(double lo, double hi, double h) {
    double w = hi - lo;
    if (w <= 0 || h <= 0) throw std::invalid_argument("grid: empty box or nonpositive h");
    double n = w / h;
    long r = std::lround(n);
    if (std::abs(n - static_cast<double>(r)) > 1e-6 || r < 1)
        throw std::invalid_argument("grid: box side is not an integral number of cells");
    return static_cast<int>(r);
}

}  // namespace

Grid::Grid(const GridSpec& spec) : spec_(spec) {
    if (spec.ambient_dim != 2 && spec.ambient_dim != 3)
        throw std::invalid_argument("grid: ambient dimension must be 2 or 3");
    n_[0] = axis_cells(spec.lo[0], spec.hi[0], spec.h);
    n_[1] = axis_cells(spec.lo[1], spec.hi[1], spec.h);
    n_[2] = spec.ambient_dim == 3 ? axis_cells(spec.lo[2], spec.hi[2], spec.h) : 1;
    occupied_.assign(cell_count(), 0);
}

long Grid::cell_count() const { return static_cast<long>(n_[0]) * n_[1] * n_[2]; }

long Grid::index(int i, int j, int k) const {
    return (static_cast<long>(k) * n_[1] + j) * n_[0] + i;
}

std::array<int, 3> Grid::cell_of_index(long idx) const {
    int i = static_cast<int>(idx % n_[0]);
    int j = static_cast<int>((idx / n_[0]) % n_[1]);
    int k = static_cast<int>(idx / (static_cast<long>(n_[0]) * n_[1]));
    return {i, j, k};
}

std::array<double, 3> Grid::cell_lo(int i, int j, int k) const {
    return {spec_.lo[0] + i * spec_.h, spec_.lo[1] + j * spec_.h, spec_.lo[2] + k * spec_.h};
}

std::array<double, 3> Grid::cell_hi(int i, int j, int k) const {
    auto lo = cell_lo(i, j, k);
    return {lo[0] + spec_.h, lo[1] + spec_.h, lo[2] + spec_.h};
}

long Grid::occupied_count() const {
    long n = 0;
    for (uint8_t o : occupied_) n += o;
    return n;
}

bool Grid::on_boundary(int i, int j, int k) const {
    if (i == 0 || i == n_[0] - 1 || j == 0 || j == n_[1] - 1) return true;
    if (spec_.ambient_dim == 3 && (k == 0 || k == n_[2] - 1)) return true;
    return false;
}

namespace {

bool simplex_hits_cell(const PlMap& f, const Simplex& s, const std::array<double, 3>& lo,
                       const std::array<double, 3>& hi) {
    if (f.ambient_dim == 2) {
        Vec2 blo = {lo[0], lo[1]}, bhi = {hi[0], hi[1]};
        if (s.size() == 1) return geom::point_in_box(v2(f.coords[s[0]]), blo, bhi);
        if (s.size() == 2)
            return geom::segment_intersects_box(v2(f.coords[s[0]]), v2(f.coords[s[1]]), blo, bhi);
        if (s.size() == 3)
            return geom::triangle_intersects_box(v2(f.coords[s[0]]), v2(f.coords[s[1]]),
                                                 v2(f.coords[s[2]]), blo, bhi);
        throw std::invalid_argument("rasterize: simplex dimension above 2 in the plane");
    }
    Vec3 blo = {lo[0], lo[1], lo[2]}, bhi = {hi[0], hi[1], hi[2]};
    if (s.size() == 1) return geom::point_in_box(v3(f.coords[s[0]]), blo, bhi);
    if (s.size() == 2)
        return geom::segment_intersects_box(v3(f.coords[s[0]]), v3(f.coords[s[1]]), blo, bhi);
    if (s.size() == 3)
        return geom::triangle_intersects_box(v3(f.coords[s[0]]), v3(f.coords[s[1]]),
                                             v3(f.coords[s[2]]), blo, bhi);
    throw std::invalid_argument("rasterize: simplex dimension above 2 unsupported");
}

template <typename MarkFn>
void walk_simplex_cells(const PlMap& f, const Simplex& s, const Grid& g, MarkFn&& mark) {
    const GridSpec& spec = g.spec();
    std::array<double, 3> bb_lo = {1e300, 1e300, 1e300};
    std::array<double, 3> bb_hi = {-1e300, -1e300, -1e300};
    for (int v : s)
        for (int d = 0; d < f.ambient_dim; ++d) {
            bb_lo[d] = std::min(bb_lo[d], f.coords[v][d]);
            bb_hi[d] = std::max(bb_hi[d], f.coords[v][d]);
        }
    std::array<int, 3> c_lo{0, 0, 0}, c_hi{0, 0, 0};
    const std::array<int, 3> n = {g.nx(), g.ny(), g.nz()};
    for (int d = 0; d < f.ambient_dim; ++d) {
        c_lo[d] = std::max(0, static_cast<int>(std::floor((bb_lo[d] - spec.lo[d]) / spec.h - 1e-9)));
        c_hi[d] = std::min(n[d] - 1,
                           static_cast<int>(std::floor((bb_hi[d] - spec.lo[d]) / spec.h + 1e-9)));
    }
    for (int k = c_lo[2]; k <= c_hi[2]; ++k)
        for (int j = c_lo[1]; j <= c_hi[1]; ++j)
            for (int i = c_lo[0]; i <= c_hi[0]; ++i)
                if (simplex_hits_cell(f, s, g.cell_lo(i, j, k), g.cell_hi(i, j, k)))
                    mark(g.index(i, j, k));
}

void check_map(const PlMap& f) {
    if (static_cast<int>(f.coords.size()) != f.domain.vertex_count())
        throw std::invalid_argument("pl map: coordinate count does not match vertex count");
    if (f.ambient_dim != 2 && f.ambient_dim != 3)
        throw std::invalid_argument("pl map: ambient dimension must be 2 or 3");
}

}  // namespace

Grid rasterize(const PlMap& f, const GridSpec& spec) {
    check_map(f);
    if (spec.ambient_dim != f.ambient_dim)
        throw std::invalid_argument("rasterize: grid and map ambient dimensions differ");
    Grid g(spec);
    for (const auto& p : f.coords)
        for (int d = 0; d < f.ambient_dim; ++d)
            if (p[d] <= spec.lo[d] || p[d] >= spec.hi[d])
                throw std::invalid_argument("rasterize: box must strictly contain vertex images");
    for (int k = 0; k <= f.domain.dim(); ++k)
        for (const auto& s : f.domain.simplices(k))
            walk_simplex_cells(f, s, g, [&g](long idx) { g.mark(idx); });
    return g;
}

std::vector<long> cells_touching_simplex(const PlMap& f, const Simplex& s, const Grid& g) {
    std::vector<long> cells;
    walk_simplex_cells(f, s, g, [&cells](long idx) { cells.push_back(idx); });
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

bool check_injectivity_on_U(const PlMap& f, const CellDesignation& u) {
    check_map(f);
    Simplex cell = u.cell;
    std::sort(cell.begin(), cell.end());
    if (static_cast<int>(cell.size()) - 1 != f.domain.dim() || !f.domain.has_simplex(cell))
        throw std::invalid_argument("injectivity: designated cell is not a top simplex");

    if (f.ambient_dim == 2) {
        if (cell.size() != 2)
            throw std::invalid_argument("injectivity: planar case expects an edge cell");
        Vec2 a = v2(f.coords[cell[0]]);
        Vec2 b = v2(f.coords[cell[1]]);
        if (geom::squared_distance(a, b) < geom::TIE)
            throw std::invalid_argument("injectivity: degenerate image of U's cell");
        for (const auto& s : f.domain.simplices(0)) {
            if (geom::point_in_open_segment(v2(f.coords[s[0]]), a, b)) return false;
        }
        for (const auto& s : f.domain.simplices(1)) {
            if (s == cell) continue;
            if (geom::segment_meets_open_segment(a, b, v2(f.coords[s[0]]), v2(f.coords[s[1]])))
                return false;
        }
        return true;
    }

    if (cell.size() != 3)
        throw std::invalid_argument("injectivity: spatial case expects a triangle cell");
    Vec3 a = v3(f.coords[cell[0]]);
    Vec3 b = v3(f.coords[cell[1]]);
    Vec3 c = v3(f.coords[cell[2]]);
    {
        // degenerate iff the cross product vanishes
        Vec3 ab = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
        Vec3 ac = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
        double nx = ab[1] * ac[2] - ab[2] * ac[1];
        double ny = ab[2] * ac[0] - ab[0] * ac[2];
        double nz = ab[0] * ac[1] - ab[1] * ac[0];
        if (nx * nx + ny * ny + nz * nz < geom::TIE * geom::TIE)
            throw std::invalid_argument("injectivity: degenerate image of U's cell");
    }
    for (const auto& s : f.domain.simplices(1)) {
        // skip edges of the designated triangle itself
        if (std::includes(cell.begin(), cell.end(), s.begin(), s.end())) continue;
        if (geom::segment_meets_open_triangle(v3(f.coords[s[0]]), v3(f.coords[s[1]]), a, b, c))
            return false;
    }
    for (const auto& s : f.domain.simplices(2)) {
        if (s == cell) continue;
        if (geom::triangle_meets_open_triangle(v3(f.coords[s[0]]), v3(f.coords[s[1]]),
                                               v3(f.coords[s[2]]), a, b, c))
            return false;
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<long> parent;
    explicit UnionFind(long n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    long find(long v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(long a, long b) { parent[find(a)] = find(b); }
};

}  // namespace

ComponentLabeling complement_components(const Grid& g) {
    long n = g.cell_count();
    UnionFind uf(n + 1);  // extra node models the region outside the box
    const long inf_node = n;
    for (long idx = 0; idx < n; ++idx) {
        if (g.occupied(idx)) continue;
        auto [i, j, k] = g.cell_of_index(idx);
        if (g.on_boundary(i, j, k)) uf.unite(idx, inf_node);
        if (i + 1 < g.nx() && !g.occupied(g.index(i + 1, j, k))) uf.unite(idx, g.index(i + 1, j, k));
        if (j + 1 < g.ny() && !g.occupied(g.index(i, j + 1, k))) uf.unite(idx, g.index(i, j + 1, k));
        if (g.ambient_dim() == 3 && k + 1 < g.nz() && !g.occupied(g.index(i, j, k + 1)))
            uf.unite(idx, g.index(i, j, k + 1));
    }
    ComponentLabeling out;
    out.component.assign(n, -1);
    std::vector<int32_t> label_of_root(n + 1, -1);
    // the infinity region always exists and takes id 0
    label_of_root[uf.find(inf_node)] = 0;
    out.count = 1;
    for (long idx = 0; idx < n; ++idx) {
        if (g.occupied(idx)) continue;
        long root = uf.find(idx);
        if (label_of_root[root] < 0) label_of_root[root] = out.count++;
        out.component[idx] = label_of_root[root];
    }
    out.infinity_id = 0;
    out.cell_counts.assign(out.count, 0);
    for (long idx = 0; idx < n; ++idx)
        if (out.component[idx] >= 0) out.cell_counts[out.component[idx]]++;
    return out;
}

namespace {

std::vector<std::array<double, 3>> sample_points_on_cell(const PlMap& f, const Simplex& cell) {
    std::vector<std::array<double, 3>> samples;
    if (cell.size() == 2) {
        const auto& a = f.coords[cell[0]];
        const auto& b = f.coords[cell[1]];
        for (int i = 0; i < 32; ++i) {
            double t = (i + 0.5) / 32.0;  // interior of the open cell only
            samples.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]),
                               a[2] + t * (b[2] - a[2])});
        }
    } else {
        const auto& a = f.coords[cell[0]];
        const auto& b = f.coords[cell[1]];
        const auto& c = f.coords[cell[2]];
        const int m = 8;  // triangular lattice of 36 interior points
        for (int i = 0; i < m; ++i)
            for (int j = 0; j + i < m; ++j) {
                double u = (i + 0.5) / m, v = (j + 0.5) / m;
                double w = 1.0 - u - v;
                if (w <= 0) continue;
                samples.push_back({u * a[0] + v * b[0] + w * c[0],
                                   u * a[1] + v * b[1] + w * c[1],
                                   u * a[2] + v * b[2] + w * c[2]});
            }
    }
    return samples;
}

bool component_near_point(const Grid& g, const ComponentLabeling& labeling, int component_id,
                          const std::array<double, 3>& p, double radius) {
    const GridSpec& spec = g.spec();
    std::array<int, 3> c{0, 0, 0};
    const std::array<int, 3> n = {g.nx(), g.ny(), g.nz()};
    int reach = static_cast<int>(std::ceil(radius / spec.h)) + 1;
    std::array<int, 3> lo{0, 0, 0}, hi{0, 0, 0};
    for (int d = 0; d < g.ambient_dim(); ++d) {
        c[d] = static_cast<int>(std::floor((p[d] - spec.lo[d]) / spec.h));
        lo[d] = std::max(0, c[d] - reach);
        hi[d] = std::min(n[d] - 1, c[d] + reach);
    }
    for (int k = lo[2]; k <= hi[2]; ++k)
        for (int j = lo[1]; j <= hi[1]; ++j)
            for (int i = lo[0]; i <= hi[0]; ++i) {
                long idx = g.index(i, j, k);
                if (labeling.component[idx] != component_id) continue;
                double d = g.ambient_dim() == 2
                               ? geom::point_box_distance(Vec2{p[0], p[1]},
                                                          Vec2{g.cell_lo(i, j, k)[0],
                                                               g.cell_lo(i, j, k)[1]},
                                                          Vec2{g.cell_hi(i, j, k)[0],
                                                               g.cell_hi(i, j, k)[1]})
                               : geom::point_box_distance(v3(p), v3(g.cell_lo(i, j, k)),
                                                          v3(g.cell_hi(i, j, k)));
                if (d <= radius + 1e-12) return true;
            }
    return false;
}

}  // namespace

IncidenceReport incident_components(const Grid& g, const ComponentLabeling& labeling,
                                    const PlMap& f, const CellDesignation& u) {
    Simplex cell = u.cell;
    std::sort(cell.begin(), cell.end());
    std::vector<long> u_cells = cells_touching_simplex(f, cell, g);
    if (u_cells.empty())
        throw std::invalid_argument("incidence: resolution too coarse, U rasterizes to nothing");

    IncidenceReport report;
    std::vector<bool> seen(labeling.count, false);
    auto visit = [&](long idx) {
        int id = labeling.component[idx];
        if (id >= 0 && !seen[id]) {
            seen[id] = true;
            report.incident_ids.push_back(id);
        }
    };
    for (long idx : u_cells) {
        auto [i, j, k] = g.cell_of_index(idx);
        if (i > 0) visit(g.index(i - 1, j, k));
        if (i + 1 < g.nx()) visit(g.index(i + 1, j, k));
        if (j > 0) visit(g.index(i, j - 1, k));
        if (j + 1 < g.ny()) visit(g.index(i, j + 1, k));
        if (g.ambient_dim() == 3) {
            if (k > 0) visit(g.index(i, j, k - 1));
            if (k + 1 < g.nz()) visit(g.index(i, j, k + 1));
        }
        // a U cell on the box boundary touches the region at infinity
        if (g.on_boundary(i, j, k) && !seen[labeling.infinity_id]) {
            seen[labeling.infinity_id] = true;
            report.incident_ids.push_back(labeling.infinity_id);
        }
    }
    std::sort(report.incident_ids.begin(), report.incident_ids.end());

    auto samples = sample_points_on_cell(f, cell);
    report.samples = static_cast<int>(samples.size());
    if (report.incident_ids.size() == 2) {
        double radius = 2.0 * g.spec().h;
        for (const auto& p : samples) {
            bool ok = component_near_point(g, labeling, report.incident_ids[0], p, radius) &&
                      component_near_point(g, labeling, report.incident_ids[1], p, radius);
            if (ok) report.samples_pass++;
        }
        report.closure_pass = report.samples_pass == report.samples;
    }
    return report;
}

CoverageVerdict extension_covers(const PlMap& big_f, const PlMap& f, const Grid& f_grid,
                                 const ComponentLabeling& labeling,
                                 const std::array<int, 2>& incident) {
    check_map(big_f);
    if (!f.domain.is_subcomplex_of(big_f.domain))
        throw std::invalid_argument("extension: f's domain is not a subcomplex of F's");
    for (int v = 0; v < f.domain.vertex_count(); ++v)
        for (int d = 0; d < f.ambient_dim; ++d)
            if (std::abs(big_f.coords[v][d] - f.coords[v][d]) > 1e-12)
                throw std::invalid_argument("extension: F and f disagree on a domain vertex");

    Grid ext = rasterize(big_f, f_grid.spec());

    // interior cells of a component: a full cell of clearance from the
    // f-raster on every side
    auto is_interior = [&](long idx) {
        auto [i, j, k] = f_grid.cell_of_index(idx);
        int klo = f_grid.ambient_dim() == 3 ? -1 : 0;
        int khi = f_grid.ambient_dim() == 3 ? 1 : 0;
        for (int dk = klo; dk <= khi; ++dk)
            for (int dj = -1; dj <= 1; ++dj)
                for (int di = -1; di <= 1; ++di) {
                    int i2 = i + di, j2 = j + dj, k2 = k + dk;
                    if (i2 < 0 || i2 >= f_grid.nx() || j2 < 0 || j2 >= f_grid.ny() || k2 < 0 ||
                        k2 >= f_grid.nz())
                        continue;
                    if (f_grid.occupied(f_grid.index(i2, j2, k2))) return false;
                }
        return true;
    };

    CoverageVerdict verdict;
    double fractions[2];
    for (int side = 0; side < 2; ++side) {
        long interior = 0, covered = 0;
        for (long idx = 0; idx < f_grid.cell_count(); ++idx) {
            if (labeling.component[idx] != incident[side]) continue;
            if (!is_interior(idx)) continue;
            interior++;
            if (ext.occupied(idx)) covered++;
        }
        fractions[side] = interior == 0 ? 0.0 : static_cast<double>(covered) / interior;
        if (interior > 0 && covered == interior) verdict.covered_id = incident[side];
    }
    verdict.v1_fraction = fractions[0];
    verdict.v2_fraction = fractions[1];
    return verdict;
}

bool duality_check(const Grid& g, const ComponentLabeling& labeling) {
    if (g.ambient_dim() != 2)
        throw std::invalid_argument("duality: raster duality check is planar only");
    // triangulate the occupied cells over shared lattice corners
    std::vector<int> corner_id(static_cast<long>(g.nx() + 1) * (g.ny() + 1), -1);
    auto corner = [&](int i, int j) -> int& { return corner_id[static_cast<long>(j) * (g.nx() + 1) + i]; };
    int next = 0;
    std::vector<Simplex> tops;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            if (!g.occupied(g.index(i, j))) continue;
            int c00, c10, c01, c11;
            auto id = [&](int ci, int cj) {
                int& slot = corner(ci, cj);
                if (slot < 0) slot = next++;
                return slot;
            };
            c00 = id(i, j);
            c10 = id(i + 1, j);
            c01 = id(i, j + 1);
            c11 = id(i + 1, j + 1);
            tops.push_back({c00, c10, c11});
            tops.push_back({c00, c11, c01});
        }
    int h1 = 0;
    if (!tops.empty()) {
        SimplicialComplex cubical = SimplicialComplex::from_top_simplices(next, std::move(tops));
        h1 = cohomology_basis(cubical, 1).rank();
    }
    return labeling.count - 1 == h1;
}

void write_svg(const std::string& path, const Grid& g, const ComponentLabeling& labeling,
               const std::vector<long>& u_cells) {
    if (g.ambient_dim() != 2) throw std::invalid_argument("svg: planar rasters only");
    static const char* fills[] = {"#dddddd", "#9ecae1", "#a1d99b", "#fdae6b",
                                  "#bcbddc", "#fee391", "#fc9272", "#c7e9c0"};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("svg: cannot open output file");
    const int scale = 8;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << g.nx() * scale
        << "\" height=\"" << g.ny() * scale << "\">\n";
    std::vector<bool> is_u(g.cell_count(), false);
    for (long idx : u_cells) is_u[idx] = true;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            long idx = g.index(i, j);
            const char* fill;
            if (g.occupied(idx))
                fill = is_u[idx] ? "#d62728" : "#000000";
            else
                fill = fills[labeling.component[idx] % 8];
            // flip y so the drawing matches mathematical orientation
            out << "<rect x=\"" << i * scale << "\" y=\"" << (g.ny() - 1 - j) * scale
                << "\" width=\"" << scale << "\" height=\"" << scale << "\" fill=\"" << fill
                << "\"/>\n";
        }
    out << "</svg>\n";
}

}  // namespace sepchk
