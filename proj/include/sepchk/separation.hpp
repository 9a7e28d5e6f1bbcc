#ifndef SEPCHK_SEPARATION_HPP
#define SEPCHK_SEPARATION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepchk/simplicial.hpp"

namespace sepchk {

/// Piecewise-linear map into R^2 or R^3: vertex coordinates, extended
/// affinely over each simplex.
struct PlMap {
    SimplicialComplex domain;
    int ambient_dim = 2;  // 2 or 3
    std::vector<std::array<double, 3>> coords;  // per vertex; z ignored in 2-D
};

/// Regular cell grid over an axis-aligned box. Cells outside the box are
/// merged into a single region at infinity, giving a finite model of the
/// one-point compactification.
struct GridSpec {
    std::array<double, 3> lo{0, 0, 0};
    std::array<double, 3> hi{0, 0, 0};
    double h = 0;
    int ambient_dim = 2;
};

class Grid {
public:
    Grid() = default;
    explicit Grid(const GridSpec& spec);

    const GridSpec& spec() const { return spec_; }
    int ambient_dim() const { return spec_.ambient_dim; }
    int nx() const { return n_[0]; }
    int ny() const { return n_[1]; }
    int nz() const { return n_[2]; }
    long cell_count() const;

    long index(int i, int j, int k = 0) const;
    std::array<int, 3> cell_of_index(long idx) const;
    std::array<double, 3> cell_lo(int i, int j, int k = 0) const;
    std::array<double, 3> cell_hi(int i, int j, int k = 0) const;

    bool occupied(long idx) const { return occupied_[idx] != 0; }
    void mark(long idx) { occupied_[idx] = 1; }
    long occupied_count() const;
    bool on_boundary(int i, int j, int k = 0) const;

private:
    GridSpec spec_;
    std::array<int, 3> n_{0, 0, 1};
    std::vector<uint8_t> occupied_;
};

/// Complement structure of a rasterized image: one id per unoccupied cell,
/// the region at infinity folded into a single id.
struct ComponentLabeling {
    std::vector<int32_t> component;  // per cell; -1 for occupied cells
    int count = 0;
    int infinity_id = 0;
    std::vector<long> cell_counts;  // in-box cells per id
};

/// True iff the image of U's open simplex meets the image of no other point
/// of the domain. Exact simplex-pair intersection tests; throws
/// std::invalid_argument when U's image is degenerate.
bool check_injectivity_on_U(const PlMap& f, const CellDesignation& u);

/// Conservative cover: marks every cell whose closed cube intersects the
/// image of some simplex. Throws when the box does not strictly contain all
/// vertex images or when the box is not an integral number of cells.
Grid rasterize(const PlMap& f, const GridSpec& spec);

/// Cells whose closed cube intersects the image of one simplex.
std::vector<long> cells_touching_simplex(const PlMap& f, const Simplex& s, const Grid& g);

/// Union-find labeling over face-adjacent unoccupied cells; unoccupied
/// boundary cells join the infinity region, which always gets id 0.
ComponentLabeling complement_components(const Grid& g);

struct IncidenceReport {
    std::vector<int> incident_ids;  // ascending
    int samples = 0;
    int samples_pass = 0;
    bool closure_pass = false;  // exactly two incident and all samples pass
};

/// Components face-adjacent to the cells marked by U's simplex, plus the
/// raster-scale closure containment report: >= 32 interior sample points of
/// f(U), each checked for a cell of both incident components within 2h.
/// Throws when U rasterizes to no cells.
IncidenceReport incident_components(const Grid& g, const ComponentLabeling& labeling,
                                    const PlMap& f, const CellDesignation& u);

struct CoverageVerdict {
    double v1_fraction = 0.0;
    double v2_fraction = 0.0;
    std::optional<int> covered_id;  // incident id fully covered, if any
};

/// Rasterizes the extension F on f's grid and reports, for each of the two
/// incident components, the covered fraction of its interior cells (cells
/// with a full cell of clearance from the f-raster). Throws when F does not
/// restrict to f on the domain of f.
CoverageVerdict extension_covers(const PlMap& big_f, const PlMap& f, const Grid& f_grid,
                                 const ComponentLabeling& labeling,
                                 const std::array<int, 2>& incident);

/// Planar Alexander duality at raster scale: component count minus one must
/// equal dim H^1 of the occupied cubical complex (triangulated). 2-D only.
bool duality_check(const Grid& g, const ComponentLabeling& labeling);

/// Occupied cells black, components in distinct fills, U cells outlined.
void write_svg(const std::string& path, const Grid& g, const ComponentLabeling& labeling,
               const std::vector<long>& u_cells);

}  // namespace sepchk

#endif
