#ifndef SEPCHK_IO_HPP
#define SEPCHK_IO_HPP

#include <optional>
#include <string>

#include "sepchk/nerve.hpp"
#include "sepchk/separation.hpp"
#include "sepchk/simplicial.hpp"

namespace sepchk {

/// Complex file: a `dim <n>` header, then one simplex per line as
/// space-separated vertex indices. Faces may be omitted; the closure is
/// computed on load. Lines starting with # are comments.
SimplicialComplex load_complex(const std::string& path);
void save_complex(const std::string& path, const SimplicialComplex& c);

struct PairFile {
    SimplicialComplex hat;
    SimplicialComplex sub;
    std::optional<CellDesignation> cell;
};

/// Pair file: `hat <path>` and `sub <path>` lines (relative to the pair
/// file's directory) plus an optional `cell <v0> ... <vn>` line.
PairFile load_pair(const std::string& path);

/// Map file: `vertex <id> <x> <y> [<z>]` lines keyed to an already-loaded
/// complex. Every vertex must receive coordinates.
PlMap load_map(const std::string& path, const SimplicialComplex& domain);
void save_map(const std::string& path, const PlMap& map);

/// Point cloud file: one `x y [label]` line per point.
PointCloud load_cloud(const std::string& path);
void save_cloud(const std::string& path, const PointCloud& cloud);

}  // namespace sepchk

#endif
