#ifndef SEPCHK_SIMPLICIAL_HPP
#define SEPCHK_SIMPLICIAL_HPP

#include <optional>
#include <utility>
#include <vector>

namespace sepchk {

/// A simplex is a sorted list of distinct vertex indices.
using Simplex = std::vector<int>;

/// Finite abstract simplicial complex. Simplices are stored graded by
/// dimension, each grade sorted lexicographically, and the stored set is
/// closed under taking faces.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the face closure of the given top simplices over vertices
    /// 0..vertex_count-1. Throws on out-of-range or repeated vertices.
    static SimplicialComplex from_top_simplices(int vertex_count, std::vector<Simplex> tops);

    int vertex_count() const { return vertex_count_; }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    const std::vector<Simplex>& simplices(int k) const;
    int simplex_count(int k) const;
    int total_simplex_count() const;
    long euler_characteristic() const;

    bool has_simplex(const Simplex& s) const;
    /// Position of s in the lexicographic order of its grade.
    std::optional<int> index_of(const Simplex& s) const;

    /// Every simplex of this complex is a simplex of other (shared vertex
    /// labels, so vertex i here is vertex i there).
    bool is_subcomplex_of(const SimplicialComplex& other) const;

    bool operator==(const SimplicialComplex& o) const {
        return vertex_count_ == o.vertex_count_ && by_dim_ == o.by_dim_;
    }

private:
    int vertex_count_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
};

/// One top-dimensional simplex of a complex, designated as carrying the
/// open cell U.
struct CellDesignation {
    Simplex cell;
};

/// Vertex map between complexes whose simplex images span target simplices.
struct SimplicialMap {
    SimplicialComplex source;
    SimplicialComplex target;
    std::vector<int> vertex_map;  // size = source.vertex_count()

    /// Image of a source simplex: sorted, deduplicated vertex set.
    Simplex image_of(const Simplex& s) const;
};

bool validate(const SimplicialComplex& c);
bool validate(const SimplicialMap& f);

/// Inclusion of sub into sup where vertex i of sub is vertex i of sup.
/// Throws std::invalid_argument when sub is not a subcomplex.
SimplicialMap identity_inclusion(const SimplicialComplex& sub, const SimplicialComplex& sup);

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);  // g after f

/// X minus the open top cell U: the designated simplex is removed, all of
/// its proper faces stay. Throws std::invalid_argument when the designation
/// is not a top-dimensional simplex of x.
SimplicialComplex delete_open_cell(const SimplicialComplex& x, const CellDesignation& u);

/// Cone over x: one new apex vertex (index vertex_count()), every simplex
/// gains a companion containing the apex. Returns the cone and the
/// inclusion of x into it.
std::pair<SimplicialComplex, SimplicialMap> cone(const SimplicialComplex& x);

/// Every (n-1)-simplex is a face of exactly two n-simplices.
bool is_pseudo_manifold(const SimplicialComplex& x, int n);

/// Conditions for an (n+1)-dimensional pseudo-manifold with boundary:
/// (1) sub is an n-pseudo-manifold, (2) every n-simplex of sub lies in a
/// unique (n+1)-simplex of hat, (3) every n-simplex of hat not in sub lies
/// in exactly two (n+1)-simplices. Throws when sub is not a subcomplex.
bool is_pseudo_manifold_with_boundary(const SimplicialComplex& hat, const SimplicialComplex& sub,
                                      int n);

/// Subcomplex generated by the codimension-one faces contained in exactly
/// one top simplex (same vertex labels as x).
SimplicialComplex boundary_complex(const SimplicialComplex& x);

// Builders. Each returns a validated complex with a documented vertex layout
// so every downstream number is reproducible.

/// Cycle graph on k >= 3 vertices, edges {i, i+1 mod k}.
SimplicialComplex circle(int k);

/// Boundary of the (n+1)-simplex: n+2 vertices, all proper faces.
SimplicialComplex sphere(int n);

/// Triangulated disk: cone over circle(k), boundary vertices 0..k-1, apex k.
SimplicialComplex disk_2d(int k = 6);

/// S^1 x [0,1]: rings of k vertices at 0..k-1 and k..2k-1, 2k triangles.
SimplicialComplex annulus(int k);

/// Two degree-3 vertices 0,1 joined by three arcs of `segments` edges each
/// (segments >= 2). Arc a uses intermediate vertices in block order.
SimplicialComplex theta_graph(int segments = 2);

/// circle(k) with a path of w edges attached at vertex 0; whisker vertices
/// are k..k+w-1.
SimplicialComplex circle_with_whisker(int k = 12, int w = 2);

/// a x b grid torus (a, b >= 3), vertex (i,j) = i*b + j, 2ab triangles.
SimplicialComplex torus(int a = 4, int b = 4);

/// a x b grid Klein bottle (a, b >= 3): the j-direction wraps with the flip
/// (i, b) ~ (a-i mod a, 0). Vertex (i,j) = i*b + j, 2ab triangles.
SimplicialComplex klein_bottle(int a = 4, int b = 4);

}  // namespace sepchk

#endif
