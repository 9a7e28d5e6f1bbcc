#ifndef SEPCHK_HOMOLOGY_HPP
#define SEPCHK_HOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "sepchk/gf2.hpp"
#include "sepchk/simplicial.hpp"

namespace sepchk {

/// Boundary operator C_k -> C_{k-1} over GF(2): entry (tau, sigma) = 1 iff
/// the (k-1)-simplex tau is a face of the k-simplex sigma. Simplices are
/// indexed in lexicographic order within each grade.
Gf2Matrix boundary_matrix(const SimplicialComplex& x, int k);

/// Coboundary operator C^k -> C^{k+1}, the transpose of boundary_matrix(x, k+1).
Gf2Matrix coboundary_matrix(const SimplicialComplex& x, int k);

/// Basis of a (co)homology group at one grade: cycle representatives plus
/// the boundary subspace, which together let any cycle be expressed in
/// basis coordinates.
class HomologyBasis {
public:
    HomologyBasis() = default;
    HomologyBasis(int k, int chain_dim, std::vector<Gf2Vector> representatives,
                  Gf2Subspace boundaries)
        : k_(k),
          chain_dim_(chain_dim),
          representatives_(std::move(representatives)),
          boundaries_(std::move(boundaries)) {}

    int k() const { return k_; }
    int chain_dim() const { return chain_dim_; }
    int rank() const { return static_cast<int>(representatives_.size()); }
    const std::vector<Gf2Vector>& representatives() const { return representatives_; }
    const Gf2Subspace& boundaries() const { return boundaries_; }

    /// Coordinates of a cycle in this basis, or nullopt when the vector is
    /// not a cycle of the underlying complex (not representable).
    std::optional<Gf2Vector> coordinates(const Gf2Vector& cycle) const;

    /// Chain with the given coordinates: sum of the matching representatives.
    Gf2Vector chain_from_coordinates(const Gf2Vector& coords) const;

private:
    int k_ = 0;
    int chain_dim_ = 0;
    std::vector<Gf2Vector> representatives_;
    Gf2Subspace boundaries_{0};
};

HomologyBasis homology_basis(const SimplicialComplex& x, int k);
HomologyBasis cohomology_basis(const SimplicialComplex& x, int k);

/// A linear map between (co)homology groups, recorded as a matrix acting on
/// basis coordinates: column i holds the coordinates of the image of the
/// i-th source representative.
struct InducedMap {
    HomologyBasis source_basis;
    HomologyBasis target_basis;
    Gf2Matrix matrix;  // target_basis.rank() x source_basis.rank()
};

/// Chain map C_k(f.source) -> C_k(f.target); simplices with degenerate image
/// contribute zero.
Gf2Matrix chain_map_matrix(const SimplicialMap& f, int k);

/// f_*: H_k(source) -> H_k(target).
InducedMap induced_on_homology(const SimplicialMap& f, int k);

/// f^*: H^k(target) -> H^k(source) (contravariant).
InducedMap induced_on_cohomology(const SimplicialMap& f, int k);

/// A subcomplex pair (hat, sub) with shared vertex labels.
struct ComplexPair {
    SimplicialComplex hat;
    SimplicialComplex sub;
};

/// Throws std::invalid_argument unless sub is a subcomplex of hat.
void validate_pair(const ComplexPair& pair);

/// The relative k-simplices: those of hat not in sub, lexicographic order.
std::vector<Simplex> relative_simplices(const ComplexPair& pair, int k);

/// H_k(hat, sub): chain groups spanned by relative simplices, boundary
/// composed with the projection that drops faces lying in sub.
HomologyBasis relative_homology(const ComplexPair& pair, int k);

/// Connecting homomorphism H_{k+1}(hat, sub) -> H_k(sub): a relative class
/// goes to the class of its boundary.
InducedMap connecting_map(const ComplexPair& pair, int k);

/// One junction of a long exact sequence: exact iff image == kernel there.
struct MvJunction {
    int k;
    std::string at;
    int image_dim;
    int kernel_dim;
    bool exact;
};

struct MvReport {
    std::vector<MvJunction> junctions;
    std::vector<int> connecting_rank;  // rank of H^k(A cap B) -> H^{k+1}(X), per k
    bool all_exact = true;
};

/// Checks exactness of the Mayer-Vietoris sequence in cohomology for the
/// closed cover x = a union b:
///   0 -> H^0(X) -> H^0(A)+H^0(B) -> H^0(A cap B) -> H^1(X) -> ...
/// Throws std::invalid_argument when a, b do not cover x.
MvReport verify_mayer_vietoris(const SimplicialComplex& x, const SimplicialComplex& a,
                               const SimplicialComplex& b);

}  // namespace sepchk

#endif
