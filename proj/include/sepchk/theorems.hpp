#ifndef SEPCHK_THEOREMS_HPP
#define SEPCHK_THEOREMS_HPP

#include <optional>

#include "sepchk/gf2.hpp"
#include "sepchk/homology.hpp"
#include "sepchk/simplicial.hpp"

namespace sepchk {

/// Outcome of the first separation criterion: the restriction map
/// H^n(X) -> H^n(X-U) must have a non-trivial kernel.
struct Thm1Report {
    int kernel_dim = 0;
    /// A kernel element as a cocycle on the n-simplices of X; present iff
    /// the criterion holds.
    std::optional<Gf2Vector> witness_cocycle;
    bool holds = false;
};

/// Outcome of the extension-surjectivity criterion: with
/// K = ker(H_n(X) -> H_n(X^)) and J = im(H_n(X-U) -> H_n(X)), the
/// criterion is K not contained in J.
struct Thm2Report {
    Gf2Subspace K{0};
    Gf2Subspace J{0};
    bool holds = false;
    /// A cycle on X whose class lies in K but not in J; present iff holds.
    std::optional<Gf2Vector> alpha;
    /// Basis used for K, J coordinates and for alpha's chain expansion.
    HomologyBasis h_n_x;
};

Thm1Report check_thm1(const SimplicialComplex& x, const CellDesignation& u);

Thm2Report check_thm2(const SimplicialComplex& hat, const SimplicialComplex& sub,
                      const CellDesignation& u);

/// Boundary of the sum of all (n+1)-simplices of hat not in sub, expressed
/// over sub's n-simplices. Requires (hat, sub) to be a pseudo-manifold with
/// boundary; the result is the fundamental cycle of sub.
Gf2Vector manifold_pair_witness(const SimplicialComplex& hat, const SimplicialComplex& sub);

/// A pseudo-manifold carrying a prescribed cycle class.
struct PseudoManifoldRepresentative {
    SimplicialComplex y;
    SimplicialMap phi;             // y -> x
    Gf2Vector represented_class;   // coordinates in H_n(x)
};

/// Builds an n-pseudo-manifold Y from the support of the n-cycle z by taking
/// one abstract simplex per support simplex and gluing codimension-one faces
/// in deterministic pairs. The pushforward of Y's fundamental chain equals z.
/// Throws std::invalid_argument when z is not a cycle.
PseudoManifoldRepresentative cycle_to_pseudomanifold(const SimplicialComplex& x,
                                                     const Gf2Vector& z, int n);

}  // namespace sepchk

#endif
