#include "sepchk/homology.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sepchk {

Gf2Matrix boundary_matrix(const SimplicialComplex& x, int k) {
    if (k < 0 || k > x.dim()) throw std::invalid_argument("homology: dimension out of range");
    const auto& rows = x.simplices(k - 1);
    const auto& cols = x.simplices(k);
    Gf2Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        const Simplex& s = cols[c];
        for (size_t j = 0; j < s.size(); ++j) {
            Simplex face = s;
            face.erase(face.begin() + j);
            if (face.empty()) continue;  // k = 0: the boundary operator is zero
            auto idx = x.index_of(face);
            assert(idx.has_value());
            m.set(*idx, c, true);
        }
    }
    return m;
}

Gf2Matrix coboundary_matrix(const SimplicialComplex& x, int k) {
    if (k >= x.dim()) return Gf2Matrix(0, x.simplex_count(k));
    return boundary_matrix(x, k + 1).transposed();
}

std::optional<Gf2Vector> HomologyBasis::coordinates(const Gf2Vector& cycle) const {
    if (cycle.dim() != chain_dim_)
        throw std::invalid_argument("homology: coordinates of wrong-length chain");
    std::vector<Gf2Vector> cols = representatives_;
    for (const auto& b : boundaries_.basis()) cols.push_back(b);
    auto x = solve(Gf2Matrix::from_columns(cols, chain_dim_), cycle);
    if (!x) return std::nullopt;
    Gf2Vector coords(rank());
    for (int i = 0; i < rank(); ++i)
        if (x->get(i)) coords.set(i, true);
    return coords;
}

Gf2Vector HomologyBasis::chain_from_coordinates(const Gf2Vector& coords) const {
    if (coords.dim() != rank())
        throw std::invalid_argument("homology: coordinate vector of wrong length");
    Gf2Vector chain(chain_dim_);
    for (int i = 0; i < rank(); ++i)
        if (coords.get(i)) chain ^= representatives_[i];
    return chain;
}

namespace {

/// Common basis extraction: representatives extend the boundary subspace to
/// the cycle subspace, taken in canonical order so results are reproducible.
HomologyBasis make_basis(int k, int chain_dim, const Gf2Subspace& cycles,
                         const Gf2Subspace& bounds) {
    Gf2Subspace acc = bounds;
    std::vector<Gf2Vector> reps;
    for (const auto& z : cycles.basis()) {
        Gf2Vector r = acc.reduce(z);
        if (!r.is_zero()) {
            reps.push_back(r);
            acc.insert(r);
        }
    }
    return HomologyBasis(k, chain_dim, std::move(reps), bounds);
}

}  // namespace

HomologyBasis homology_basis(const SimplicialComplex& x, int k) {
    int nk = x.simplex_count(k);
    if (k < 0 || k > x.dim())
        return HomologyBasis(k, nk, {}, Gf2Subspace(nk));
    Gf2Subspace cycles = (k == 0) ? Gf2Subspace::full(nk) : kernel_basis(boundary_matrix(x, k));
    Gf2Subspace bounds =
        (k + 1 > x.dim()) ? Gf2Subspace(nk) : image_basis(boundary_matrix(x, k + 1));
    return make_basis(k, nk, cycles, bounds);
}

HomologyBasis cohomology_basis(const SimplicialComplex& x, int k) {
    int nk = x.simplex_count(k);
    if (k < 0 || k > x.dim())
        return HomologyBasis(k, nk, {}, Gf2Subspace(nk));
    Gf2Subspace cocycles = kernel_basis(coboundary_matrix(x, k));
    Gf2Subspace cobounds =
        (k == 0) ? Gf2Subspace(nk) : image_basis(coboundary_matrix(x, k - 1));
    HomologyBasis raw = make_basis(k, nk, cocycles, cobounds);

    // re-express the representatives as the dual basis of the homology
    // basis under the evaluation pairing, so contravariant induced matrices
    // are literally the transposes of the covariant ones
    HomologyBasis hom = homology_basis(x, k);
    int r = raw.rank();
    if (r == 0) return raw;
    if (hom.rank() != r) throw std::logic_error("homology: cochain pairing rank mismatch");
    Gf2Matrix pairing(r, r);  // pairing(i, j) = <raw_i, hom_j>
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int dot = 0;
            for (int s : raw.representatives()[i].support())
                dot ^= hom.representatives()[j].get(s) ? 1 : 0;
            if (dot) pairing.set(i, j, true);
        }
    Gf2Matrix pairing_t = pairing.transposed();
    std::vector<Gf2Vector> dual;
    for (int i = 0; i < r; ++i) {
        auto q = solve(pairing_t, Gf2Vector::unit(r, i));
        if (!q) throw std::logic_error("homology: evaluation pairing is degenerate");
        Gf2Vector psi(nk);
        for (int l : q->support()) psi ^= raw.representatives()[l];
        dual.push_back(std::move(psi));
    }
    return HomologyBasis(k, nk, std::move(dual), raw.boundaries());
}

Gf2Matrix chain_map_matrix(const SimplicialMap& f, int k) {
    const auto& src = f.source.simplices(k);
    Gf2Matrix m(f.target.simplex_count(k), static_cast<int>(src.size()));
    for (int c = 0; c < static_cast<int>(src.size()); ++c) {
        Simplex img = f.image_of(src[c]);
        if (static_cast<int>(img.size()) != k + 1) continue;  // degenerate image
        auto idx = f.target.index_of(img);
        if (!idx) throw std::invalid_argument("homology: map image is not a target simplex");
        m.set(*idx, c, true);
    }
    return m;
}

InducedMap induced_on_homology(const SimplicialMap& f, int k) {
    InducedMap out;
    out.source_basis = homology_basis(f.source, k);
    out.target_basis = homology_basis(f.target, k);
    Gf2Matrix chain = chain_map_matrix(f, k);
    out.matrix = Gf2Matrix(out.target_basis.rank(), out.source_basis.rank());
    for (int i = 0; i < out.source_basis.rank(); ++i) {
        Gf2Vector image = chain.apply(out.source_basis.representatives()[i]);
        auto coords = out.target_basis.coordinates(image);
        if (!coords) throw std::logic_error("homology: image of a cycle is not a cycle");
        for (int r = 0; r < out.target_basis.rank(); ++r)
            if (coords->get(r)) out.matrix.set(r, i, true);
    }
    return out;
}

InducedMap induced_on_cohomology(const SimplicialMap& f, int k) {
    InducedMap out;
    out.source_basis = cohomology_basis(f.target, k);  // contravariant
    out.target_basis = cohomology_basis(f.source, k);
    Gf2Matrix cochain = chain_map_matrix(f, k).transposed();
    out.matrix = Gf2Matrix(out.target_basis.rank(), out.source_basis.rank());
    for (int i = 0; i < out.source_basis.rank(); ++i) {
        Gf2Vector pullback = cochain.apply(out.source_basis.representatives()[i]);
        auto coords = out.target_basis.coordinates(pullback);
        if (!coords) throw std::logic_error("homology: pullback of a cocycle is not a cocycle");
        for (int r = 0; r < out.target_basis.rank(); ++r)
            if (coords->get(r)) out.matrix.set(r, i, true);
    }
    return out;
}

void validate_pair(const ComplexPair& pair) {
    if (!pair.sub.is_subcomplex_of(pair.hat))
        throw std::invalid_argument("homology: sub is not a subcomplex of hat");
}

std::vector<Simplex> relative_simplices(const ComplexPair& pair, int k) {
    std::vector<Simplex> out;
    for (const auto& s : pair.hat.simplices(k))
        if (!pair.sub.has_simplex(s)) out.push_back(s);
    return out;
}

namespace {

/// Relative boundary C_k(hat, sub) -> C_{k-1}(hat, sub).
Gf2Matrix relative_boundary(const std::vector<Simplex>& rel_k,
                            const std::vector<Simplex>& rel_km1) {
    Gf2Matrix m(static_cast<int>(rel_km1.size()), static_cast<int>(rel_k.size()));
    for (int c = 0; c < static_cast<int>(rel_k.size()); ++c) {
        const Simplex& s = rel_k[c];
        for (size_t j = 0; j < s.size(); ++j) {
            Simplex face = s;
            face.erase(face.begin() + j);
            if (face.empty()) continue;
            auto it = std::lower_bound(rel_km1.begin(), rel_km1.end(), face);
            if (it != rel_km1.end() && *it == face)
                m.set(static_cast<int>(it - rel_km1.begin()), c, true);
        }
    }
    return m;
}

}  // namespace

HomologyBasis relative_homology(const ComplexPair& pair, int k) {
    validate_pair(pair);
    std::vector<Simplex> rel_k = relative_simplices(pair, k);
    int nk = static_cast<int>(rel_k.size());
    if (k < 0 || k > pair.hat.dim()) return HomologyBasis(k, nk, {}, Gf2Subspace(nk));
    std::vector<Simplex> rel_km1 = relative_simplices(pair, k - 1);
    std::vector<Simplex> rel_kp1 = relative_simplices(pair, k + 1);
    Gf2Subspace cycles = kernel_basis(relative_boundary(rel_k, rel_km1));
    Gf2Subspace bounds = image_basis(relative_boundary(rel_kp1, rel_k));
    return make_basis(k, nk, cycles, bounds);
}

InducedMap connecting_map(const ComplexPair& pair, int k) {
    validate_pair(pair);
    InducedMap out;
    out.source_basis = relative_homology(pair, k + 1);
    out.target_basis = homology_basis(pair.sub, k);
    std::vector<Simplex> rel = relative_simplices(pair, k + 1);
    const auto& sub_k = pair.sub.simplices(k);
    const auto& hat_k = pair.hat.simplices(k);
    out.matrix = Gf2Matrix(out.target_basis.rank(), out.source_basis.rank());
    for (int i = 0; i < out.source_basis.rank(); ++i) {
        const Gf2Vector& c = out.source_basis.representatives()[i];
        // full boundary in hat; relative faces must cancel mod 2 for a
        // relative cycle, leaving support inside sub
        Gf2Vector b_hat(static_cast<int>(hat_k.size()));
        for (int j : c.support()) {
            const Simplex& s = rel[j];
            for (size_t v = 0; v < s.size(); ++v) {
                Simplex face = s;
                face.erase(face.begin() + v);
                b_hat.flip(*pair.hat.index_of(face));
            }
        }
        Gf2Vector b(static_cast<int>(sub_k.size()));
        for (int j : b_hat.support()) {
            auto idx = pair.sub.index_of(hat_k[j]);
            if (!idx)
                throw std::logic_error("homology: relative cycle boundary leaks outside sub");
            b.set(*idx, true);
        }
        auto coords = out.target_basis.coordinates(b);
        if (!coords) throw std::logic_error("homology: connecting image is not a cycle");
        for (int r = 0; r < out.target_basis.rank(); ++r)
            if (coords->get(r)) out.matrix.set(r, i, true);
    }
    return out;
}

namespace {

/// Gathers every simplex of c into a flat per-dimension presence check.
bool covers(const SimplicialComplex& x, const SimplicialComplex& a, const SimplicialComplex& b) {
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& s : x.simplices(k))
            if (!a.has_simplex(s) && !b.has_simplex(s)) return false;
    return true;
}

SimplicialComplex intersection_complex(const SimplicialComplex& a, const SimplicialComplex& b,
                                       int vertex_count) {
    std::vector<Simplex> tops;
    for (int k = 0; k <= a.dim(); ++k)
        for (const auto& s : a.simplices(k))
            if (b.has_simplex(s)) tops.push_back(s);
    if (tops.empty()) return SimplicialComplex();
    return SimplicialComplex::from_top_simplices(vertex_count, std::move(tops));
}

}  // namespace

MvReport verify_mayer_vietoris(const SimplicialComplex& x, const SimplicialComplex& a,
                               const SimplicialComplex& b) {
    if (!a.is_subcomplex_of(x) || !b.is_subcomplex_of(x) || !covers(x, a, b))
        throw std::invalid_argument("homology: a, b do not form a cover of x");
    SimplicialComplex cap =
        intersection_complex(a, b, std::min(a.vertex_count(), b.vertex_count()));

    int top = x.dim();
    std::vector<HomologyBasis> hx(top + 2), ha(top + 2), hb(top + 2), hi(top + 2);
    for (int k = 0; k <= top + 1; ++k) {
        hx[k] = cohomology_basis(x, k);
        ha[k] = cohomology_basis(a, k);
        hb[k] = cohomology_basis(b, k);
        hi[k] = cohomology_basis(cap, k);
    }

    SimplicialMap inc_a = identity_inclusion(a, x);
    SimplicialMap inc_b = identity_inclusion(b, x);

    MvReport report;
    report.connecting_rank.assign(top + 1, 0);

    std::vector<Gf2Matrix> restrict(top + 2), difference(top + 2), connecting(top + 2);
    for (int k = 0; k <= top; ++k) {
        // H^k(X) -> H^k(A) + H^k(B), stacked restrictions
        Gf2Matrix ra = induced_on_cohomology(inc_a, k).matrix;
        Gf2Matrix rb = induced_on_cohomology(inc_b, k).matrix;
        Gf2Matrix r(ra.rows() + rb.rows(), hx[k].rank());
        for (int i = 0; i < ra.rows(); ++i)
            for (int j : ra.row(i).support()) r.set(i, j, true);
        for (int i = 0; i < rb.rows(); ++i)
            for (int j : rb.row(i).support()) r.set(ra.rows() + i, j, true);
        restrict[k] = std::move(r);

        // H^k(A) + H^k(B) -> H^k(A cap B), difference of restrictions
        Gf2Matrix da, db;
        if (cap.total_simplex_count() > 0) {
            da = induced_on_cohomology(identity_inclusion(cap, a), k).matrix;
            db = induced_on_cohomology(identity_inclusion(cap, b), k).matrix;
        } else {
            da = Gf2Matrix(0, ha[k].rank());
            db = Gf2Matrix(0, hb[k].rank());
        }
        Gf2Matrix d(hi[k].rank(), ha[k].rank() + hb[k].rank());
        for (int i = 0; i < da.rows(); ++i)
            for (int j : da.row(i).support()) d.set(i, j, true);
        for (int i = 0; i < db.rows(); ++i)
            for (int j : db.row(i).support()) d.set(i, ha[k].rank() + j, true);
        difference[k] = std::move(d);

        // connecting H^k(A cap B) -> H^{k+1}(X): extend a cocycle by zero to
        // a cochain on A, take its coboundary, glue with zero on B
        Gf2Matrix conn(hx[k + 1].rank(), hi[k].rank());
        const auto& cap_k = cap.simplices(k);
        const auto& a_k = a.simplices(k);
        const auto& x_k1 = x.simplices(k + 1);
        Gf2Matrix delta_a =
            (k <= a.dim()) ? coboundary_matrix(a, k) : Gf2Matrix(0, 0);
        for (int i = 0; i < hi[k].rank(); ++i) {
            const Gf2Vector& phi = hi[k].representatives()[i];
            Gf2Vector phi_a(static_cast<int>(a_k.size()));
            for (int j : phi.support()) {
                auto idx = std::lower_bound(a_k.begin(), a_k.end(), cap_k[j]);
                phi_a.set(static_cast<int>(idx - a_k.begin()), true);
            }
            Gf2Vector psi = delta_a.apply(phi_a);  // cochain on A's (k+1)-simplices
            Gf2Vector glued(static_cast<int>(x_k1.size()));
            const auto& a_k1 = a.simplices(k + 1);
            for (int j : psi.support()) {
                auto idx = x.index_of(a_k1[j]);
                glued.set(*idx, true);
            }
            auto coords = hx[k + 1].coordinates(glued);
            if (!coords) throw std::logic_error("homology: glued connecting cochain not closed");
            for (int r2 = 0; r2 < hx[k + 1].rank(); ++r2)
                if (coords->get(r2)) conn.set(r2, i, true);
        }
        report.connecting_rank[k] = rank(conn);
        connecting[k] = std::move(conn);
    }

    auto junction = [&report](int k, const std::string& at, const Gf2Subspace& image,
                              const Gf2Subspace& kernel) {
        bool exact = (image == kernel);
        report.junctions.push_back({k, at, image.dim(), kernel.dim(), exact});
        if (!exact) report.all_exact = false;
    };

    for (int k = 0; k <= top; ++k) {
        Gf2Subspace im_prev = (k == 0) ? Gf2Subspace(hx[0].rank())
                                       : image_basis(connecting[k - 1]);
        junction(k, "H^k(X)", im_prev, kernel_basis(restrict[k]));
        junction(k, "H^k(A)+H^k(B)", image_basis(restrict[k]), kernel_basis(difference[k]));
        junction(k, "H^k(AcapB)", image_basis(difference[k]), kernel_basis(connecting[k]));
    }
    return report;
}

}  // namespace sepchk
