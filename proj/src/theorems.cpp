#include "sepchk/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sepchk {

Thm1Report check_thm1(const SimplicialComplex& x, const CellDesignation& u) {
    int n = x.dim();
    SimplicialComplex xu = delete_open_cell(x, u);
    SimplicialMap inc = identity_inclusion(xu, x);
    InducedMap restriction = induced_on_cohomology(inc, n);  // H^n(X) -> H^n(X-U)
    Gf2Subspace ker = kernel_basis(restriction.matrix);

    Thm1Report report;
    report.kernel_dim = ker.dim();
    report.holds = ker.dim() >= 1;
    if (report.holds)
        report.witness_cocycle = restriction.source_basis.chain_from_coordinates(ker.basis()[0]);
    return report;
}

Thm2Report check_thm2(const SimplicialComplex& hat, const SimplicialComplex& sub,
                      const CellDesignation& u) {
    validate_pair({hat, sub});
    int n = sub.dim();

    InducedMap into_hat = induced_on_homology(identity_inclusion(sub, hat), n);
    SimplicialComplex xu = delete_open_cell(sub, u);
    InducedMap from_xu = induced_on_homology(identity_inclusion(xu, sub), n);

    Thm2Report report;
    report.h_n_x = into_hat.source_basis;
    report.K = kernel_basis(into_hat.matrix);
    report.J = image_basis(from_xu.matrix);
    report.holds = !contains(report.J, report.K);
    if (report.holds) {
        // first canonical basis vector of K outside J
        for (const auto& v : report.K.basis()) {
            if (!report.J.contains_vector(v)) {
                report.alpha = report.h_n_x.chain_from_coordinates(v);
                break;
            }
        }
    }
    return report;
}

Gf2Vector manifold_pair_witness(const SimplicialComplex& hat, const SimplicialComplex& sub) {
    int n = sub.dim();
    if (!is_pseudo_manifold_with_boundary(hat, sub, n))
        throw std::invalid_argument("theorems: pair is not a pseudo-manifold with boundary");

    const auto& top = hat.simplices(n + 1);
    const auto& sub_n = sub.simplices(n);
    Gf2Vector witness(static_cast<int>(sub_n.size()));
    for (const auto& s : top) {
        for (size_t j = 0; j < s.size(); ++j) {
            Simplex face = s;
            face.erase(face.begin() + j);
            auto it = std::lower_bound(sub_n.begin(), sub_n.end(), face);
            if (it != sub_n.end() && *it == face)
                witness.flip(static_cast<int>(it - sub_n.begin()));
        }
    }
    return witness;
}

PseudoManifoldRepresentative cycle_to_pseudomanifold(const SimplicialComplex& x,
                                                     const Gf2Vector& z, int n) {
    const auto& grade = x.simplices(n);
    if (z.dim() != static_cast<int>(grade.size()))
        throw std::invalid_argument("theorems: cycle vector has wrong length");
    if (n > 0) {
        Gf2Matrix bd = boundary_matrix(x, n);
        if (!bd.apply(z).is_zero())
            throw std::invalid_argument("theorems: chain is not a cycle");
    }
    std::vector<int> supp = z.support();
    int copies = static_cast<int>(supp.size());

    // abstract vertex (copy c, position p in its simplex) -> node id
    auto node = [&](int c, int p) { return c * (n + 1) + p; };
    std::vector<int> parent(copies * (n + 1));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    // collect facet occurrences, keyed by the facet in x
    std::map<Simplex, std::vector<std::pair<int, int>>> occurrences;  // (copy, dropped pos)
    for (int c = 0; c < copies; ++c) {
        const Simplex& s = grade[supp[c]];
        for (int p = 0; p <= n; ++p) {
            Simplex face = s;
            face.erase(face.begin() + p);
            if (!face.empty()) occurrences[face].push_back({c, p});
        }
    }
    for (const auto& [face, occ] : occurrences) {
        if (occ.size() % 2 != 0)
            throw std::logic_error("theorems: odd facet multiplicity in a cycle support");
        // pair consecutive occurrences in simplex order, identify face vertices
        for (size_t i = 0; i + 1 < occ.size(); i += 2) {
            auto [c1, p1] = occ[i];
            auto [c2, p2] = occ[i + 1];
            const Simplex& s1 = grade[supp[c1]];
            const Simplex& s2 = grade[supp[c2]];
            for (int q1 = 0, q2 = 0; q1 <= n; ++q1) {
                if (q1 == p1) continue;
                while (q2 == p2) ++q2;
                // s1 with p1 dropped equals s2 with p2 dropped, position-wise
                (void)s1;
                (void)s2;
                unite(node(c1, q1), node(c2, q2));
                ++q2;
            }
        }
    }

    // number the vertex classes in first-visit order
    std::vector<int> class_id(copies * (n + 1), -1);
    std::vector<int> class_to_x_vertex;
    for (int c = 0; c < copies; ++c) {
        for (int p = 0; p <= n; ++p) {
            int root = find(node(c, p));
            if (class_id[root] < 0) {
                class_id[root] = static_cast<int>(class_to_x_vertex.size());
                class_to_x_vertex.push_back(grade[supp[c]][p]);
            }
        }
    }

    std::vector<Simplex> tops;
    tops.reserve(copies);
    std::set<Simplex> seen;
    for (int c = 0; c < copies; ++c) {
        Simplex s(n + 1);
        for (int p = 0; p <= n; ++p) s[p] = class_id[find(node(c, p))];
        std::sort(s.begin(), s.end());
        if (!seen.insert(s).second)
            throw std::runtime_error("theorems: face pairing identified two simplex copies");
        tops.push_back(std::move(s));
    }

    PseudoManifoldRepresentative out;
    out.y = SimplicialComplex::from_top_simplices(static_cast<int>(class_to_x_vertex.size()),
                                                  tops);
    if (!is_pseudo_manifold(out.y, n))
        throw std::runtime_error("theorems: glued complex is not a pseudo-manifold");
    out.phi.source = out.y;
    out.phi.target = x;
    out.phi.vertex_map = class_to_x_vertex;

    HomologyBasis basis = homology_basis(x, n);
    auto coords = basis.coordinates(z);
    if (!coords) throw std::logic_error("theorems: cycle has no homology coordinates");
    out.represented_class = *coords;
    return out;
}

}  // namespace sepchk
