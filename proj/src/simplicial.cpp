#include "sepchk/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sepchk {

namespace {

Simplex sorted_checked(Simplex s, int vertex_count) {
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= vertex_count)
            throw std::invalid_argument("simplicial: vertex index out of range");
        if (i > 0 && s[i] == s[i - 1])
            throw std::invalid_argument("simplicial: repeated vertex in simplex");
    }
    return s;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_top_simplices(int vertex_count,
                                                        std::vector<Simplex> tops) {
    if (vertex_count < 0) throw std::invalid_argument("simplicial: negative vertex count");
    std::set<Simplex> all;
    for (auto& t : tops) {
        Simplex s = sorted_checked(std::move(t), vertex_count);
        if (s.empty()) throw std::invalid_argument("simplicial: empty simplex");
        // enumerate all nonempty subsets
        int n = static_cast<int>(s.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex face;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(s[i]);
            all.insert(std::move(face));
        }
    }
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    for (const auto& s : all) {
        int k = static_cast<int>(s.size()) - 1;
        if (k >= static_cast<int>(c.by_dim_.size())) c.by_dim_.resize(k + 1);
        c.by_dim_[k].push_back(s);
    }
    // std::set iteration is lex within a grade already, but keep it explicit
    for (auto& grade : c.by_dim_) std::sort(grade.begin(), grade.end());
    return c;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    static const std::vector<Simplex> empty;
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[k];
}

int SimplicialComplex::simplex_count(int k) const {
    return static_cast<int>(simplices(k).size());
}

int SimplicialComplex::total_simplex_count() const {
    int n = 0;
    for (const auto& g : by_dim_) n += static_cast<int>(g.size());
    return n;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= dim(); ++k) chi += (k % 2 == 0 ? 1 : -1) * simplex_count(k);
    return chi;
}

bool SimplicialComplex::has_simplex(const Simplex& s) const {
    int k = static_cast<int>(s.size()) - 1;
    const auto& grade = simplices(k);
    return std::binary_search(grade.begin(), grade.end(), s);
}

std::optional<int> SimplicialComplex::index_of(const Simplex& s) const {
    int k = static_cast<int>(s.size()) - 1;
    const auto& grade = simplices(k);
    auto it = std::lower_bound(grade.begin(), grade.end(), s);
    if (it == grade.end() || *it != s) return std::nullopt;
    return static_cast<int>(it - grade.begin());
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    if (vertex_count_ > other.vertex_count()) return false;
    for (int k = 0; k <= dim(); ++k)
        for (const auto& s : simplices(k))
            if (!other.has_simplex(s)) return false;
    return true;
}

Simplex SimplicialMap::image_of(const Simplex& s) const {
    Simplex img;
    img.reserve(s.size());
    for (int v : s) img.push_back(vertex_map.at(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

bool validate(const SimplicialComplex& c) {
    std::vector<bool> used(c.vertex_count(), false);
    for (int k = 0; k <= c.dim(); ++k) {
        const auto& grade = c.simplices(k);
        for (size_t i = 0; i < grade.size(); ++i) {
            const Simplex& s = grade[i];
            if (static_cast<int>(s.size()) != k + 1) return false;
            for (size_t j = 0; j < s.size(); ++j) {
                if (s[j] < 0 || s[j] >= c.vertex_count()) return false;
                if (j > 0 && s[j] <= s[j - 1]) return false;
                used[s[j]] = true;
            }
            if (i > 0 && !(grade[i - 1] < s)) return false;  // sorted, deduplicated
            // face closure: drop one vertex at a time
            if (k > 0) {
                for (size_t j = 0; j < s.size(); ++j) {
                    Simplex face = s;
                    face.erase(face.begin() + j);
                    if (!c.has_simplex(face)) return false;
                }
            }
        }
    }
    for (bool u : used)
        if (!u) return false;  // dense vertex indices
    return true;
}

bool validate(const SimplicialMap& f) {
    if (static_cast<int>(f.vertex_map.size()) != f.source.vertex_count()) return false;
    for (int v : f.vertex_map)
        if (v < 0 || v >= f.target.vertex_count()) return false;
    for (int k = 0; k <= f.source.dim(); ++k)
        for (const auto& s : f.source.simplices(k))
            if (!f.target.has_simplex(f.image_of(s))) return false;
    return true;
}

SimplicialMap identity_inclusion(const SimplicialComplex& sub, const SimplicialComplex& sup) {
    if (!sub.is_subcomplex_of(sup))
        throw std::invalid_argument("simplicial: not a subcomplex under identity labels");
    SimplicialMap f;
    f.source = sub;
    f.target = sup;
    f.vertex_map.resize(sub.vertex_count());
    for (int i = 0; i < sub.vertex_count(); ++i) f.vertex_map[i] = i;
    return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (!(f.target == g.source))
        throw std::invalid_argument("simplicial: compose with mismatched middle complex");
    SimplicialMap h;
    h.source = f.source;
    h.target = g.target;
    h.vertex_map.resize(f.vertex_map.size());
    for (size_t i = 0; i < f.vertex_map.size(); ++i)
        h.vertex_map[i] = g.vertex_map.at(f.vertex_map[i]);
    return h;
}

SimplicialComplex delete_open_cell(const SimplicialComplex& x, const CellDesignation& u) {
    Simplex cell = u.cell;
    std::sort(cell.begin(), cell.end());
    if (static_cast<int>(cell.size()) - 1 != x.dim() || !x.has_simplex(cell))
        throw std::invalid_argument("simplicial: designated cell is not a top simplex");
    SimplicialComplex out;
    // rebuild grade lists minus the one simplex; faces all stay
    std::vector<Simplex> tops;
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& s : x.simplices(k))
            if (s != cell) tops.push_back(s);
    out = SimplicialComplex::from_top_simplices(x.vertex_count(), std::move(tops));
    return out;
}

std::pair<SimplicialComplex, SimplicialMap> cone(const SimplicialComplex& x) {
    int apex = x.vertex_count();
    std::vector<Simplex> tops;
    tops.push_back({apex});
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& s : x.simplices(k)) {
            Simplex c = s;
            c.push_back(apex);
            tops.push_back(std::move(c));
        }
    SimplicialComplex hat = SimplicialComplex::from_top_simplices(apex + 1, std::move(tops));
    SimplicialMap inc = identity_inclusion(x, hat);
    return {std::move(hat), std::move(inc)};
}

namespace {

std::map<Simplex, int> facet_incidence(const SimplicialComplex& x, int n) {
    std::map<Simplex, int> count;
    for (const auto& s : x.simplices(n)) {
        for (size_t j = 0; j < s.size(); ++j) {
            Simplex face = s;
            face.erase(face.begin() + j);
            count[face] += 1;
        }
    }
    return count;
}

}  // namespace

bool is_pseudo_manifold(const SimplicialComplex& x, int n) {
    if (x.dim() != n) return false;
    if (n == 0) return true;  // no codimension-one faces to constrain
    auto count = facet_incidence(x, n);
    // every (n-1)-simplex of the complex must appear, with multiplicity two
    if (static_cast<int>(count.size()) != x.simplex_count(n - 1)) return false;
    for (const auto& [face, c] : count)
        if (c != 2) return false;
    return true;
}

bool is_pseudo_manifold_with_boundary(const SimplicialComplex& hat, const SimplicialComplex& sub,
                                      int n) {
    if (!sub.is_subcomplex_of(hat))
        throw std::invalid_argument("simplicial: pair is not a subcomplex pair");
    if (!is_pseudo_manifold(sub, n)) return false;
    if (hat.dim() > n + 1) return false;
    auto count = facet_incidence(hat, n + 1);
    for (const auto& s : sub.simplices(n)) {
        auto it = count.find(s);
        if (it == count.end() || it->second != 1) return false;
    }
    for (const auto& s : hat.simplices(n)) {
        if (sub.has_simplex(s)) continue;
        auto it = count.find(s);
        if (it == count.end() || it->second != 2) return false;
    }
    return true;
}

SimplicialComplex boundary_complex(const SimplicialComplex& x) {
    int n = x.dim();
    auto count = facet_incidence(x, n);
    std::vector<Simplex> tops;
    for (const auto& [face, c] : count)
        if (c == 1) tops.push_back(face);
    return SimplicialComplex::from_top_simplices(x.vertex_count(), std::move(tops));
}

SimplicialComplex circle(int k) {
    if (k < 3) throw std::invalid_argument("circle: need k >= 3");
    std::vector<Simplex> tops;
    for (int i = 0; i < k; ++i) tops.push_back({i, (i + 1) % k});
    return SimplicialComplex::from_top_simplices(k, std::move(tops));
}

SimplicialComplex sphere(int n) {
    if (n < 0) throw std::invalid_argument("sphere: need n >= 0");
    int v = n + 2;
    std::vector<Simplex> tops;
    for (int skip = 0; skip < v; ++skip) {
        Simplex s;
        for (int i = 0; i < v; ++i)
            if (i != skip) s.push_back(i);
        tops.push_back(std::move(s));
    }
    return SimplicialComplex::from_top_simplices(v, std::move(tops));
}

SimplicialComplex disk_2d(int k) { return cone(circle(k)).first; }

SimplicialComplex annulus(int k) {
    if (k < 3) throw std::invalid_argument("annulus: need k >= 3");
    std::vector<Simplex> tops;
    for (int i = 0; i < k; ++i) {
        int a = i, b = (i + 1) % k;
        int a1 = k + a, b1 = k + b;
        tops.push_back({a, b, b1});
        tops.push_back({a, b1, a1});
    }
    return SimplicialComplex::from_top_simplices(2 * k, std::move(tops));
}

SimplicialComplex theta_graph(int segments) {
    if (segments < 2) throw std::invalid_argument("theta_graph: need >= 2 segments per arc");
    std::vector<Simplex> tops;
    int next = 2;
    for (int arc = 0; arc < 3; ++arc) {
        int prev = 0;
        for (int s = 0; s < segments - 1; ++s) {
            tops.push_back({prev, next});
            prev = next++;
        }
        tops.push_back({prev, 1});
    }
    return SimplicialComplex::from_top_simplices(next, std::move(tops));
}

SimplicialComplex circle_with_whisker(int k, int w) {
    if (k < 3 || w < 1) throw std::invalid_argument("circle_with_whisker: need k >= 3, w >= 1");
    std::vector<Simplex> tops;
    for (int i = 0; i < k; ++i) tops.push_back({i, (i + 1) % k});
    int prev = 0;
    for (int i = 0; i < w; ++i) {
        tops.push_back({prev, k + i});
        prev = k + i;
    }
    return SimplicialComplex::from_top_simplices(k + w, std::move(tops));
}

namespace {

SimplicialComplex grid_surface(int a, int b, bool flip) {
    if (a < 3 || b < 3) throw std::invalid_argument("grid surface: need a, b >= 3");
    auto vert = [&](int i, int j) {
        // i wraps straight; the j-wrap is straight for the torus and
        // reflected for the Klein bottle
        if (j == b) {
            if (flip) return ((a - i % a) % a) * b;  // (i, b) ~ (a-i, 0)
            j = 0;
        }
        return (i % a) * b + (j % b);
    };
    std::vector<Simplex> tops;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            int v00 = vert(i, j), v10 = vert(i + 1, j);
            int v01 = vert(i, j + 1), v11 = vert(i + 1, j + 1);
            tops.push_back({v00, v10, v11});
            tops.push_back({v00, v11, v01});
        }
    return SimplicialComplex::from_top_simplices(a * b, std::move(tops));
}

}  // namespace

SimplicialComplex torus(int a, int b) { return grid_surface(a, b, false); }

SimplicialComplex klein_bottle(int a, int b) { return grid_surface(a, b, true); }

}  // namespace sepchk
