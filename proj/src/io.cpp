#include "sepchk/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sepchk {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("io: cannot open " + path);
    return in;
}

bool content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!content_line(in, line)) throw std::runtime_error("io: empty complex file " + path);
    std::istringstream header(line);
    std::string tag;
    int dim = -1;
    header >> tag >> dim;
    if (tag != "dim" || dim < 0 || header.fail())
        throw std::runtime_error("io: complex file must start with 'dim <n>': " + path);

    std::vector<Simplex> tops;
    int max_vertex = -1;
    while (content_line(in, line)) {
        std::istringstream row(line);
        Simplex s;
        int v;
        while (row >> v) {
            if (v < 0) throw std::runtime_error("io: negative vertex index in " + path);
            s.push_back(v);
            max_vertex = std::max(max_vertex, v);
        }
        if (s.empty()) continue;
        if (static_cast<int>(s.size()) - 1 > dim)
            throw std::runtime_error("io: simplex above declared dimension in " + path);
        tops.push_back(std::move(s));
    }
    if (tops.empty()) throw std::runtime_error("io: no simplices in " + path);
    SimplicialComplex c = SimplicialComplex::from_top_simplices(max_vertex + 1, std::move(tops));
    if (!validate(c))
        throw std::runtime_error("io: complex skips vertex indices; list isolated vertices "
                                 "explicitly: " +
                                 path);
    return c;
}

void save_complex(const std::string& path, const SimplicialComplex& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("io: cannot write " + path);
    out << "dim " << c.dim() << "\n";
    // top simplices are enough; the closure is recomputed on load
    for (int k = c.dim(); k >= 0; --k) {
        for (const auto& s : c.simplices(k)) {
            bool is_face = false;
            if (k < c.dim()) {
                for (int k2 = k + 1; k2 <= c.dim() && !is_face; ++k2)
                    for (const auto& t : c.simplices(k2)) {
                        if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                            is_face = true;
                            break;
                        }
                    }
            }
            if (is_face) continue;
            for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
            out << "\n";
        }
    }
}

PairFile load_pair(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    PairFile out;
    bool have_hat = false, have_sub = false;
    std::string line;
    while (content_line(in, line)) {
        std::istringstream row(line);
        std::string tag;
        row >> tag;
        if (tag == "hat" || tag == "sub") {
            std::string rel;
            row >> rel;
            if (rel.empty()) throw std::runtime_error("io: missing path after '" + tag + "'");
            std::string full = (base / rel).string();
            if (tag == "hat") {
                out.hat = load_complex(full);
                have_hat = true;
            } else {
                out.sub = load_complex(full);
                have_sub = true;
            }
        } else if (tag == "cell") {
            Simplex cell;
            int v;
            while (row >> v) cell.push_back(v);
            if (cell.empty()) throw std::runtime_error("io: empty cell line in " + path);
            out.cell = CellDesignation{std::move(cell)};
        } else {
            throw std::runtime_error("io: unknown line '" + tag + "' in pair file " + path);
        }
    }
    if (!have_hat || !have_sub)
        throw std::runtime_error("io: pair file needs both hat and sub: " + path);
    return out;
}

PlMap load_map(const std::string& path, const SimplicialComplex& domain) {
    std::ifstream in = open_or_throw(path);
    PlMap map;
    map.domain = domain;
    map.coords.assign(domain.vertex_count(), {0, 0, 0});
    std::vector<bool> seen(domain.vertex_count(), false);
    int ambient = 0;
    std::string line;
    while (content_line(in, line)) {
        std::istringstream row(line);
        std::string tag;
        row >> tag;
        if (tag != "vertex") throw std::runtime_error("io: expected 'vertex' lines in " + path);
        int id;
        double x, y, z;
        row >> id >> x >> y;
        if (row.fail()) throw std::runtime_error("io: malformed vertex line in " + path);
        int dim = 2;
        if (row >> z)
            dim = 3;
        else
            z = 0;
        if (ambient == 0)
            ambient = dim;
        else if (ambient != dim)
            throw std::runtime_error("io: mixed coordinate dimensions in " + path);
        if (id < 0 || id >= domain.vertex_count())
            throw std::runtime_error("io: vertex id out of range in " + path);
        map.coords[id] = {x, y, z};
        seen[id] = true;
    }
    for (bool s : seen)
        if (!s) throw std::runtime_error("io: map misses coordinates for some vertex: " + path);
    map.ambient_dim = ambient == 0 ? 2 : ambient;
    return map;
}

void save_map(const std::string& path, const PlMap& map) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("io: cannot write " + path);
    out.precision(17);
    for (int v = 0; v < map.domain.vertex_count(); ++v) {
        out << "vertex " << v << " " << map.coords[v][0] << " " << map.coords[v][1];
        if (map.ambient_dim == 3) out << " " << map.coords[v][2];
        out << "\n";
    }
}

PointCloud load_cloud(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    PointCloud cloud;
    std::string line;
    while (content_line(in, line)) {
        std::istringstream row(line);
        double x, y;
        row >> x >> y;
        if (row.fail()) throw std::runtime_error("io: malformed cloud line in " + path);
        std::string label;
        row >> label;
        cloud.points.push_back({x, y});
        cloud.labels.push_back(label);
    }
    return cloud;
}

void save_cloud(const std::string& path, const PointCloud& cloud) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("io: cannot write " + path);
    out.precision(17);
    for (int i = 0; i < cloud.size(); ++i) {
        out << cloud.points[i][0] << " " << cloud.points[i][1];
        if (!cloud.labels.empty() && !cloud.labels[i].empty()) out << " " << cloud.labels[i];
        out << "\n";
    }
}

}  // namespace sepchk
