#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "sepchk/io.hpp"

using namespace sepchk;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("sepchk_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("complex files round-trip through the closure") {
    TempDir tmp;
    SimplicialComplex kb = klein_bottle();
    save_complex(tmp.file("kb.cplx"), kb);
    SimplicialComplex loaded = load_complex(tmp.file("kb.cplx"));
    CHECK(loaded == kb);

    // faces may be omitted by hand too
    std::ofstream out(tmp.file("tri.cplx"));
    out << "# a single triangle\n";
    out << "dim 2\n";
    out << "2 0 1\n";  // unsorted on purpose
    out.close();
    SimplicialComplex tri = load_complex(tmp.file("tri.cplx"));
    CHECK(tri.simplex_count(0) == 3);
    CHECK(tri.simplex_count(1) == 3);
    CHECK(tri.simplex_count(2) == 1);
}

TEST_CASE("complex file errors") {
    TempDir tmp;
    CHECK_THROWS(load_complex(tmp.file("missing.cplx")));
    {
        std::ofstream out(tmp.file("bad.cplx"));
        out << "dimension 2\n0 1 2\n";
    }
    CHECK_THROWS(load_complex(tmp.file("bad.cplx")));
    {
        std::ofstream out(tmp.file("deep.cplx"));
        out << "dim 1\n0 1 2\n";  // triangle above the declared dimension
    }
    CHECK_THROWS(load_complex(tmp.file("deep.cplx")));
}

TEST_CASE("pair files reference complexes and carry a cell") {
    TempDir tmp;
    SimplicialComplex an = annulus(6);
    save_complex(tmp.file("annulus.cplx"), an);
    save_complex(tmp.file("rings.cplx"), boundary_complex(an));
    {
        std::ofstream out(tmp.file("pair.pair"));
        out << "hat annulus.cplx\nsub rings.cplx\ncell 0 1\n";
    }
    PairFile pf = load_pair(tmp.file("pair.pair"));
    CHECK(pf.hat == an);
    CHECK(pf.sub.is_subcomplex_of(pf.hat));
    REQUIRE(pf.cell.has_value());
    CHECK(pf.cell->cell == Simplex{0, 1});

    {
        std::ofstream out(tmp.file("half.pair"));
        out << "hat annulus.cplx\n";
    }
    CHECK_THROWS(load_pair(tmp.file("half.pair")));
}

TEST_CASE("map files key coordinates to a complex") {
    TempDir tmp;
    SimplicialComplex c4 = circle(4);
    {
        std::ofstream out(tmp.file("square.map"));
        out << "vertex 0 1 0\nvertex 1 0 1\nvertex 2 -1 0\nvertex 3 0 -1\n";
    }
    PlMap f = load_map(tmp.file("square.map"), c4);
    CHECK(f.ambient_dim == 2);
    CHECK(f.coords[2][0] == -1.0);
    save_map(tmp.file("copy.map"), f);
    PlMap again = load_map(tmp.file("copy.map"), c4);
    CHECK(again.coords == f.coords);

    {
        std::ofstream out(tmp.file("short.map"));
        out << "vertex 0 1 0\n";
    }
    CHECK_THROWS(load_map(tmp.file("short.map"), c4));
    {
        std::ofstream out(tmp.file("mixed.map"));
        out << "vertex 0 1 0\nvertex 1 0 1 5\nvertex 2 -1 0\nvertex 3 0 -1\n";
    }
    CHECK_THROWS(load_map(tmp.file("mixed.map"), c4));
}

TEST_CASE("cloud files carry optional labels") {
    TempDir tmp;
    PointCloud cloud;
    cloud.points = {{0, 0}, {1, 0}, {0.5, 1}};
    cloud.labels = {"", "U", ""};
    save_cloud(tmp.file("pts.xy"), cloud);
    PointCloud loaded = load_cloud(tmp.file("pts.xy"));
    REQUIRE(loaded.size() == 3);
    CHECK(loaded.points[1][0] == 1.0);
    CHECK(loaded.labels[1] == "U");
    CHECK(loaded.labels[0].empty());
}

TEST_CASE("complex files must mention every vertex index") {
    TempDir tmp;
    std::ofstream out(tmp.file("gap.cplx"));
    out << "dim 1\n0 2\n";  // vertex 1 never appears
    out.close();
    CHECK_THROWS(load_complex(tmp.file("gap.cplx")));
}
