#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepchk/corpus.hpp"
#include "sepchk/io.hpp"

using namespace sepchk;
using nlohmann::ordered_json;

namespace {

constexpr int EXIT_HOLDS = 0;
constexpr int EXIT_ERROR = 1;
constexpr int EXIT_HYPOTHESIS_FAILS = 2;

void emit(const ordered_json& j, const std::string& json_path) {
    std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << text << "\n";
    }
}

CellDesignation cell_from_flag(const std::vector<int>& cell) {
    if (cell.empty()) throw std::runtime_error("missing --cell designation");
    return CellDesignation{cell};
}

GridSpec grid_from_flags(const std::vector<double>& box, double h) {
    ordered_json ref;
    ref["box"] = box;
    ref["h"] = h;
    return resolve_grid(ref);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sepchk: homological separation checks and raster simulation"};
    app.set_help_flag("--help", "print usage");  // frees -h for the grid flag
    app.require_subcommand(1);

    std::string complex_file, pair_file, map_file, ext_map_file, cloud_file, corpus_dir;
    std::string json_path, svg_path, mode = "cech";
    std::vector<int> cell_flag;
    std::vector<double> box_flag;
    double h_flag = 0.05, eps_flag = 0.1, eps2_flag = 0;
    int k_flag = 1;

    auto* thm1 = app.add_subcommand("thm1", "kernel of H^n(X) -> H^n(X-U)");
    thm1->add_option("complex", complex_file, "complex file")->required();
    thm1->add_option("--cell", cell_flag, "vertices of the designated top cell")->expected(-1);
    thm1->add_option("--json", json_path, "write the report here as well");

    auto* thm2 = app.add_subcommand("thm2", "K vs J for a pair (X^, X)");
    thm2->add_option("pair", pair_file, "pair file")->required();
    thm2->add_option("--cell", cell_flag, "vertices of the designated top cell")->expected(-1);
    thm2->add_option("--json", json_path, "write the report here as well");

    auto* simulate = app.add_subcommand("simulate", "rasterize f and analyze the complement");
    simulate->add_option("complex", complex_file, "complex file for X")->required();
    simulate->add_option("map", map_file, "map file for f")->required();
    simulate->add_option("--cell", cell_flag, "vertices of the designated top cell")
        ->expected(-1);
    simulate->add_option("--box", box_flag, "x0 y0 x1 y1 [z0 z1]")
        ->expected(-1)
        ->required();
    simulate->add_option("--h", h_flag, "cell side length")->required();
    simulate->add_option("--pair", pair_file, "pair file for an extension check");
    simulate->add_option("--ext-map", ext_map_file, "map file for F on the pair's hat");
    simulate->add_option("--json", json_path, "write the report here as well");
    simulate->add_option("--svg", svg_path, "write a raster snapshot (planar only)");

    auto* nerve = app.add_subcommand("nerve", "nerve rank of a point cloud at a scale");
    nerve->add_option("cloud", cloud_file, "point cloud file")->required();
    nerve->add_option("--eps", eps_flag, "scale")->required();
    nerve->add_option("--eps2", eps2_flag, "second scale for the stability check");
    nerve->add_option("--k", k_flag, "cohomology degree (0 or 1)");
    nerve->add_option("--mode", mode, "cech or rips")
        ->check(CLI::IsMember({"cech", "rips"}));
    nerve->add_option("--json", json_path, "write the report here as well");

    auto* corpus = app.add_subcommand("corpus", "run every entry of a corpus directory");
    corpus->add_option("dir", corpus_dir, "corpus directory")->required();
    corpus->add_option("--json", json_path, "write the aggregate report here as well");

    CLI11_PARSE(app, argc, argv);

    try {
        if (thm1->parsed()) {
            SimplicialComplex x = load_complex(complex_file);
            Thm1Report report = check_thm1(x, cell_from_flag(cell_flag));
            ordered_json j;
            j["thm1"] = {{"holds", report.holds}, {"kernel_dim", report.kernel_dim}};
            emit(j, json_path);
            return report.holds ? EXIT_HOLDS : EXIT_HYPOTHESIS_FAILS;
        }
        if (thm2->parsed()) {
            PairFile pf = load_pair(pair_file);
            CellDesignation cell =
                cell_flag.empty() ? (pf.cell ? *pf.cell : cell_from_flag(cell_flag))
                                  : cell_from_flag(cell_flag);
            Thm2Report report = check_thm2(pf.hat, pf.sub, cell);
            ordered_json j;
            j["thm2"] = {{"holds", report.holds},
                         {"dimK", report.K.dim()},
                         {"dimJ", report.J.dim()}};
            emit(j, json_path);
            return report.holds ? EXIT_HOLDS : EXIT_HYPOTHESIS_FAILS;
        }
        if (simulate->parsed()) {
            RunInputs inputs;
            inputs.name = complex_file;
            inputs.complex = load_complex(complex_file);
            inputs.map = load_map(map_file, *inputs.complex);
            if (!cell_flag.empty()) inputs.cell = cell_from_flag(cell_flag);
            inputs.grid = grid_from_flags(box_flag, h_flag);
            if (!pair_file.empty()) {
                PairFile pf = load_pair(pair_file);
                if (!inputs.cell && pf.cell) inputs.cell = pf.cell;
                inputs.pair = ComplexPair{std::move(pf.hat), std::move(pf.sub)};
                if (!ext_map_file.empty())
                    inputs.extension_map = load_map(ext_map_file, inputs.pair->hat);
            }
            inputs.svg_path = svg_path;
            Report report = run_entry(inputs);
            emit(report_to_json(report), json_path);
            bool hypotheses_met = report.thm1 && report.thm1->holds && report.injective_on_U &&
                                  *report.injective_on_U;
            return hypotheses_met ? EXIT_HOLDS : EXIT_HYPOTHESIS_FAILS;
        }
        if (nerve->parsed()) {
            PointCloud cloud = load_cloud(cloud_file);
            int rank_value = mode == "cech" ? cech_rank_at_scale(cloud, eps_flag, k_flag)
                                            : rips_rank_at_scale(cloud, eps_flag, k_flag);
            ordered_json j;
            j["rank"] = rank_value;
            j["k"] = k_flag;
            j["eps"] = eps_flag;
            j["mode"] = mode;
            if (eps2_flag > 0) j["stable"] = stability_check(cloud, eps_flag, eps2_flag, k_flag);
            emit(j, json_path);
            return EXIT_HOLDS;
        }
        if (corpus->parsed()) {
            CorpusRunResult result = run_corpus(corpus_dir);
            emit(result.aggregate, json_path);
            if (!result.failed_entries.empty()) {
                std::cerr << "corpus: expectation mismatches in:";
                for (const auto& name : result.failed_entries) std::cerr << " " << name;
                std::cerr << "\n";
                return EXIT_HYPOTHESIS_FAILS;
            }
            return EXIT_HOLDS;
        }
    } catch (const std::exception& e) {
        std::cerr << "sepchk: " << e.what() << "\n";
        return EXIT_ERROR;
    }
    return EXIT_ERROR;
}
