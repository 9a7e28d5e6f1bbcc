#include "sepchk/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "sepchk/io.hpp"

namespace sepchk {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

Report run_entry(const RunInputs& inputs) {
    Report report;
    report.entry = inputs.name;

    const SimplicialComplex* x = nullptr;
    if (inputs.pair)
        x = &inputs.pair->sub;
    else if (inputs.complex)
        x = &*inputs.complex;

    if (x && inputs.cell) report.thm1 = check_thm1(*x, *inputs.cell);
    if (inputs.pair && inputs.cell)
        report.thm2 = check_thm2(inputs.pair->hat, inputs.pair->sub, *inputs.cell);

    if (inputs.map && inputs.grid) {
        const PlMap& f = *inputs.map;
        if (inputs.cell) report.injective_on_U = check_injectivity_on_U(f, *inputs.cell);
        Grid g = rasterize(f, *inputs.grid);
        ComponentLabeling labeling = complement_components(g);
        report.components = labeling.count;
        if (inputs.cell) {
            IncidenceReport inc = incident_components(g, labeling, f, *inputs.cell);
            report.incident = static_cast<int>(inc.incident_ids.size());
            report.closure_pass = inc.closure_pass;
            if (inputs.extension_map && inc.incident_ids.size() == 2) {
                CoverageVerdict verdict =
                    extension_covers(*inputs.extension_map, f, g, labeling,
                                     {inc.incident_ids[0], inc.incident_ids[1]});
                report.coverage = {verdict.v1_fraction, verdict.v2_fraction};
                report.covers_some_side = verdict.covered_id.has_value();
            }
            if (!inputs.svg_path.empty() && g.ambient_dim() == 2) {
                Simplex cell = inputs.cell->cell;
                std::sort(cell.begin(), cell.end());
                write_svg(inputs.svg_path, g, labeling, cells_touching_simplex(f, cell, g));
            }
        }
        if (g.ambient_dim() == 2) report.duality_pass = duality_check(g, labeling);
    }

    if (inputs.cloud && inputs.eps) {
        double e1 = (*inputs.eps)[0], e2 = (*inputs.eps)[1];
        report.nerve_rank = cech_rank_at_scale(*inputs.cloud, e1, 1);
        report.nerve_stable = stability_check(*inputs.cloud, e1, e2, 1);
        PointCloud trimmed = remove_labeled(*inputs.cloud, "U");
        report.nerve_rank_without_u = cech_rank_at_scale(trimmed, e1, 1);
    }
    return report;
}

ordered_json report_to_json(const Report& report) {
    ordered_json j;
    j["entry"] = report.entry;
    if (report.thm1) {
        j["thm1"] = {{"holds", report.thm1->holds}, {"kernel_dim", report.thm1->kernel_dim}};
    } else {
        j["thm1"] = nullptr;
    }
    if (report.thm2) {
        j["thm2"] = {{"holds", report.thm2->holds},
                     {"dimK", report.thm2->K.dim()},
                     {"dimJ", report.thm2->J.dim()}};
    } else {
        j["thm2"] = nullptr;
    }
    auto put = [&j](const char* key, const auto& opt) {
        if (opt)
            j[key] = *opt;
        else
            j[key] = nullptr;
    };
    put("injective_on_U", report.injective_on_U);
    put("components", report.components);
    put("incident", report.incident);
    put("closure_pass", report.closure_pass);
    if (report.coverage)
        j["coverage"] = {{"v1", (*report.coverage)[0]}, {"v2", (*report.coverage)[1]}};
    else
        j["coverage"] = nullptr;
    put("duality_pass", report.duality_pass);
    if (report.nerve_rank) {
        j["nerve"] = {{"rank", *report.nerve_rank},
                      {"rank_without_u", *report.nerve_rank_without_u},
                      {"stable", *report.nerve_stable}};
    }
    return j;
}

namespace {

double num(const ordered_json& j, const char* key, double fallback) {
    return j.contains(key) ? j[key].get<double>() : fallback;
}

int num_int(const ordered_json& j, const char* key, int fallback) {
    return j.contains(key) ? j[key].get<int>() : fallback;
}

constexpr double TAU = 2.0 * std::numbers::pi;

}  // namespace

SimplicialComplex resolve_complex(const ordered_json& ref, const std::string& base_dir) {
    if (ref.contains("file")) return load_complex((fs::path(base_dir) / ref["file"]).string());
    std::string name = ref.at("builder").get<std::string>();
    if (name == "circle") return circle(num_int(ref, "k", 12));
    if (name == "sphere") return sphere(num_int(ref, "n", 1));
    if (name == "disk_2d") return disk_2d(num_int(ref, "k", 6));
    if (name == "annulus") return annulus(num_int(ref, "k", 24));
    if (name == "theta_graph") return theta_graph(num_int(ref, "segments", 2));
    if (name == "circle_with_whisker")
        return circle_with_whisker(num_int(ref, "k", 12), num_int(ref, "w", 2));
    if (name == "torus") return torus(num_int(ref, "a", 4), num_int(ref, "b", 4));
    if (name == "klein_bottle") return klein_bottle(num_int(ref, "a", 4), num_int(ref, "b", 4));
    if (name == "boundary_of")
        return boundary_complex(resolve_complex(ref.at("of"), base_dir));
    throw std::runtime_error("corpus: unknown complex builder " + name);
}

ComplexPair resolve_pair(const ordered_json& ref, const std::string& base_dir,
                         std::optional<CellDesignation>* cell_from_file) {
    if (ref.contains("file")) {
        PairFile pf = load_pair((fs::path(base_dir) / ref["file"]).string());
        if (cell_from_file && pf.cell) *cell_from_file = pf.cell;
        return ComplexPair{std::move(pf.hat), std::move(pf.sub)};
    }
    if (ref.contains("cone_over")) {
        SimplicialComplex base = resolve_complex(ref["cone_over"], base_dir);
        auto [hat, inc] = cone(base);
        return ComplexPair{std::move(hat), std::move(base)};
    }
    ComplexPair pair;
    pair.hat = resolve_complex(ref.at("hat"), base_dir);
    if (ref.contains("sub") && ref["sub"].is_object() && ref["sub"].contains("boundary_of") &&
        ref["sub"]["boundary_of"].is_string() && ref["sub"]["boundary_of"] == "hat") {
        pair.sub = boundary_complex(pair.hat);
    } else {
        pair.sub = resolve_complex(ref.at("sub"), base_dir);
    }
    validate_pair(pair);
    return pair;
}

PlMap resolve_map(const ordered_json& ref, const std::string& base_dir,
                  const SimplicialComplex& domain) {
    if (ref.contains("file"))
        return load_map((fs::path(base_dir) / ref["file"]).string(), domain);
    std::string name = ref.at("builder").get<std::string>();
    PlMap map;
    map.domain = domain;
    map.ambient_dim = 2;
    map.coords.assign(domain.vertex_count(), {0, 0, 0});

    if (name == "circle_points" || name == "project_x") {
        int k = domain.vertex_count();
        double r = num(ref, "r", 0.8);
        for (int i = 0; i < k; ++i) {
            double a = TAU * i / k;
            map.coords[i] = name == "circle_points"
                                ? std::array<double, 3>{r * std::cos(a), r * std::sin(a), 0}
                                : std::array<double, 3>{r * std::cos(a), 0, 0};
        }
        return map;
    }
    if (name == "whisker_points") {
        int k = num_int(ref, "k", 12);
        int w = domain.vertex_count() - k;
        double r = num(ref, "r", 0.8), tip = num(ref, "tip", 1.2);
        for (int i = 0; i < k; ++i) {
            double a = TAU * i / k;
            map.coords[i] = {r * std::cos(a), r * std::sin(a), 0};
        }
        for (int i = 0; i < w; ++i)
            map.coords[k + i] = {r + (tip - r) * (i + 1) / w, 0, 0};
        return map;
    }
    if (name == "theta_points") {
        // matches theta_graph(segments): junctions 0, 1 then three blocks of
        // segments-1 intermediate vertices
        int s = num_int(ref, "segments", 2);
        double r = num(ref, "r", 0.8);
        map.coords[0] = {-r, 0, 0};
        map.coords[1] = {r, 0, 0};
        int next = 2;
        for (int arc = 0; arc < 3; ++arc)
            for (int t = 1; t < s; ++t) {
                double frac = static_cast<double>(t) / s;
                if (arc == 0) {
                    double a = std::numbers::pi * (1.0 - frac);
                    map.coords[next++] = {r * std::cos(a), r * std::sin(a), 0};
                } else if (arc == 1) {
                    map.coords[next++] = {-r + 2 * r * frac, 0, 0};
                } else {
                    double a = std::numbers::pi * (1.0 - frac);
                    map.coords[next++] = {r * std::cos(a), -r * std::sin(a), 0};
                }
            }
        return map;
    }
    if (name == "two_circles") {
        int k = domain.vertex_count() / 2;
        double r0 = num(ref, "r0", 0.8), r1 = num(ref, "r1", 0.5);
        for (int i = 0; i < k; ++i) {
            double a = TAU * i / k;
            map.coords[i] = {r0 * std::cos(a), r0 * std::sin(a), 0};
            map.coords[k + i] = {r1 * std::cos(a), r1 * std::sin(a), 0};
        }
        return map;
    }
    if (name == "torus_points") {
        int a = num_int(ref, "a", 8), b = num_int(ref, "b", 8);
        double big = num(ref, "R", 1.5), small = num(ref, "r", 0.5);
        map.ambient_dim = 3;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) {
                double u = TAU * i / a, v = TAU * j / b;
                map.coords[i * b + j] = {(big + small * std::cos(v)) * std::cos(u),
                                         (big + small * std::cos(v)) * std::sin(u),
                                         small * std::sin(v)};
            }
        return map;
    }
    throw std::runtime_error("corpus: unknown map builder " + name);
}

PlMap resolve_extension_map(const ordered_json& ref, const std::string& base_dir,
                            const ComplexPair& pair, const PlMap& base_map) {
    if (ref.contains("file"))
        return load_map((fs::path(base_dir) / ref["file"]).string(), pair.hat);
    std::string name = ref.at("builder").get<std::string>();
    PlMap map;
    map.domain = pair.hat;
    map.ambient_dim = base_map.ambient_dim;
    map.coords.assign(pair.hat.vertex_count(), {0, 0, 0});
    for (int v = 0; v < pair.sub.vertex_count(); ++v) map.coords[v] = base_map.coords[v];

    if (name == "same") {
        if (pair.hat.vertex_count() != pair.sub.vertex_count())
            throw std::runtime_error("corpus: 'same' extension needs equal vertex sets");
        return map;
    }
    if (name == "cone_extension") {
        if (pair.hat.vertex_count() != pair.sub.vertex_count() + 1)
            throw std::runtime_error("corpus: cone extension expects a single apex");
        auto apex = ref.at("apex");
        map.coords[pair.sub.vertex_count()] = {apex.at(0).get<double>(),
                                               apex.at(1).get<double>(),
                                               apex.size() > 2 ? apex.at(2).get<double>() : 0};
        return map;
    }
    if (name == "annulus_collapse") {
        // second ring lands on the image of the first: F(x, t) = f(x)
        int k = pair.sub.vertex_count();
        if (pair.hat.vertex_count() != 2 * k)
            throw std::runtime_error("corpus: annulus collapse expects two rings");
        for (int i = 0; i < k; ++i) map.coords[k + i] = base_map.coords[i];
        return map;
    }
    throw std::runtime_error("corpus: unknown extension builder " + name);
}

PointCloud resolve_cloud(const ordered_json& ref, const std::string& base_dir) {
    if (ref.contains("file"))
        return load_cloud((fs::path(base_dir) / ref["file"]).string());
    std::string name = ref.at("builder").get<std::string>();
    if (name == "warsaw")
        return warsaw_circle_sample(num_int(ref, "m", 2000), num(ref, "x_min", 0.05));
    if (name == "circle_sample") {
        int n = num_int(ref, "n", 100);
        double r = num(ref, "r", 1.0);
        PointCloud cloud;
        for (int i = 0; i < n; ++i) {
            double a = TAU * i / n;
            cloud.points.push_back({r * std::cos(a), r * std::sin(a)});
            cloud.labels.push_back("");
        }
        return cloud;
    }
    throw std::runtime_error("corpus: unknown cloud builder " + name);
}

GridSpec resolve_grid(const ordered_json& ref) {
    GridSpec spec;
    auto box = ref.at("box");
    if (box.size() == 4) {
        spec.ambient_dim = 2;
        spec.lo = {box[0].get<double>(), box[1].get<double>(), 0};
        spec.hi = {box[2].get<double>(), box[3].get<double>(), 0};
    } else if (box.size() == 6) {
        // planar bounds first, then the z range: x0 y0 x1 y1 z0 z1
        spec.ambient_dim = 3;
        spec.lo = {box[0].get<double>(), box[1].get<double>(), box[4].get<double>()};
        spec.hi = {box[2].get<double>(), box[3].get<double>(), box[5].get<double>()};
    } else {
        throw std::runtime_error("corpus: grid box needs 4 or 6 numbers");
    }
    spec.h = ref.at("h").get<double>();
    return spec;
}

CorpusEntry load_corpus_entry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("corpus: cannot open " + path);
    ordered_json j = ordered_json::parse(in);
    std::string base_dir = fs::path(path).parent_path().string();

    CorpusEntry entry;
    entry.source_path = path;
    entry.inputs.name = j.at("name").get<std::string>();

    std::optional<CellDesignation> cell_from_file;
    if (j.contains("pair"))
        entry.inputs.pair = resolve_pair(j["pair"], base_dir, &cell_from_file);
    if (j.contains("complex"))
        entry.inputs.complex = resolve_complex(j["complex"], base_dir);
    if (j.contains("cell")) {
        Simplex cell = j["cell"].get<std::vector<int>>();
        entry.inputs.cell = CellDesignation{std::move(cell)};
    } else if (cell_from_file) {
        entry.inputs.cell = cell_from_file;
    }

    const SimplicialComplex* x = entry.inputs.pair ? &entry.inputs.pair->sub
                                                   : (entry.inputs.complex ? &*entry.inputs.complex
                                                                           : nullptr);
    if (j.contains("map")) {
        if (!x) throw std::runtime_error("corpus: map without a complex in " + path);
        entry.inputs.map = resolve_map(j["map"], base_dir, *x);
    }
    if (j.contains("extension_map")) {
        if (!entry.inputs.pair || !entry.inputs.map)
            throw std::runtime_error("corpus: extension_map needs pair and map in " + path);
        entry.inputs.extension_map =
            resolve_extension_map(j["extension_map"], base_dir, *entry.inputs.pair,
                                  *entry.inputs.map);
    }
    if (j.contains("grid")) entry.inputs.grid = resolve_grid(j["grid"]);
    if (j.contains("cloud")) entry.inputs.cloud = resolve_cloud(j["cloud"], base_dir);
    if (j.contains("eps")) {
        auto eps = j["eps"];
        if (eps.size() != 2) throw std::runtime_error("corpus: eps needs two scales in " + path);
        entry.inputs.eps = {eps[0].get<double>(), eps[1].get<double>()};
    }
    if (j.contains("expect")) entry.expect = j["expect"];
    return entry;
}

std::vector<std::string> expectation_mismatches(const Report& report, const ordered_json& expect) {
    std::vector<std::string> bad;
    auto check = [&bad](const char* key, const auto& actual, const auto& wanted) {
        if (!actual) {
            bad.push_back(std::string(key) + ": not computed");
            return;
        }
        if (*actual != wanted) bad.push_back(key);
    };
    if (expect.contains("thm1"))
        check("thm1", report.thm1 ? std::optional<bool>(report.thm1->holds) : std::nullopt,
              expect["thm1"].get<bool>());
    if (expect.contains("kernel_dim"))
        check("kernel_dim",
              report.thm1 ? std::optional<int>(report.thm1->kernel_dim) : std::nullopt,
              expect["kernel_dim"].get<int>());
    if (expect.contains("thm2"))
        check("thm2", report.thm2 ? std::optional<bool>(report.thm2->holds) : std::nullopt,
              expect["thm2"].get<bool>());
    if (expect.contains("dim_k"))
        check("dim_k", report.thm2 ? std::optional<int>(report.thm2->K.dim()) : std::nullopt,
              expect["dim_k"].get<int>());
    if (expect.contains("dim_j"))
        check("dim_j", report.thm2 ? std::optional<int>(report.thm2->J.dim()) : std::nullopt,
              expect["dim_j"].get<int>());
    if (expect.contains("injective"))
        check("injective", report.injective_on_U, expect["injective"].get<bool>());
    if (expect.contains("components"))
        check("components", report.components, expect["components"].get<int>());
    if (expect.contains("incident"))
        check("incident", report.incident, expect["incident"].get<int>());
    if (expect.contains("closure"))
        check("closure", report.closure_pass, expect["closure"].get<bool>());
    if (expect.contains("coverage")) {
        std::string want = expect["coverage"].get<std::string>();
        if (!report.covers_some_side) {
            bad.push_back("coverage: not computed");
        } else if (want == "one") {
            if (!*report.covers_some_side) bad.push_back("coverage");
        } else if (want == "none") {
            if (*report.covers_some_side) bad.push_back("coverage");
        } else {
            bad.push_back("coverage: unknown expectation " + want);
        }
    }
    if (expect.contains("duality"))
        check("duality", report.duality_pass, expect["duality"].get<bool>());
    if (expect.contains("nerve_rank"))
        check("nerve_rank", report.nerve_rank, expect["nerve_rank"].get<int>());
    if (expect.contains("nerve_rank_without_u"))
        check("nerve_rank_without_u", report.nerve_rank_without_u,
              expect["nerve_rank_without_u"].get<int>());
    if (expect.contains("stable"))
        check("stable", report.nerve_stable, expect["stable"].get<bool>());
    return bad;
}

CorpusRunResult run_corpus(const std::string& dir) {
    std::vector<std::string> files;
    if (!fs::is_directory(dir)) throw std::runtime_error("corpus: not a directory: " + dir);
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path().string());
    if (files.empty()) throw std::runtime_error("corpus: no entries in " + dir);
    std::sort(files.begin(), files.end());

    CorpusRunResult result;
    ordered_json entries = ordered_json::array();
    for (const auto& file : files) {
        CorpusEntry entry = load_corpus_entry(file);
        Report report = run_entry(entry.inputs);
        ordered_json rj = report_to_json(report);
        std::vector<std::string> bad = expectation_mismatches(report, entry.expect);
        rj["expect_ok"] = bad.empty();
        if (!bad.empty()) {
            rj["mismatches"] = bad;
            result.failed_entries.push_back(entry.inputs.name);
        }
        entries.push_back(std::move(rj));
        result.entry_count++;
    }
    result.aggregate["entries"] = std::move(entries);
    result.aggregate["failed"] = result.failed_entries;
    return result;
}

}  // namespace sepchk
