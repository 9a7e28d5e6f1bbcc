#ifndef SEPCHK_CORPUS_HPP
#define SEPCHK_CORPUS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sepchk/homology.hpp"
#include "sepchk/nerve.hpp"
#include "sepchk/separation.hpp"
#include "sepchk/simplicial.hpp"
#include "sepchk/theorems.hpp"

namespace sepchk {

/// Everything one corpus entry (or one CLI invocation) can ask for.
struct RunInputs {
    std::string name;
    std::optional<SimplicialComplex> complex;  // X; pair.sub when a pair is given
    std::optional<ComplexPair> pair;
    std::optional<CellDesignation> cell;
    std::optional<PlMap> map;            // f on X
    std::optional<PlMap> extension_map;  // F on pair.hat
    std::optional<GridSpec> grid;
    std::optional<PointCloud> cloud;
    std::optional<std::array<double, 2>> eps;
    std::string svg_path;  // optional simulation snapshot
};

/// Machine-readable results for one entry.
struct Report {
    std::string entry;
    std::optional<Thm1Report> thm1;
    std::optional<Thm2Report> thm2;
    std::optional<bool> injective_on_U;
    std::optional<int> components;
    std::optional<int> incident;
    std::optional<bool> closure_pass;
    std::optional<std::array<double, 2>> coverage;  // fractions for V1, V2
    std::optional<bool> covers_some_side;
    std::optional<bool> duality_pass;
    std::optional<int> nerve_rank;
    std::optional<int> nerve_rank_without_u;
    std::optional<bool> nerve_stable;
};

/// Runs every check the inputs support, in a fixed order.
Report run_entry(const RunInputs& inputs);

nlohmann::ordered_json report_to_json(const Report& report);

/// Corpus entry file: inputs plus expected verdicts.
struct CorpusEntry {
    RunInputs inputs;
    nlohmann::ordered_json expect;
    std::string source_path;
};

CorpusEntry load_corpus_entry(const std::string& path);

/// Expectation keys compared when present: thm1, kernel_dim, thm2, dim_k,
/// dim_j, injective, components, incident, closure, coverage ("one"/"none"),
/// duality, nerve_rank, nerve_rank_without_u, stable.
std::vector<std::string> expectation_mismatches(const Report& report,
                                                const nlohmann::ordered_json& expect);

struct CorpusRunResult {
    nlohmann::ordered_json aggregate;
    std::vector<std::string> failed_entries;
    int entry_count = 0;
};

CorpusRunResult run_corpus(const std::string& dir);

// Named builders used by corpus entries ({"builder": ...} references).
SimplicialComplex resolve_complex(const nlohmann::ordered_json& ref, const std::string& base_dir);
ComplexPair resolve_pair(const nlohmann::ordered_json& ref, const std::string& base_dir,
                         std::optional<CellDesignation>* cell_from_file);
PlMap resolve_map(const nlohmann::ordered_json& ref, const std::string& base_dir,
                  const SimplicialComplex& domain);
PlMap resolve_extension_map(const nlohmann::ordered_json& ref, const std::string& base_dir,
                            const ComplexPair& pair, const PlMap& base_map);
PointCloud resolve_cloud(const nlohmann::ordered_json& ref, const std::string& base_dir);
GridSpec resolve_grid(const nlohmann::ordered_json& ref);

}  // namespace sepchk

#endif
