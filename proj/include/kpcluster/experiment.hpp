#ifndef KPCLUSTER_EXPERIMENT_HPP
#define KPCLUSTER_EXPERIMENT_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kpcluster/corpus.hpp"
#include "kpcluster/hac.hpp"
#include "kpcluster/keyphrase.hpp"
#include "kpcluster/similarity.hpp"

namespace kpcluster {

enum class Representation { fulltext, keyphrase };

Representation representation_from_name(std::string_view name);
std::string_view representation_name(Representation repr);

enum class OutputFormat { csv, jsonl, text };

OutputFormat format_from_name(std::string_view name);

struct ExperimentConfig {
    Representation representation = Representation::fulltext;
    StemmerKind stemming = StemmerKind::identity;
    int top_k = 10;
    std::vector<LinkageMethod> methods{kAllMethods,
                                       kAllMethods + std::size(kAllMethods)};
    std::vector<MeasureKind> measures{kAllMeasures,
                                      kAllMeasures + std::size(kAllMeasures)};
    int k_clusters = 0;  // 0 means "number of gold categories"
    std::set<std::string> stopwords;
    bool remove_latin = false;
};

// JSON file with optional keys: representation, stemming, top_k, methods,
// measures, k_clusters, stopwords_file (resolved against the config file's
// directory), remove_latin. Unknown keys are rejected.
ExperimentConfig load_experiment_config(const std::string& path);

struct Cell {
    bool ok = false;
    double purity = 0.0;
    double entropy = 0.0;
    std::string error;  // set when !ok
};

struct ResultTable {
    ExperimentConfig config;
    int n_documents = 0;
    int n_categories = 0;
    int k_clusters = 0;  // resolved cut size
    int vocab_size = 0;
    int n_empty_docs = 0;  // documents whose representation has no tokens
    std::vector<std::vector<Cell>> cells;  // [method index][measure index]

    // Wall-clock seconds; reported on stderr by the CLI, never serialized, so
    // repeated runs emit identical bytes. vectorize_seconds (vocabulary +
    // tf-idf weights) is part of prepare_seconds.
    double prepare_seconds = 0.0;
    double vectorize_seconds = 0.0;
    double grid_seconds = 0.0;
};

// Cleans every document, builds the configured representation, vectorizes,
// and fills one purity/entropy cell per (method, measure) pair. A failure is
// recorded in its cell; the remaining cells still run.
ResultTable run_experiment(const Corpus& corpus, const ExperimentConfig& config);

// Deterministic serialization. csv: one row per cell. jsonl: a metadata
// record followed by one record per cell. text: purity and entropy grids in
// the method-rows x measure-columns layout.
std::string emit_report(const ResultTable& table, OutputFormat format);

}  // namespace kpcluster

#endif  // KPCLUSTER_EXPERIMENT_HPP
