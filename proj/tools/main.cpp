#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kpcluster/corpus.hpp"
#include "kpcluster/evaluation.hpp"
#include "kpcluster/experiment.hpp"
#include "kpcluster/hac.hpp"
#include "kpcluster/keyphrase.hpp"
#include "kpcluster/parallel.hpp"
#include "kpcluster/similarity.hpp"
#include "kpcluster/vectorizer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct CommonOptions {
    std::string stem = "none";
    std::string stopwords_file;
    bool remove_latin = false;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--stem", stem, "Stemmer: light or none")
            ->check(CLI::IsMember({"light", "none", "identity"}));
        cmd.add_option("--stopwords", stopwords_file,
                       "Stop-word list file (UTF-8, one token per line)");
        cmd.add_flag("--remove-latin", remove_latin,
                     "Drop Latin-script tokens during cleaning");
    }

    kpcluster::CleaningConfig cleaning() const {
        kpcluster::CleaningConfig config;
        config.stemmer = kpcluster::stemmer_from_name(stem);
        config.remove_latin = remove_latin;
        if (!stopwords_file.empty()) {
            config.stopword_list = kpcluster::load_stopwords(stopwords_file);
        }
        return config;
    }
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string json_string(const std::string& value) {
    std::string out = "\"";
    for (char c : value) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buffer[8];
                    std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
                    out += buffer;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

int run_extract(const std::string& corpus_dir, int top_k,
                const CommonOptions& common, const std::string& out_path) {
    const kpcluster::Corpus corpus = kpcluster::load_corpus(corpus_dir);
    const kpcluster::CleaningConfig cleaning = common.cleaning();
    const kpcluster::ExtractionConfig extraction{top_k};

    std::vector<std::vector<kpcluster::Keyphrase>> results(
        corpus.documents.size());
    kpcluster::parallel_for(corpus.documents.size(), [&](std::size_t i) {
        results[i] = kpcluster::extract_keyphrases(
            corpus.documents[i].text, cleaning, extraction,
            corpus.documents[i].id);
    });

    // One JSON record per document: id plus the ranked phrases.
    std::string out;
    char buffer[48];
    for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
        out += "{\"doc\":" + json_string(corpus.documents[i].id);
        out += ",\"keyphrases\":[";
        for (std::size_t r = 0; r < results[i].size(); ++r) {
            if (r > 0) out += ',';
            std::string phrase;
            for (std::size_t w = 0; w < results[i][r].words.size(); ++w) {
                if (w > 0) phrase += ' ';
                phrase += results[i][r].words[w];
            }
            std::snprintf(buffer, sizeof(buffer),
                          ",\"score\":%.6f,\"units\":%d}",
                          results[i][r].score, results[i][r].unit_count);
            out += "{\"phrase\":" + json_string(phrase) + buffer;
        }
        out += "]}\n";
    }
    write_output(out_path, out);
    return kExitOk;
}

int run_cluster(const std::string& corpus_dir, const std::string& measure_name,
                const std::string& method_name, const std::string& repr_name,
                int k, int top_k, const CommonOptions& common,
                const std::string& dump_vectors_path,
                const std::string& dump_matrix_path,
                const std::string& dump_dendrogram_path) {
    const kpcluster::MeasureKind measure =
        kpcluster::measure_from_name(measure_name);
    const kpcluster::LinkageMethod method =
        kpcluster::method_from_name(method_name);
    const kpcluster::Representation repr =
        kpcluster::representation_from_name(repr_name);

    const kpcluster::Corpus corpus = kpcluster::load_corpus(corpus_dir);
    const kpcluster::CleaningConfig cleaning = common.cleaning();
    const kpcluster::ExtractionConfig extraction{top_k};

    std::vector<kpcluster::TokenSequence> reps(corpus.documents.size());
    kpcluster::parallel_for(corpus.documents.size(), [&](std::size_t i) {
        const kpcluster::Document& doc = corpus.documents[i];
        if (repr == kpcluster::Representation::fulltext) {
            kpcluster::TokenSequence merged;
            merged.source_id = doc.id;
            for (const kpcluster::TokenSequence& sentence :
                 kpcluster::clean_document(doc.text, cleaning, doc.id)) {
                merged.tokens.insert(merged.tokens.end(),
                                     sentence.tokens.begin(),
                                     sentence.tokens.end());
            }
            reps[i] = std::move(merged);
        } else {
            reps[i] = kpcluster::keyphrase_representation(doc.text, cleaning,
                                                          extraction, doc.id);
        }
    });

    const std::vector<kpcluster::TermVector> vectors =
        kpcluster::tfidf_vectors(reps);
    if (!dump_vectors_path.empty()) {
        write_output(dump_vectors_path, kpcluster::dump_vectors(vectors));
    }

    const kpcluster::DistanceMatrix matrix =
        kpcluster::distance_matrix(vectors, measure);
    if (!dump_matrix_path.empty()) {
        write_output(dump_matrix_path, kpcluster::dump_matrix(matrix, measure));
    }

    const kpcluster::Dendrogram dendrogram = kpcluster::cluster(matrix, method);
    if (!dump_dendrogram_path.empty()) {
        write_output(dump_dendrogram_path,
                     kpcluster::dump_dendrogram(dendrogram));
    }

    const int k_clusters =
        k > 0 ? k : static_cast<int>(corpus.categories.size());
    const std::vector<int> assignment = kpcluster::cut(dendrogram, k_clusters);

    kpcluster::LabeledAssignment labeled;
    labeled.q = static_cast<int>(corpus.categories.size());
    std::map<std::string, int> category_ids;
    for (std::size_t c = 0; c < corpus.categories.size(); ++c) {
        category_ids[corpus.categories[c]] = static_cast<int>(c);
    }
    for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
        labeled.clusters[corpus.documents[i].id] = assignment[i];
        labeled.labels[corpus.documents[i].id] =
            category_ids[corpus.documents[i].category];
    }
    const kpcluster::EvalReport report =
        kpcluster::evaluate(labeled, k_clusters);

    std::string out;
    for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
        out += corpus.documents[i].id + " " + std::to_string(assignment[i]) +
               "\n";
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "purity %.6f\nentropy %.6f\n",
                  report.overall_purity, report.overall_entropy);
    out += buffer;
    std::cout << out;
    return kExitOk;
}

int run_experiment_cmd(const std::string& corpus_dir,
                       const std::string& config_path,
                       const std::string& format_name,
                       const CLI::App& cmd, const CommonOptions& common,
                       const std::string& repr_name, int top_k, int k) {
    kpcluster::ExperimentConfig config;
    if (!config_path.empty()) {
        config = kpcluster::load_experiment_config(config_path);
    }
    // CLI flags override file values.
    if (cmd.count("--repr") > 0) {
        config.representation = kpcluster::representation_from_name(repr_name);
    }
    if (cmd.count("--stem") > 0) {
        config.stemming = kpcluster::stemmer_from_name(common.stem);
    }
    if (cmd.count("--top-k") > 0) config.top_k = top_k;
    if (cmd.count("--k") > 0) config.k_clusters = k;
    if (cmd.count("--stopwords") > 0) {
        config.stopwords = kpcluster::load_stopwords(common.stopwords_file);
    }
    if (cmd.count("--remove-latin") > 0) config.remove_latin = true;

    const kpcluster::OutputFormat format =
        kpcluster::format_from_name(format_name);
    const kpcluster::Corpus corpus = kpcluster::load_corpus(corpus_dir);
    const kpcluster::ResultTable table =
        kpcluster::run_experiment(corpus, config);
    std::cout << kpcluster::emit_report(table, format);
    std::fprintf(stderr, "prepare %.3fs (vectorize %.3fs) grid %.3fs\n",
                 table.prepare_seconds, table.vectorize_seconds,
                 table.grid_seconds);
    return kExitOk;
}

int run_stats(const std::string& corpus_dir, const CommonOptions& common) {
    const kpcluster::Corpus corpus = kpcluster::load_corpus(corpus_dir);
    const std::vector<kpcluster::CategoryStats> rows =
        kpcluster::corpus_stats(corpus, common.cleaning());

    std::size_t width = std::string("category").size();
    for (const kpcluster::CategoryStats& row : rows) {
        width = std::max(width, row.category.size());
    }
    std::string out = "category" + std::string(width - 8, ' ') +
                      "  texts  terms\n";
    long long total_texts = 0;
    long long total_terms = 0;
    for (const kpcluster::CategoryStats& row : rows) {
        out += row.category + std::string(width - row.category.size(), ' ') +
               "  " + std::to_string(row.n_texts) + "  " +
               std::to_string(row.n_terms) + "\n";
        total_texts += row.n_texts;
        total_terms += row.n_terms;
    }
    out += "total" + std::string(width - 5, ' ') + "  " +
           std::to_string(total_texts) + "  " + std::to_string(total_terms) +
           "\n";
    std::cout << out;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Keyphrase extraction and document clustering toolkit"};
    app.require_subcommand(1);

    // extract
    auto* extract = app.add_subcommand(
        "extract", "Extract ranked keyphrases per document");
    std::string extract_dir;
    int extract_top_k = 10;
    std::string extract_out;
    CommonOptions extract_common;
    extract->add_option("corpus_dir", extract_dir, "Corpus root directory")
        ->required();
    extract->add_option("--top-k", extract_top_k, "Keyphrases per document")
        ->check(CLI::PositiveNumber);
    extract->add_option("--out", extract_out, "Output file (default stdout)");
    extract_common.add_to(*extract);

    // cluster
    auto* cluster_cmd = app.add_subcommand(
        "cluster", "Cluster the corpus once and report purity/entropy");
    std::string cluster_dir;
    std::string cluster_measure;
    std::string cluster_method;
    std::string cluster_repr = "fulltext";
    int cluster_k = 0;
    int cluster_top_k = 10;
    std::string cluster_dump_vectors;
    std::string cluster_dump_matrix;
    std::string cluster_dump_dendrogram;
    CommonOptions cluster_common;
    cluster_cmd->add_option("corpus_dir", cluster_dir, "Corpus root directory")
        ->required();
    cluster_cmd
        ->add_option("--measure", cluster_measure,
                     "euclidean, cosine, jaccard, pearson or avg_kl")
        ->required();
    cluster_cmd
        ->add_option("--method", cluster_method,
                     "single, complete, upgma, wpgma, upgmc, wpgmc or ward")
        ->required();
    cluster_cmd->add_option("--repr", cluster_repr,
                            "Representation: fulltext or keyphrase");
    cluster_cmd->add_option("--k", cluster_k,
                            "Cluster count (default: number of categories)");
    cluster_cmd->add_option("--top-k", cluster_top_k,
                            "Keyphrases per document (keyphrase repr)");
    cluster_cmd->add_option("--dump-vectors", cluster_dump_vectors,
                            "Write tf-idf vectors to a file");
    cluster_cmd->add_option("--dump-matrix", cluster_dump_matrix,
                            "Write the distance matrix to a file");
    cluster_cmd->add_option("--dump-dendrogram", cluster_dump_dendrogram,
                            "Write the merge sequence to a file");
    cluster_common.add_to(*cluster_cmd);

    // experiment
    auto* experiment = app.add_subcommand(
        "experiment", "Run the method x measure grid and print a report");
    std::string experiment_dir;
    std::string experiment_config;
    std::string experiment_format = "text";
    std::string experiment_repr = "fulltext";
    int experiment_top_k = 10;
    int experiment_k = 0;
    CommonOptions experiment_common;
    experiment->add_option("corpus_dir", experiment_dir, "Corpus root directory")
        ->required();
    experiment->add_option("--config", experiment_config,
                           "Experiment config (JSON)");
    experiment
        ->add_option("--format", experiment_format, "csv, jsonl or text")
        ->check(CLI::IsMember({"csv", "jsonl", "text"}));
    experiment->add_option("--repr", experiment_repr,
                           "Representation: fulltext or keyphrase");
    experiment->add_option("--top-k", experiment_top_k,
                           "Keyphrases per document");
    experiment->add_option("--k", experiment_k, "Cluster count");
    experiment_common.add_to(*experiment);

    // stats
    auto* stats = app.add_subcommand(
        "stats", "Per-category document and term counts");
    std::string stats_dir;
    CommonOptions stats_common;
    stats->add_option("corpus_dir", stats_dir, "Corpus root directory")
        ->required();
    stats_common.add_to(*stats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(extract)) {
            return run_extract(extract_dir, extract_top_k, extract_common,
                               extract_out);
        }
        if (app.got_subcommand(cluster_cmd)) {
            return run_cluster(cluster_dir, cluster_measure, cluster_method,
                               cluster_repr, cluster_k, cluster_top_k,
                               cluster_common, cluster_dump_vectors,
                               cluster_dump_matrix, cluster_dump_dendrogram);
        }
        if (app.got_subcommand(experiment)) {
            return run_experiment_cmd(experiment_dir, experiment_config,
                                      experiment_format, *experiment,
                                      experiment_common, experiment_repr,
                                      experiment_top_k, experiment_k);
        }
        if (app.got_subcommand(stats)) {
            return run_stats(stats_dir, stats_common);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
