#include "kpcluster/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "kpcluster/evaluation.hpp"
#include "kpcluster/parallel.hpp"
#include "kpcluster/vectorizer.hpp"

namespace kpcluster {

namespace {

using json = nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string format_double(const char* format, double value) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), format, value);
    return buffer;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string json_string(const std::string& value) {
    return json(value).dump();
}

}  // namespace

Representation representation_from_name(std::string_view name) {
    if (name == "fulltext") return Representation::fulltext;
    if (name == "keyphrase") return Representation::keyphrase;
    throw std::invalid_argument("unknown representation: " + std::string(name));
}

std::string_view representation_name(Representation repr) {
    return repr == Representation::fulltext ? "fulltext" : "keyphrase";
}

OutputFormat format_from_name(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "jsonl") return OutputFormat::jsonl;
    if (name == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown format: " + std::string(name));
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    json parsed;
    try {
        in >> parsed;
    } catch (const json::exception& e) {
        throw std::runtime_error("cannot parse config " + path + ": " + e.what());
    }
    if (!parsed.is_object()) {
        throw std::runtime_error("config must be a JSON object: " + path);
    }

    ExperimentConfig config;
    for (const auto& [key, value] : parsed.items()) {
        if (key == "representation") {
            config.representation =
                representation_from_name(value.get<std::string>());
        } else if (key == "stemming") {
            config.stemming = stemmer_from_name(value.get<std::string>());
        } else if (key == "top_k") {
            config.top_k = value.get<int>();
        } else if (key == "methods") {
            config.methods.clear();
            for (const auto& name : value) {
                config.methods.push_back(method_from_name(name.get<std::string>()));
            }
        } else if (key == "measures") {
            config.measures.clear();
            for (const auto& name : value) {
                config.measures.push_back(
                    measure_from_name(name.get<std::string>()));
            }
        } else if (key == "k_clusters") {
            config.k_clusters = value.get<int>();
        } else if (key == "stopwords_file") {
            const std::filesystem::path stopword_path(value.get<std::string>());
            const auto resolved =
                stopword_path.is_absolute()
                    ? stopword_path
                    : std::filesystem::path(path).parent_path() / stopword_path;
            config.stopwords = load_stopwords(resolved.string());
        } else if (key == "remove_latin") {
            config.remove_latin = value.get<bool>();
        } else {
            throw std::runtime_error("unknown config key: " + key);
        }
    }
    return config;
}

ResultTable run_experiment(const Corpus& corpus, const ExperimentConfig& config) {
    if (config.methods.empty()) throw std::invalid_argument("no methods");
    if (config.measures.empty()) throw std::invalid_argument("no measures");
    if (config.top_k < 1) throw std::invalid_argument("top_k must be >= 1");
    if (corpus.documents.empty()) throw std::invalid_argument("empty corpus");

    ResultTable table;
    table.config = config;
    table.n_documents = static_cast<int>(corpus.documents.size());
    table.n_categories = static_cast<int>(corpus.categories.size());
    table.k_clusters =
        config.k_clusters > 0 ? config.k_clusters : table.n_categories;
    table.cells.assign(config.methods.size(),
                       std::vector<Cell>(config.measures.size()));

    CleaningConfig cleaning;
    cleaning.stopword_list = config.stopwords;
    cleaning.remove_latin = config.remove_latin;
    cleaning.stemmer = config.stemming;
    const ExtractionConfig extraction{config.top_k};

    const auto prepare_start = std::chrono::steady_clock::now();
    std::vector<TokenSequence> reps(corpus.documents.size());
    parallel_for(corpus.documents.size(), [&](std::size_t i) {
        const Document& doc = corpus.documents[i];
        if (config.representation == Representation::fulltext) {
            TokenSequence merged;
            merged.source_id = doc.id;
            for (TokenSequence& sentence :
                 clean_document(doc.text, cleaning, doc.id)) {
                merged.tokens.insert(merged.tokens.end(),
                                     std::make_move_iterator(sentence.tokens.begin()),
                                     std::make_move_iterator(sentence.tokens.end()));
            }
            reps[i] = std::move(merged);
        } else {
            reps[i] = keyphrase_representation(doc.text, cleaning, extraction,
                                               doc.id);
        }
    });
    for (const TokenSequence& rep : reps) {
        if (rep.tokens.empty()) ++table.n_empty_docs;
    }

    auto fail_all = [&](const std::string& message) {
        for (auto& row : table.cells) {
            for (Cell& cell : row) cell.error = message;
        }
    };

    std::vector<TermVector> vectors;
    const auto vectorize_start = std::chrono::steady_clock::now();
    try {
        const Vocabulary vocab = Vocabulary::build(reps);
        table.vocab_size = vocab.size();
        vectors = tfidf_vectors(reps, vocab);
    } catch (const std::exception& e) {
        table.vectorize_seconds = seconds_since(vectorize_start);
        table.prepare_seconds = seconds_since(prepare_start);
        fail_all(e.what());
        return table;
    }
    table.vectorize_seconds = seconds_since(vectorize_start);
    table.prepare_seconds = seconds_since(prepare_start);

    std::map<std::string, int> labels;
    std::map<std::string, int> category_ids;
    for (std::size_t c = 0; c < corpus.categories.size(); ++c) {
        category_ids[corpus.categories[c]] = static_cast<int>(c);
    }
    for (const Document& doc : corpus.documents) {
        labels[doc.id] = category_ids[doc.category];
    }

    const auto grid_start = std::chrono::steady_clock::now();
    std::vector<DistanceMatrix> matrices(config.measures.size());
    std::vector<std::string> matrix_errors(config.measures.size());
    parallel_for(config.measures.size(), [&](std::size_t si) {
        try {
            matrices[si] = distance_matrix(vectors, config.measures[si]);
        } catch (const std::exception& e) {
            matrix_errors[si] = e.what();
        }
    });

    const std::size_t n_cells = config.methods.size() * config.measures.size();
    parallel_for(n_cells, [&](std::size_t flat) {
        const std::size_t mi = flat / config.measures.size();
        const std::size_t si = flat % config.measures.size();
        Cell& cell = table.cells[mi][si];
        if (!matrix_errors[si].empty()) {
            cell.error = matrix_errors[si];
            return;
        }
        try {
            const Dendrogram dendrogram =
                cluster(matrices[si], config.methods[mi]);
            const std::vector<int> assignment =
                cut(dendrogram, table.k_clusters);
            LabeledAssignment labeled;
            labeled.labels = labels;
            labeled.q = table.n_categories;
            for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
                labeled.clusters[corpus.documents[i].id] = assignment[i];
            }
            const EvalReport report = evaluate(labeled, table.k_clusters);
            cell.purity = report.overall_purity;
            cell.entropy = report.overall_entropy;
            cell.ok = true;
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
    });
    table.grid_seconds = seconds_since(grid_start);
    return table;
}

namespace {

std::string emit_csv(const ResultTable& table) {
    std::string out = "method,measure,purity,entropy,error\n";
    for (std::size_t mi = 0; mi < table.config.methods.size(); ++mi) {
        for (std::size_t si = 0; si < table.config.measures.size(); ++si) {
            const Cell& cell = table.cells[mi][si];
            out += method_name(table.config.methods[mi]);
            out += ',';
            out += measure_name(table.config.measures[si]);
            out += ',';
            if (cell.ok) {
                out += format_double("%.6f", cell.purity);
                out += ',';
                out += format_double("%.6f", cell.entropy);
                out += ',';
            } else {
                out += ",,";
                out += csv_field(cell.error);
            }
            out += '\n';
        }
    }
    return out;
}

std::string emit_jsonl(const ResultTable& table) {
    std::string out = "{\"type\":\"config\",\"representation\":";
    out += json_string(std::string(representation_name(table.config.representation)));
    out += ",\"stemming\":";
    out += json_string(std::string(stemmer_name(table.config.stemming)));
    out += ",\"top_k\":" + std::to_string(table.config.top_k);
    out += ",\"k_clusters\":" + std::to_string(table.k_clusters);
    out += ",\"remove_latin\":";
    out += table.config.remove_latin ? "true" : "false";
    out += ",\"stopwords\":" + std::to_string(table.config.stopwords.size());
    out += ",\"documents\":" + std::to_string(table.n_documents);
    out += ",\"empty_documents\":" + std::to_string(table.n_empty_docs);
    out += ",\"categories\":" + std::to_string(table.n_categories);
    out += ",\"vocabulary\":" + std::to_string(table.vocab_size);
    out += ",\"evaluation\":\"size-weighted\",\"runs\":\"single-deterministic\"}\n";
    for (std::size_t mi = 0; mi < table.config.methods.size(); ++mi) {
        for (std::size_t si = 0; si < table.config.measures.size(); ++si) {
            const Cell& cell = table.cells[mi][si];
            out += "{\"type\":\"cell\",\"method\":";
            out += json_string(std::string(method_name(table.config.methods[mi])));
            out += ",\"measure\":";
            out += json_string(std::string(measure_name(table.config.measures[si])));
            if (cell.ok) {
                out += ",\"purity\":" + format_double("%.6f", cell.purity);
                out += ",\"entropy\":" + format_double("%.6f", cell.entropy);
            } else {
                out += ",\"error\":" + json_string(cell.error);
            }
            out += "}\n";
        }
    }
    return out;
}

std::string emit_text(const ResultTable& table) {
    std::string out;
    out += "representation: ";
    out += representation_name(table.config.representation);
    out += "\nstemming: ";
    out += stemmer_name(table.config.stemming);
    out += "\ntop_k: " + std::to_string(table.config.top_k);
    out += "\nk_clusters: " + std::to_string(table.k_clusters);
    out += "\ndocuments: " + std::to_string(table.n_documents) +
           " (empty: " + std::to_string(table.n_empty_docs) + ")";
    out += "\ncategories: " + std::to_string(table.n_categories);
    out += "\nvocabulary: " + std::to_string(table.vocab_size) + " terms";
    out += "\nevaluation: size-weighted purity/entropy, single deterministic run\n";

    std::size_t label_width = 0;
    for (LinkageMethod method : table.config.methods) {
        label_width = std::max(label_width, method_display_name(method).size());
    }
    std::vector<std::size_t> widths;
    for (MeasureKind measure : table.config.measures) {
        widths.push_back(std::max<std::size_t>(
            measure_display_name(measure).size(), 5));
    }

    auto grid = [&](const char* title, auto&& value_of) {
        out += '\n';
        out += title;
        out += '\n';
        out += std::string(label_width, ' ');
        for (std::size_t si = 0; si < table.config.measures.size(); ++si) {
            const std::string_view name =
                measure_display_name(table.config.measures[si]);
            out += "  ";
            out += name;
            out += std::string(widths[si] - name.size(), ' ');
        }
        out += '\n';
        for (std::size_t mi = 0; mi < table.config.methods.size(); ++mi) {
            const std::string_view name =
                method_display_name(table.config.methods[mi]);
            out += name;
            out += std::string(label_width - name.size(), ' ');
            for (std::size_t si = 0; si < table.config.measures.size(); ++si) {
                const Cell& cell = table.cells[mi][si];
                const std::string value =
                    cell.ok ? format_double("%.3f", value_of(cell))
                            : std::string("err");
                out += "  ";
                out += value;
                out += std::string(widths[si] - value.size(), ' ');
            }
            out += '\n';
        }
    };
    grid("Purity", [](const Cell& cell) { return cell.purity; });
    grid("Entropy", [](const Cell& cell) { return cell.entropy; });

    bool any_error = false;
    for (const auto& row : table.cells) {
        for (const Cell& cell : row) {
            if (!cell.ok) any_error = true;
        }
    }
    if (any_error) {
        out += "\nerrors\n";
        for (std::size_t mi = 0; mi < table.config.methods.size(); ++mi) {
            for (std::size_t si = 0; si < table.config.measures.size(); ++si) {
                const Cell& cell = table.cells[mi][si];
                if (cell.ok) continue;
                out += "  ";
                out += method_name(table.config.methods[mi]);
                out += '/';
                out += measure_name(table.config.measures[si]);
                out += ": " + cell.error + "\n";
            }
        }
    }
    return out;
}

}  // namespace

std::string emit_report(const ResultTable& table, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: return emit_csv(table);
        case OutputFormat::jsonl: return emit_jsonl(table);
        case OutputFormat::text: return emit_text(table);
    }
    throw std::invalid_argument("unknown output format");
}

}  // namespace kpcluster
