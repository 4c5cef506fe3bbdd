#include "kpcluster/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "kpcluster/unicode.hpp"

namespace fs = std::filesystem;

namespace kpcluster {

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

}  // namespace

Corpus load_corpus(const std::string& root_path) {
    const fs::path root(root_path);
    if (!fs::is_directory(root)) {
        throw std::runtime_error("corpus root is not a directory: " + root_path);
    }

    std::vector<fs::path> category_dirs;
    for (const fs::directory_entry& entry : fs::directory_iterator(root)) {
        if (entry.is_directory()) category_dirs.push_back(entry.path());
    }
    if (category_dirs.empty()) {
        throw std::runtime_error("no category directories under " + root_path);
    }
    std::sort(category_dirs.begin(), category_dirs.end());

    Corpus corpus;
    for (const fs::path& dir : category_dirs) {
        const std::string category = dir.filename().string();
        std::vector<fs::path> files;
        for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        if (files.empty()) {
            throw std::runtime_error("category directory is empty: " + dir.string());
        }
        std::sort(files.begin(), files.end());

        for (const fs::path& file : files) {
            std::string text = read_file(file);
            try {
                utf8_decode(text);
            } catch (const std::invalid_argument& e) {
                throw std::runtime_error("cannot decode " + file.string() + ": " +
                                         e.what());
            }
            corpus.documents.push_back(Document{
                category + "/" + file.filename().string(), category,
                std::move(text)});
        }
        corpus.categories.push_back(category);
    }
    return corpus;
}

std::vector<CategoryStats> corpus_stats(const Corpus& corpus,
                                        const CleaningConfig& config) {
    CleaningConfig unstemmed = config;
    unstemmed.stemmer = StemmerKind::identity;

    std::vector<CategoryStats> rows;
    rows.reserve(corpus.categories.size());
    for (const std::string& category : corpus.categories) {
        rows.push_back(CategoryStats{category, 0, 0});
    }
    for (const Document& doc : corpus.documents) {
        auto row = std::find_if(rows.begin(), rows.end(),
                                [&](const CategoryStats& r) {
                                    return r.category == doc.category;
                                });
        ++row->n_texts;
        for (const TokenSequence& seq :
             clean_document(doc.text, unstemmed, doc.id)) {
            row->n_terms += static_cast<long long>(seq.tokens.size());
        }
    }
    return rows;
}

}  // namespace kpcluster
