#ifndef KPCLUSTER_CORPUS_HPP
#define KPCLUSTER_CORPUS_HPP

#include <string>
#include <vector>

#include "kpcluster/text_pipeline.hpp"

namespace kpcluster {

struct Document {
    std::string id;        // "<category>/<filename>"
    std::string category;  // subdirectory name
    std::string text;      // raw UTF-8 contents
};

struct Corpus {
    std::vector<Document> documents;      // grouped by category, names sorted
    std::vector<std::string> categories;  // distinct, sorted
};

// Reads one subdirectory per category, each holding UTF-8 text files. Throws
// std::runtime_error naming the offending path for a missing root, a root
// with no category directories, an empty category directory, or a file that
// does not decode as UTF-8.
Corpus load_corpus(const std::string& root_path);

struct CategoryStats {
    std::string category;
    int n_texts = 0;
    long long n_terms = 0;  // cleaned token count, stemming disabled
};

std::vector<CategoryStats> corpus_stats(const Corpus& corpus,
                                        const CleaningConfig& config);

}  // namespace kpcluster

#endif  // KPCLUSTER_CORPUS_HPP
