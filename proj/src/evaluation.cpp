#include "kpcluster/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace kpcluster {

EvalReport evaluate(const LabeledAssignment& assignment, int expected_k) {
    if (assignment.clusters.empty()) {
        throw std::invalid_argument("empty assignment");
    }
    if (assignment.clusters.size() != assignment.labels.size()) {
        throw std::invalid_argument("assignment and labels disagree");
    }

    std::set<int> categories;
    for (const auto& [doc, label] : assignment.labels) categories.insert(label);
    const int q = assignment.q > 0 ? assignment.q
                                   : static_cast<int>(categories.size());

    // cluster id -> category -> member count
    std::map<int, std::map<int, int>> tallies;
    for (const auto& [doc, cluster_id] : assignment.clusters) {
        auto label_it = assignment.labels.find(doc);
        if (label_it == assignment.labels.end()) {
            throw std::invalid_argument("assignment and labels disagree");
        }
        ++tallies[cluster_id][label_it->second];
    }
    if (expected_k > 0) {
        for (int id = 0; id < expected_k; ++id) {
            if (tallies.find(id) == tallies.end()) {
                throw std::invalid_argument("empty cluster");
            }
        }
    }

    EvalReport report;
    const double n = static_cast<double>(assignment.clusters.size());
    for (const auto& [cluster_id, by_category] : tallies) {
        int size = 0;
        int largest = 0;
        for (const auto& [category, count] : by_category) {
            size += count;
            largest = std::max(largest, count);
        }
        double entropy = 0.0;
        if (q > 1) {
            for (const auto& [category, count] : by_category) {
                const double p = static_cast<double>(count) / size;
                if (p > 0.0) entropy -= p * std::log(p);
            }
            entropy /= std::log(static_cast<double>(q));
            // Uniform clusters can land an ulp above the mathematical
            // maximum of 1; keep the normalized value in range.
            entropy = std::clamp(entropy, 0.0, 1.0);
        }
        const double purity = static_cast<double>(largest) / size;
        report.per_cluster.push_back(ClusterEval{cluster_id, size, purity, entropy});
        report.overall_purity += size / n * purity;
        report.overall_entropy += size / n * entropy;
    }
    report.overall_purity = std::clamp(report.overall_purity, 0.0, 1.0);
    report.overall_entropy = std::clamp(report.overall_entropy, 0.0, 1.0);
    return report;
}

}  // namespace kpcluster
