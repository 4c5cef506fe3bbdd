#ifndef KPCLUSTER_EVALUATION_HPP
#define KPCLUSTER_EVALUATION_HPP

#include <map>
#include <string>
#include <vector>

namespace kpcluster {

// A clustering next to its gold categories, keyed by document id.
struct LabeledAssignment {
    std::map<std::string, int> clusters;  // doc -> cluster id
    std::map<std::string, int> labels;    // doc -> category id
    int q = 0;  // number of categories; 0 means "count distinct label values"
};

struct ClusterEval {
    int cluster_id = 0;
    int size = 0;
    double purity = 0.0;
    double entropy = 0.0;
};

struct EvalReport {
    std::vector<ClusterEval> per_cluster;  // ordered by cluster id
    double overall_purity = 0.0;           // size-weighted means
    double overall_entropy = 0.0;
};

// Per-cluster purity = largest category share; per-cluster entropy =
// -(1/ln q) sum p ln p over category proportions (0 ln 0 == 0; q = 1 gives
// entropy 0). Overall values are size-weighted means. Throws
// std::invalid_argument when the two maps disagree on document ids, when the
// assignment is empty, or when expected_k > 0 and some id in [0, expected_k)
// has no documents ("empty cluster").
EvalReport evaluate(const LabeledAssignment& assignment, int expected_k = 0);

}  // namespace kpcluster

#endif  // KPCLUSTER_EVALUATION_HPP
