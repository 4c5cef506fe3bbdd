#ifndef KPCLUSTER_HAC_HPP
#define KPCLUSTER_HAC_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kpcluster/similarity.hpp"

namespace kpcluster {

enum class LinkageMethod { single, complete, upgma, wpgma, upgmc, wpgmc, ward };

inline constexpr LinkageMethod kAllMethods[] = {
    LinkageMethod::single, LinkageMethod::complete, LinkageMethod::upgma,
    LinkageMethod::wpgma,  LinkageMethod::upgmc,    LinkageMethod::wpgmc,
    LinkageMethod::ward};

// Accepts "single", "complete", "upgma", "wpgma", "upgmc", "wpgmc", "ward".
// Throws std::invalid_argument otherwise.
LinkageMethod method_from_name(std::string_view name);
std::string_view method_name(LinkageMethod method);
// Row label used in the human-readable result table.
std::string_view method_display_name(LinkageMethod method);

// d(k -> rs) = alpha_r d(k,r) + alpha_s d(k,s) + beta d(r,s)
//            + gamma |d(k,r) - d(k,s)|, with the method's coefficients:
//   single    1/2, 1/2, 0, -1/2
//   complete  1/2, 1/2, 0, +1/2
//   upgma     n_r/(n_r+n_s), n_s/(n_r+n_s), 0, 0
//   wpgma     1/2, 1/2, 0, 0
//   upgmc     n_r/(n_r+n_s), n_s/(n_r+n_s), -n_r n_s/(n_r+n_s)^2, 0
//   wpgmc     1/2, 1/2, -1/4, 0
//   ward      (n_r+n_k)/(n_r+n_s+n_k), (n_s+n_k)/(n_r+n_s+n_k),
//             -n_k/(n_r+n_s+n_k), 0
double lance_williams(double d_kr, double d_ks, double d_rs, int n_r, int n_s,
                      int n_k, LinkageMethod method);

// One agglomeration. Cluster ids: leaves are 0..n-1 and the merge at step t
// creates id n + t; left < right always.
struct MergeStep {
    int step = 0;
    int left = 0;
    int right = 0;
    double distance = 0.0;
    int new_size = 0;
};

struct Dendrogram {
    int n_leaves = 0;
    std::vector<MergeStep> steps;  // exactly n_leaves - 1 entries
};

// Repeatedly merges the active pair at minimum distance (ties: the
// lexicographically lowest id pair) and updates distances to the new cluster
// through the recurrence. Throws std::invalid_argument on an invalid matrix
// (n < 2, asymmetry, nonzero diagonal, non-finite entries).
Dendrogram cluster(const DistanceMatrix& matrix, LinkageMethod method);

// Undoes the last k-1 merges; each surviving component becomes a cluster.
// Returns leaf -> cluster id, ids 0..k-1 ordered by each cluster's smallest
// leaf. Throws std::invalid_argument for k outside [1, n_leaves].
std::vector<int> cut(const Dendrogram& dendrogram, int k);

// One merge per line: `step left right distance size`, distances at 9
// significant digits.
std::string dump_dendrogram(const Dendrogram& dendrogram);

}  // namespace kpcluster

#endif  // KPCLUSTER_HAC_HPP
