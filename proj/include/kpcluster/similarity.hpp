#ifndef KPCLUSTER_SIMILARITY_HPP
#define KPCLUSTER_SIMILARITY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kpcluster/vectorizer.hpp"

namespace kpcluster {

enum class MeasureKind { euclidean, cosine, jaccard, pearson, avg_kl };

inline constexpr MeasureKind kAllMeasures[] = {
    MeasureKind::euclidean, MeasureKind::cosine, MeasureKind::jaccard,
    MeasureKind::pearson, MeasureKind::avg_kl};

// Accepts "euclidean", "cosine", "jaccard", "pearson", "avg_kl" and the alias
// "kld". Throws std::invalid_argument otherwise.
MeasureKind measure_from_name(std::string_view name);
std::string_view measure_name(MeasureKind kind);
// Column header used in the human-readable result table.
std::string_view measure_display_name(MeasureKind kind);

// sqrt of the sum over terms of the squared weight differences.
double euclidean(const TermVector& a, const TermVector& b);

// a.b / (|a| |b|), in [0, 1]. Throws std::domain_error("undefined cosine") if
// either vector is zero.
double cosine(const TermVector& a, const TermVector& b);

// a.b / (|a|^2 + |b|^2 - a.b), in [0, 1]. Throws
// std::domain_error("undefined jaccard") if both vectors are zero.
double jaccard(const TermVector& a, const TermVector& b);

// Correlation over all m vocabulary dimensions, zero coordinates included:
// [m sum(w_ta w_tb) - TF_a TF_b] / sqrt([m sum(w_ta^2) - TF_a^2][m sum(w_tb^2)
// - TF_b^2]) with TF the plain weight sum. In [-1, 1]. Throws
// std::domain_error("undefined pearson") if a vector is constant across the m
// dimensions.
double pearson(const TermVector& a, const TermVector& b);

// Symmetric averaged divergence: sum over terms with w_ta + w_tb > 0 of
// pi1 D(w_ta || w_t) + pi2 D(w_tb || w_t), where pi1 = w_ta/(w_ta + w_tb),
// pi2 = 1 - pi1, w_t = pi1 w_ta + pi2 w_tb, D(x||y) = x ln(x/y) and
// 0 ln 0 == 0. Never negative, 0 for identical vectors.
double avg_kl(const TermVector& a, const TermVector& b);

double measure(MeasureKind kind, const TermVector& a, const TermVector& b);

// euclidean and avg_kl pass through; cosine and jaccard map to 1 - value;
// pearson maps to 1 - value for value >= 0 and |value| below 0.
double to_distance(MeasureKind kind, double value);

struct DistanceMatrix {
    int n = 0;
    std::vector<double> entries;  // row-major n*n

    double at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(j)];
    }
    double& at(int i, int j) {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(j)];
    }
};

// Pairwise to_distance(kind, measure(i, j)) with a zero diagonal. Pairs where
// the measure is undefined (zero or constant vectors) take the maximum
// defined distance in the matrix, or 0 if no pair is defined. Throws
// std::invalid_argument with fewer than 2 vectors.
DistanceMatrix distance_matrix(const std::vector<TermVector>& vectors,
                               MeasureKind kind);

// Header line `n kind`, then the matrix row-major, 9 significant digits.
std::string dump_matrix(const DistanceMatrix& matrix, MeasureKind kind);

}  // namespace kpcluster

#endif  // KPCLUSTER_SIMILARITY_HPP
