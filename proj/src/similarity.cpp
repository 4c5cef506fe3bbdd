#include "kpcluster/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace kpcluster {

namespace {

// Applies fn(weight_a, weight_b) to every term id where at least one of the
// sparse vectors is nonzero.
template <typename Fn>
void for_union(const TermVector& a, const TermVector& b, Fn&& fn) {
    std::size_t ia = 0;
    std::size_t ib = 0;
    while (ia < a.weights.size() || ib < b.weights.size()) {
        const int ta = ia < a.weights.size() ? a.weights[ia].first
                                             : std::numeric_limits<int>::max();
        const int tb = ib < b.weights.size() ? b.weights[ib].first
                                             : std::numeric_limits<int>::max();
        if (ta < tb) {
            fn(a.weights[ia].second, 0.0);
            ++ia;
        } else if (tb < ta) {
            fn(0.0, b.weights[ib].second);
            ++ib;
        } else {
            fn(a.weights[ia].second, b.weights[ib].second);
            ++ia;
            ++ib;
        }
    }
}

double dot(const TermVector& a, const TermVector& b) {
    double sum = 0.0;
    for_union(a, b, [&](double wa, double wb) { sum += wa * wb; });
    return sum;
}

double norm_squared(const TermVector& a) {
    double sum = 0.0;
    for (const auto& [term_id, w] : a.weights) sum += w * w;
    return sum;
}

double clamp(double value, double lo, double hi) {
    return std::min(hi, std::max(lo, value));
}

}  // namespace

MeasureKind measure_from_name(std::string_view name) {
    if (name == "euclidean") return MeasureKind::euclidean;
    if (name == "cosine") return MeasureKind::cosine;
    if (name == "jaccard") return MeasureKind::jaccard;
    if (name == "pearson") return MeasureKind::pearson;
    if (name == "avg_kl" || name == "kld") return MeasureKind::avg_kl;
    throw std::invalid_argument("unknown measure: " + std::string(name));
}

std::string_view measure_name(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::euclidean: return "euclidean";
        case MeasureKind::cosine: return "cosine";
        case MeasureKind::jaccard: return "jaccard";
        case MeasureKind::pearson: return "pearson";
        case MeasureKind::avg_kl: return "avg_kl";
    }
    return "";
}

std::string_view measure_display_name(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::euclidean: return "Euclidean";
        case MeasureKind::cosine: return "Cosine";
        case MeasureKind::jaccard: return "Jaccard";
        case MeasureKind::pearson: return "Pearson";
        case MeasureKind::avg_kl: return "KLD";
    }
    return "";
}

double euclidean(const TermVector& a, const TermVector& b) {
    double sum = 0.0;
    for_union(a, b, [&](double wa, double wb) {
        const double d = wa - wb;
        sum += d * d;
    });
    return std::sqrt(sum);
}

double cosine(const TermVector& a, const TermVector& b) {
    const double na = norm_squared(a);
    const double nb = norm_squared(b);
    if (na == 0.0 || nb == 0.0) throw std::domain_error("undefined cosine");
    return clamp(dot(a, b) / std::sqrt(na * nb), 0.0, 1.0);
}

double jaccard(const TermVector& a, const TermVector& b) {
    const double na = norm_squared(a);
    const double nb = norm_squared(b);
    if (na == 0.0 && nb == 0.0) throw std::domain_error("undefined jaccard");
    const double ab = dot(a, b);
    return clamp(ab / (na + nb - ab), 0.0, 1.0);
}

double pearson(const TermVector& a, const TermVector& b) {
    const double m = static_cast<double>(a.dim);
    double tf_a = 0.0;
    double tf_b = 0.0;
    for (const auto& [t, w] : a.weights) tf_a += w;
    for (const auto& [t, w] : b.weights) tf_b += w;
    const double var_a = m * norm_squared(a) - tf_a * tf_a;
    const double var_b = m * norm_squared(b) - tf_b * tf_b;
    if (var_a <= 0.0 || var_b <= 0.0) throw std::domain_error("undefined pearson");
    const double cov = m * dot(a, b) - tf_a * tf_b;
    return clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
}

double avg_kl(const TermVector& a, const TermVector& b) {
    double sum = 0.0;
    for_union(a, b, [&](double wa, double wb) {
        const double total = wa + wb;
        if (total <= 0.0) return;
        const double pi1 = wa / total;
        const double pi2 = wb / total;
        const double wt = pi1 * wa + pi2 * wb;
        // Combine the two directed contributions before touching the running
        // sum so the result is bit-identical under argument swap.
        double term = 0.0;
        if (wa > 0.0) term += pi1 * wa * std::log(wa / wt);
        if (wb > 0.0) term += pi2 * wb * std::log(wb / wt);
        sum += term;
    });
    return std::max(sum, 0.0);
}

double measure(MeasureKind kind, const TermVector& a, const TermVector& b) {
    switch (kind) {
        case MeasureKind::euclidean: return euclidean(a, b);
        case MeasureKind::cosine: return cosine(a, b);
        case MeasureKind::jaccard: return jaccard(a, b);
        case MeasureKind::pearson: return pearson(a, b);
        case MeasureKind::avg_kl: return avg_kl(a, b);
    }
    throw std::invalid_argument("unknown measure kind");
}

double to_distance(MeasureKind kind, double value) {
    switch (kind) {
        case MeasureKind::euclidean:
        case MeasureKind::avg_kl:
            return value;
        case MeasureKind::cosine:
        case MeasureKind::jaccard:
            return 1.0 - value;
        case MeasureKind::pearson:
            return value >= 0.0 ? 1.0 - value : -value;
    }
    throw std::invalid_argument("unknown measure kind");
}

DistanceMatrix distance_matrix(const std::vector<TermVector>& vectors,
                               MeasureKind kind) {
    const int n = static_cast<int>(vectors.size());
    if (n < 2) throw std::invalid_argument("need at least 2 vectors");

    DistanceMatrix matrix;
    matrix.n = n;
    matrix.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                          0.0);

    const double undefined = std::numeric_limits<double>::quiet_NaN();
    double max_defined = 0.0;
    bool any_defined = false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double d;
            try {
                d = to_distance(kind, measure(kind, vectors[static_cast<std::size_t>(i)],
                                              vectors[static_cast<std::size_t>(j)]));
                max_defined = any_defined ? std::max(max_defined, d) : d;
                any_defined = true;
            } catch (const std::domain_error&) {
                d = undefined;
            }
            matrix.at(i, j) = d;
            matrix.at(j, i) = d;
        }
    }
    const double fallback = any_defined ? max_defined : 0.0;
    for (double& entry : matrix.entries) {
        if (std::isnan(entry)) entry = fallback;
    }
    return matrix;
}

std::string dump_matrix(const DistanceMatrix& matrix, MeasureKind kind) {
    std::string out = std::to_string(matrix.n);
    out += ' ';
    out += measure_name(kind);
    out += '\n';
    char buffer[32];
    for (int i = 0; i < matrix.n; ++i) {
        for (int j = 0; j < matrix.n; ++j) {
            std::snprintf(buffer, sizeof(buffer), j == 0 ? "%.9g" : " %.9g",
                          matrix.at(i, j));
            out += buffer;
        }
        out += '\n';
    }
    return out;
}

}  // namespace kpcluster
