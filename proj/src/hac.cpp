#include "kpcluster/hac.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace kpcluster {

LinkageMethod method_from_name(std::string_view name) {
    if (name == "single") return LinkageMethod::single;
    if (name == "complete") return LinkageMethod::complete;
    if (name == "upgma") return LinkageMethod::upgma;
    if (name == "wpgma") return LinkageMethod::wpgma;
    if (name == "upgmc") return LinkageMethod::upgmc;
    if (name == "wpgmc") return LinkageMethod::wpgmc;
    if (name == "ward") return LinkageMethod::ward;
    throw std::invalid_argument("unknown linkage method: " + std::string(name));
}

std::string_view method_name(LinkageMethod method) {
    switch (method) {
        case LinkageMethod::single: return "single";
        case LinkageMethod::complete: return "complete";
        case LinkageMethod::upgma: return "upgma";
        case LinkageMethod::wpgma: return "wpgma";
        case LinkageMethod::upgmc: return "upgmc";
        case LinkageMethod::wpgmc: return "wpgmc";
        case LinkageMethod::ward: return "ward";
    }
    return "";
}

std::string_view method_display_name(LinkageMethod method) {
    switch (method) {
        case LinkageMethod::single: return "SINGLE";
        case LinkageMethod::complete: return "COMPLETE";
        case LinkageMethod::upgma: return "UPGMA";
        case LinkageMethod::wpgma: return "WPGMA";
        case LinkageMethod::upgmc: return "UPGMC";
        case LinkageMethod::wpgmc: return "WPGMC";
        case LinkageMethod::ward: return "Ward";
    }
    return "";
}

double lance_williams(double d_kr, double d_ks, double d_rs, int n_r, int n_s,
                      int n_k, LinkageMethod method) {
    double alpha_r = 0.5;
    double alpha_s = 0.5;
    double beta = 0.0;
    double gamma = 0.0;
    const double nr = n_r;
    const double ns = n_s;
    const double nk = n_k;
    switch (method) {
        case LinkageMethod::single:
            gamma = -0.5;
            break;
        case LinkageMethod::complete:
            gamma = 0.5;
            break;
        case LinkageMethod::upgma:
            alpha_r = nr / (nr + ns);
            alpha_s = ns / (nr + ns);
            break;
        case LinkageMethod::wpgma:
            break;
        case LinkageMethod::upgmc:
            alpha_r = nr / (nr + ns);
            alpha_s = ns / (nr + ns);
            beta = -nr * ns / ((nr + ns) * (nr + ns));
            break;
        case LinkageMethod::wpgmc:
            beta = -0.25;
            break;
        case LinkageMethod::ward:
            alpha_r = (nr + nk) / (nr + ns + nk);
            alpha_s = (ns + nk) / (nr + ns + nk);
            beta = -nk / (nr + ns + nk);
            break;
    }
    return alpha_r * d_kr + alpha_s * d_ks + beta * d_rs +
           gamma * std::abs(d_kr - d_ks);
}

Dendrogram cluster(const DistanceMatrix& matrix, LinkageMethod method) {
    const int n = matrix.n;
    if (n < 2) throw std::invalid_argument("need at least 2 points");
    for (int i = 0; i < n; ++i) {
        if (matrix.at(i, i) != 0.0) {
            throw std::invalid_argument("nonzero diagonal");
        }
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(matrix.at(i, j))) {
                throw std::invalid_argument("non-finite distance");
            }
            if (matrix.at(i, j) != matrix.at(j, i)) {
                throw std::invalid_argument("matrix not symmetric");
            }
        }
    }

    // Current inter-cluster distances, indexed by cluster id over all 2n-1
    // ids that can ever exist.
    const int total = 2 * n - 1;
    std::vector<double> dist(static_cast<std::size_t>(total) *
                                 static_cast<std::size_t>(total),
                             0.0);
    auto d = [&](int i, int j) -> double& {
        return dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(total) +
                    static_cast<std::size_t>(j)];
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) d(i, j) = matrix.at(i, j);
    }

    std::vector<int> active(static_cast<std::size_t>(n));
    std::iota(active.begin(), active.end(), 0);
    std::vector<int> size(static_cast<std::size_t>(total), 1);

    Dendrogram dendrogram;
    dendrogram.n_leaves = n;
    dendrogram.steps.reserve(static_cast<std::size_t>(n - 1));
    for (int step = 0; step < n - 1; ++step) {
        std::size_t best_a = 0;
        std::size_t best_b = 1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a + 1 < active.size(); ++a) {
            for (std::size_t b = a + 1; b < active.size(); ++b) {
                const double candidate = d(active[a], active[b]);
                if (candidate < best) {
                    best = candidate;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        const int r = active[best_a];
        const int s = active[best_b];
        const int merged = n + step;
        size[static_cast<std::size_t>(merged)] =
            size[static_cast<std::size_t>(r)] + size[static_cast<std::size_t>(s)];
        dendrogram.steps.push_back(MergeStep{
            step, r, s, best, size[static_cast<std::size_t>(merged)]});

        for (std::size_t a = 0; a < active.size(); ++a) {
            const int k = active[a];
            if (k == r || k == s) continue;
            const double updated = lance_williams(
                d(k, r), d(k, s), best, size[static_cast<std::size_t>(r)],
                size[static_cast<std::size_t>(s)], size[static_cast<std::size_t>(k)],
                method);
            d(k, merged) = updated;
            d(merged, k) = updated;
        }
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_b));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_a));
        active.push_back(merged);
    }
    return dendrogram;
}

std::vector<int> cut(const Dendrogram& dendrogram, int k) {
    const int n = dendrogram.n_leaves;
    if (k < 1 || k > n) throw std::invalid_argument("cluster count out of range");

    // Replay the first n - k merges over a union-find keyed by cluster id.
    const int applied = n - k;
    std::vector<int> parent(static_cast<std::size_t>(n + applied));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int t = 0; t < applied; ++t) {
        const MergeStep& step = dendrogram.steps[static_cast<std::size_t>(t)];
        const int merged = n + t;
        parent[static_cast<std::size_t>(find(step.left))] = merged;
        parent[static_cast<std::size_t>(find(step.right))] = merged;
    }

    // Components ordered by smallest member leaf get ids 0..k-1.
    std::vector<int> assignment(static_cast<std::size_t>(n), -1);
    std::vector<int> cluster_of_root(static_cast<std::size_t>(n + applied), -1);
    int next_id = 0;
    for (int leaf = 0; leaf < n; ++leaf) {
        const int root = find(leaf);
        if (cluster_of_root[static_cast<std::size_t>(root)] < 0) {
            cluster_of_root[static_cast<std::size_t>(root)] = next_id++;
        }
        assignment[static_cast<std::size_t>(leaf)] =
            cluster_of_root[static_cast<std::size_t>(root)];
    }
    return assignment;
}

std::string dump_dendrogram(const Dendrogram& dendrogram) {
    std::string out;
    char buffer[96];
    for (const MergeStep& step : dendrogram.steps) {
        std::snprintf(buffer, sizeof(buffer), "%d %d %d %.9g %d\n", step.step,
                      step.left, step.right, step.distance, step.new_size);
        out += buffer;
    }
    return out;
}

}  // namespace kpcluster
