#include "texdefect/clustering.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <unordered_map>

namespace texdefect {

std::string linkage_name(Linkage l) {
    switch (l) {
        case Linkage::Single: return "single";
        case Linkage::Complete: return "complete";
        case Linkage::Average: return "average";
    }
    return "?";
}

Linkage parse_linkage(const std::string& name) {
    if (name == "single") return Linkage::Single;
    if (name == "complete") return Linkage::Complete;
    if (name == "average") return Linkage::Average;
    throw PreconditionError("unknown linkage '" + name + "' (single|complete|average)");
}

bool BlockLabels::is_defective(int id) const {
    return std::binary_search(defective_ids.begin(), defective_ids.end(), id);
}

Dendrogram agglomerate(const DissimilarityMatrix& d, Linkage linkage) {
    const int n = d.size();
    if (n < 2) {
        throw PreconditionError("agglomerate: need at least 2 blocks");
    }

    // Working copy of the distance matrix over cluster slots. Slot i starts
    // as leaf i and absorbs its merge partners as clustering proceeds.
    std::vector<double> work(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            work[static_cast<std::size_t>(i) * n + j] = d.at(i, j);
        }
    }
    auto w = [&work, n](int i, int j) -> double& { return work[static_cast<std::size_t>(i) * n + j]; };

    std::vector<bool> active(static_cast<std::size_t>(n), true);
    std::vector<int> id(static_cast<std::size_t>(n));
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = d.block_ids()[static_cast<std::size_t>(i)];

    Dendrogram dend;
    dend.leaf_ids = d.block_ids();
    dend.merges.reserve(static_cast<std::size_t>(n - 1));

    for (int step = 1; step < n; ++step) {
        int best_i = -1;
        int best_j = -1;
        double best = 0.0;
        int best_lo = 0;
        int best_hi = 0;
        for (int i = 0; i < n; ++i) {
            if (!active[static_cast<std::size_t>(i)]) continue;
            for (int j = i + 1; j < n; ++j) {
                if (!active[static_cast<std::size_t>(j)]) continue;
                const double dist = w(i, j);
                const int lo = std::min(id[static_cast<std::size_t>(i)], id[static_cast<std::size_t>(j)]);
                const int hi = std::max(id[static_cast<std::size_t>(i)], id[static_cast<std::size_t>(j)]);
                if (best_i < 0 || dist < best ||
                    (dist == best && (lo < best_lo || (lo == best_lo && hi < best_hi)))) {
                    best = dist;
                    best_i = i;
                    best_j = j;
                    best_lo = lo;
                    best_hi = hi;
                }
            }
        }

        const int si = size[static_cast<std::size_t>(best_i)];
        const int sj = size[static_cast<std::size_t>(best_j)];
        dend.merges.push_back(DendrogramMerge{best_lo, best_hi, best, si + sj});

        for (int k = 0; k < n; ++k) {
            if (!active[static_cast<std::size_t>(k)] || k == best_i || k == best_j) continue;
            double updated = 0.0;
            switch (linkage) {
                case Linkage::Single: updated = std::min(w(best_i, k), w(best_j, k)); break;
                case Linkage::Complete: updated = std::max(w(best_i, k), w(best_j, k)); break;
                case Linkage::Average:
                    updated = (si * w(best_i, k) + sj * w(best_j, k)) / static_cast<double>(si + sj);
                    break;
            }
            w(best_i, k) = updated;
            w(k, best_i) = updated;
        }

        active[static_cast<std::size_t>(best_j)] = false;
        size[static_cast<std::size_t>(best_i)] = si + sj;
        id[static_cast<std::size_t>(best_i)] = n + step;
    }
    return dend;
}

namespace {

// Leaf sets of the two children of the final merge, by replaying the
// merge sequence with the documented ID convention.
std::pair<std::vector<int>, std::vector<int>> final_children(const Dendrogram& dend) {
    if (dend.merges.empty()) {
        throw PreconditionError("cut_two: dendrogram has no merges");
    }
    const int n = static_cast<int>(dend.leaf_ids.size());
    std::unordered_map<int, std::vector<int>> leaves;
    leaves.reserve(dend.leaf_ids.size() * 2);
    for (int leaf : dend.leaf_ids) leaves[leaf] = {leaf};

    for (std::size_t k = 0; k + 1 < dend.merges.size(); ++k) {
        const DendrogramMerge& m = dend.merges[k];
        std::vector<int> merged = std::move(leaves.at(m.cluster_a));
        const std::vector<int>& right = leaves.at(m.cluster_b);
        merged.insert(merged.end(), right.begin(), right.end());
        leaves.erase(m.cluster_a);
        leaves.erase(m.cluster_b);
        leaves[n + static_cast<int>(k) + 1] = std::move(merged);
    }
    const DendrogramMerge& last = dend.merges.back();
    std::vector<int> a = leaves.at(last.cluster_a);
    std::vector<int> b = leaves.at(last.cluster_b);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return {std::move(a), std::move(b)};
}

double mean_cross_distance(const std::vector<int>& from, const std::vector<int>& to,
                           const DissimilarityMatrix& d,
                           const std::unordered_map<int, int>& index_of) {
    double sum = 0.0;
    for (int x : from) {
        for (int y : to) {
            sum += d.at(index_of.at(x), index_of.at(y));
        }
    }
    return sum / (static_cast<double>(from.size()) * static_cast<double>(to.size()));
}

} // namespace

TwoClusters cut_two(const Dendrogram& dend) {
    auto [a, b] = final_children(dend);
    return TwoClusters{std::move(a), std::move(b)};
}

BlockLabels label_defective(const TwoClusters& partition, const DissimilarityMatrix& d) {
    const std::vector<int>& a = partition.first;
    const std::vector<int>& b = partition.second;
    if (a.empty() || b.empty()) {
        throw PreconditionError("label_defective: both clusters must be non-empty");
    }

    const std::vector<int>* defective = nullptr;
    if (a.size() != b.size()) {
        defective = a.size() < b.size() ? &a : &b;
    } else {
        std::unordered_map<int, int> index_of;
        index_of.reserve(d.block_ids().size());
        for (int i = 0; i < d.size(); ++i) index_of[d.block_ids()[static_cast<std::size_t>(i)]] = i;
        // For a symmetric matrix the two means agree up to summation order,
        // so the lowest-block-ID fallback is what normally decides.
        const double mean_a = mean_cross_distance(a, b, d, index_of);
        const double mean_b = mean_cross_distance(b, a, d, index_of);
        if (mean_a > mean_b) {
            defective = &a;
        } else if (mean_b > mean_a) {
            defective = &b;
        } else {
            defective = a.front() < b.front() ? &a : &b;
        }
    }

    BlockLabels labels;
    labels.total_blocks = static_cast<int>(a.size() + b.size());
    labels.defective_ids = *defective;
    return labels;
}

bool no_defects_by_gap(const Dendrogram& dend, const DissimilarityMatrix& d, double gap_factor) {
    if (dend.merges.empty()) return true;
    const double final_height = dend.merges.back().height;
    if (final_height == 0.0) return true;

    std::vector<double> offdiag;
    offdiag.reserve(static_cast<std::size_t>(d.size()) * (d.size() - 1) / 2);
    for (int i = 0; i < d.size(); ++i) {
        for (int j = i + 1; j < d.size(); ++j) {
            offdiag.push_back(d.at(i, j));
        }
    }
    std::sort(offdiag.begin(), offdiag.end());
    const std::size_t m = offdiag.size();
    const double median =
        (m % 2 == 1) ? offdiag[m / 2] : 0.5 * (offdiag[m / 2 - 1] + offdiag[m / 2]);
    return final_height < gap_factor * median;
}

std::string dendrogram_to_json(const Dendrogram& dend) {
    std::ostringstream out;
    out << "{\"leaves\":[";
    for (std::size_t i = 0; i < dend.leaf_ids.size(); ++i) {
        if (i) out << ',';
        out << dend.leaf_ids[i];
    }
    out << "],\"merges\":[";
    char buf[32];
    for (std::size_t i = 0; i < dend.merges.size(); ++i) {
        const DendrogramMerge& m = dend.merges[i];
        if (i) out << ',';
        std::snprintf(buf, sizeof(buf), "%.9g", m.height);
        out << "{\"a\":" << m.cluster_a << ",\"b\":" << m.cluster_b << ",\"height\":" << buf
            << ",\"size\":" << m.size << "}";
    }
    out << "]}";
    return out.str();
}

std::string format_block_list(const std::vector<int>& ids) {
    if (ids.empty()) return "(none)";
    std::ostringstream out;
    out << '(';
    if (ids.size() == 1) {
        out << ids[0];
    } else if (ids.size() == 2) {
        out << ids[0] << " and " << ids[1];
    } else {
        for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
            out << ids[i] << ", ";
        }
        out << "and " << ids.back();
    }
    out << ')';
    return out.str();
}

} // namespace texdefect
