#ifndef TEXDEFECT_CLUSTERING_HPP
#define TEXDEFECT_CLUSTERING_HPP

#include <string>
#include <vector>

#include "texdefect/dissimilarity.hpp"

namespace texdefect {

enum class Linkage { Single, Complete, Average };

std::string linkage_name(Linkage l);

/// Parses "single" / "complete" / "average".
Linkage parse_linkage(const std::string& name);

/// One agglomeration step. Cluster IDs: leaves carry their block ID;
/// the cluster created by step k (1-based) gets ID n + k, where n is the
/// leaf count. cluster_a < cluster_b.
struct DendrogramMerge {
    int cluster_a = 0;
    int cluster_b = 0;
    double height = 0.0;
    int size = 0; // leaves under the merged cluster
};

struct Dendrogram {
    std::vector<int> leaf_ids;           // block IDs, in matrix order
    std::vector<DendrogramMerge> merges; // n - 1 steps, non-decreasing heights
};

/// Partition produced by removing the dendrogram's final merge.
/// Both sides are non-empty, sorted lists of block IDs.
struct TwoClusters {
    std::vector<int> first;
    std::vector<int> second;
};

/// Per-block defect labels over blocks 1..total_blocks.
struct BlockLabels {
    int total_blocks = 0;
    std::vector<int> defective_ids; // sorted

    bool is_defective(int id) const;
};

/// Agglomerative hierarchical clustering under the chosen linkage.
/// Ties on the minimal linkage distance are broken by the lexicographically
/// smallest (min cluster ID, max cluster ID) pair, which makes the merge
/// sequence deterministic.
Dendrogram agglomerate(const DissimilarityMatrix& d, Linkage linkage);

/// Removes the final merge; the two remaining subtrees are the clusters.
TwoClusters cut_two(const Dendrogram& dend);

/// Labels the smaller cluster defective. On equal sizes the cluster with the
/// larger mean distance to the other cluster's members wins; if that does not
/// discriminate, the cluster containing the lowest block ID is defective.
BlockLabels label_defective(const TwoClusters& partition, const DissimilarityMatrix& d);

/// Relative-gap test for defect-free inputs: true when the final merge height
/// is below gap_factor times the median off-diagonal dissimilarity (or when
/// it is exactly 0, i.e. all blocks are identical).
bool no_defects_by_gap(const Dendrogram& dend, const DissimilarityMatrix& d, double gap_factor);

/// Merge list as JSON, for external plotting.
std::string dendrogram_to_json(const Dendrogram& dend);

/// Formats block IDs the way dendrogram captions list them:
/// "(8, 9, 15, and 16)", "(8 and 9)", "(8)", or "(none)".
std::string format_block_list(const std::vector<int>& ids);

} // namespace texdefect

#endif // TEXDEFECT_CLUSTERING_HPP
