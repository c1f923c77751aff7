#ifndef TEXDEFECT_DISSIMILARITY_HPP
#define TEXDEFECT_DISSIMILARITY_HPP

#include <span>
#include <string>
#include <vector>

#include "texdefect/glcm.hpp"
#include "texdefect/image.hpp"

namespace texdefect {

/// Symmetric matrix of pairwise chi-square distances between block
/// signatures. Entries lie in [0, 1]; the diagonal is exactly 0.
class DissimilarityMatrix {
public:
    DissimilarityMatrix() = default;
    explicit DissimilarityMatrix(int n);

    int size() const { return n_; }
    double at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        d_[static_cast<std::size_t>(i) * n_ + j] = v;
        d_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    /// 1-based block IDs indexing rows/columns; defaults to 1..n.
    const std::vector<int>& block_ids() const { return block_ids_; }

    /// CSV dump: n rows of n comma-separated values.
    std::string to_csv() const;

    /// Grayscale heatmap: entry d maps linearly to round(d * 255).
    GrayImage to_heatmap() const;

private:
    int n_ = 0;
    std::vector<double> d_;
    std::vector<int> block_ids_;
};

/// sqrt(1/2 * sum (p - q)^2 / (p + q)); bins with p + q = 0 contribute 0.
/// Result lies in [0, 1]. Throws PreconditionError on mismatched levels.
double chi_square_distance(const JointHistogram& p, const JointHistogram& q);

/// All-pairs distances; only the upper triangle is computed and mirrored.
/// Requires at least 2 signatures with a common level count.
DissimilarityMatrix dissimilarity_matrix(std::span<const JointHistogram> signatures);

/// Entrywise arithmetic mean of same-sized matrices, for the per-offset
/// aggregation mode (one matrix per offset, distances averaged).
DissimilarityMatrix average_matrices(std::span<const DissimilarityMatrix> matrices);

} // namespace texdefect

#endif // TEXDEFECT_DISSIMILARITY_HPP
