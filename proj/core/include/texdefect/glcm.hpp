#ifndef TEXDEFECT_GLCM_HPP
#define TEXDEFECT_GLCM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "texdefect/image.hpp"

namespace texdefect {

/// Pixel displacement (d_row, d_col) at which co-occurrences are counted.
struct Offset {
    int d_row = 0;
    int d_col = 0;

    bool operator==(const Offset&) const = default;
};

/// The four distance-1 Haralick directions: (0,1), (1,0), (1,1), (1,-1).
std::vector<Offset> default_offsets();

/// Parses "0,1;1,0;1,1;1,-1" into an offset list.
/// Throws PreconditionError on malformed input or a (0,0) offset.
std::vector<Offset> parse_offsets(const std::string& text);

/// Co-occurrence counts of gray-level pairs at one offset.
class CountMatrix {
public:
    CountMatrix(int levels, Offset offset)
        : levels_(levels), offset_(offset),
          counts_(static_cast<std::size_t>(levels) * levels, 0) {}

    int levels() const { return levels_; }
    Offset offset() const { return offset_; }

    std::uint32_t at(int i, int j) const { return counts_[static_cast<std::size_t>(i) * levels_ + j]; }
    std::uint32_t& at(int i, int j) { return counts_[static_cast<std::size_t>(i) * levels_ + j]; }

    const std::vector<std::uint32_t>& counts() const { return counts_; }

    std::uint64_t total() const;

    /// CSV dump: levels rows of levels comma-separated integers.
    std::string to_csv() const;

private:
    int levels_;
    Offset offset_;
    std::vector<std::uint32_t> counts_;
};

/// An L x L joint-probability histogram of gray-level pairs; entries are
/// non-negative and sum to 1.
class JointHistogram {
public:
    JointHistogram(int levels, std::vector<double> probs);

    int levels() const { return levels_; }
    double at(int i, int j) const { return probs_[static_cast<std::size_t>(i) * levels_ + j]; }
    const std::vector<double>& probs() const { return probs_; }

private:
    int levels_;
    std::vector<double> probs_;
};

/// Counts in-bounds pixel pairs (x, y) -> (x + d_row, y + d_col); pairs whose
/// displaced coordinate leaves the block are skipped (no wraparound).
/// Throws PreconditionError if the offset admits no valid pair.
CountMatrix compute_glcm(const GrayImage& block, Offset offset);

/// counts / total. Throws PreconditionError on an all-zero matrix.
JointHistogram normalize(const CountMatrix& counts);

/// The block's comparison signature: counts summed across all offsets
/// (optionally with their transposes, for orientation insensitivity),
/// then normalized once.
JointHistogram block_signature(const GrayImage& block, std::span<const Offset> offsets,
                               bool symmetrize = false);

/// Aggregated count matrix behind block_signature, for debug dumps.
CountMatrix accumulate_counts(const GrayImage& block, std::span<const Offset> offsets,
                              bool symmetrize = false);

/// One signature per offset, for the per-offset distance-averaging mode.
std::vector<JointHistogram> per_offset_signatures(const GrayImage& block,
                                                  std::span<const Offset> offsets,
                                                  bool symmetrize = false);

} // namespace texdefect

#endif // TEXDEFECT_GLCM_HPP
