#ifndef TEXDEFECT_PIPELINE_HPP
#define TEXDEFECT_PIPELINE_HPP

#include <array>
#include <optional>
#include <vector>

#include "texdefect/clustering.hpp"
#include "texdefect/dissimilarity.hpp"
#include "texdefect/evaluation.hpp"
#include "texdefect/fusion.hpp"
#include "texdefect/glcm.hpp"
#include "texdefect/imaging.hpp"

namespace texdefect {

/// Whether per-block signatures are compared as one aggregated histogram
/// (counts summed over offsets) or per offset with distances averaged.
enum class Aggregation { SumCounts, PerOffset };

std::string aggregation_name(Aggregation a);
Aggregation parse_aggregation(const std::string& name);

struct DetectOptions {
    Periodicity period;
    int levels = 64;
    std::vector<Offset> offsets = default_offsets();
    Linkage linkage = Linkage::Average;
    Aggregation aggregation = Aggregation::SumCounts;
    bool symmetric_glcm = false;
    bool solid_blocks = false;
    std::optional<double> gap_factor; // no-defect guard, disabled by default
    bool parallel_croppings = true;
};

/// Everything computed for one corner cropping.
struct CroppingResult {
    BlockGrid grid;
    DissimilarityMatrix dissimilarity;
    Dendrogram dendrogram;
    BlockLabels labels; // empty defective set when the gap test fired
    bool no_defects = false;
};

struct DefectReport {
    std::array<CroppingResult, 4> croppings; // kAllCorners order
    std::array<BinaryMask, 4> boundary_masks;
    BinaryMask merged;
    BinaryMask filled;
    GrayImage overlay;

    bool any_defects() const;
};

/// Runs the full detection pipeline on a loaded image:
/// quantize, crop all four corners, per cropping compute block signatures,
/// the chi-square dissimilarity matrix, the dendrogram and defect labels,
/// then fuse the per-cropping masks into the final filled mask and overlay.
DefectReport detect(const GrayImage& original, const DetectOptions& options);

/// Block-level evaluation of a detection against a pixel ground-truth mask.
MetricsReport evaluate(const DefectReport& report, const BinaryMask& truth_mask,
                       double min_overlap = 0.0);

} // namespace texdefect

#endif // TEXDEFECT_PIPELINE_HPP
