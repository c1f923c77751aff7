#include "texdefect/pipeline.hpp"

#include <future>

namespace texdefect {

std::string aggregation_name(Aggregation a) {
    return a == Aggregation::SumCounts ? "sum" : "per-offset";
}

Aggregation parse_aggregation(const std::string& name) {
    if (name == "sum") return Aggregation::SumCounts;
    if (name == "per-offset") return Aggregation::PerOffset;
    throw PreconditionError("unknown aggregation '" + name + "' (sum|per-offset)");
}

bool DefectReport::any_defects() const {
    for (const CroppingResult& c : croppings) {
        if (!c.labels.defective_ids.empty()) return true;
    }
    return false;
}

namespace {

// Re-raises the active exception with the failing stage named, preserving
// the error class so callers can still map it to an exit code.
[[noreturn]] void stage_fail(const char* stage, const std::exception& e) {
    const std::string msg = std::string(stage) + ": " + e.what();
    try {
        throw;
    } catch (const IoError&) {
        throw IoError(msg);
    } catch (const PreconditionError&) {
        throw PreconditionError(msg);
    } catch (...) {
        throw Error(msg);
    }
}

DissimilarityMatrix blocks_dissimilarity(const std::vector<Block>& blocks,
                                         const DetectOptions& options) {
    if (options.aggregation == Aggregation::SumCounts) {
        std::vector<JointHistogram> signatures;
        signatures.reserve(blocks.size());
        for (const Block& b : blocks) {
            signatures.push_back(block_signature(b.image, options.offsets, options.symmetric_glcm));
        }
        return dissimilarity_matrix(signatures);
    }

    // Per-offset mode: one matrix per offset, entries averaged.
    std::vector<DissimilarityMatrix> per_offset;
    per_offset.reserve(options.offsets.size());
    for (std::size_t k = 0; k < options.offsets.size(); ++k) {
        std::vector<JointHistogram> signatures;
        signatures.reserve(blocks.size());
        const std::span<const Offset> one{&options.offsets[k], 1};
        for (const Block& b : blocks) {
            signatures.push_back(block_signature(b.image, one, options.symmetric_glcm));
        }
        per_offset.push_back(dissimilarity_matrix(signatures));
    }
    return average_matrices(per_offset);
}

CroppingResult process_cropping(const GrayImage& quantized, Corner corner,
                                const DetectOptions& options) {
    CroppingResult result;
    try {
        result.grid = crop_corner(quantized, corner, options.period);
    } catch (const std::exception& e) {
        stage_fail("imaging", e);
    }

    std::vector<Block> blocks = partition_blocks(result.grid);
    try {
        result.dissimilarity = blocks_dissimilarity(blocks, options);
    } catch (const std::exception& e) {
        stage_fail("glcm/dissimilarity", e);
    }

    try {
        result.dendrogram = agglomerate(result.dissimilarity, options.linkage);
        if (options.gap_factor &&
            no_defects_by_gap(result.dendrogram, result.dissimilarity, *options.gap_factor)) {
            result.no_defects = true;
            result.labels.total_blocks = result.grid.block_count();
        } else {
            result.labels = label_defective(cut_two(result.dendrogram), result.dissimilarity);
        }
    } catch (const std::exception& e) {
        stage_fail("clustering", e);
    }
    return result;
}

} // namespace

DefectReport detect(const GrayImage& original, const DetectOptions& options) {
    GrayImage quantized;
    try {
        quantized = quantize(original, options.levels);
    } catch (const std::exception& e) {
        stage_fail("imaging", e);
    }

    DefectReport report;
    if (options.parallel_croppings) {
        std::array<std::future<CroppingResult>, 4> futures;
        for (std::size_t i = 0; i < 4; ++i) {
            futures[i] = std::async(std::launch::async, process_cropping, std::cref(quantized),
                                    kAllCorners[i], std::cref(options));
        }
        for (std::size_t i = 0; i < 4; ++i) {
            report.croppings[i] = futures[i].get();
        }
    } else {
        for (std::size_t i = 0; i < 4; ++i) {
            report.croppings[i] = process_cropping(quantized, kAllCorners[i], options);
        }
    }

    try {
        for (std::size_t i = 0; i < 4; ++i) {
            const CroppingResult& c = report.croppings[i];
            report.boundary_masks[i] = options.solid_blocks
                                           ? blocks_to_solid_mask(c.labels, c.grid)
                                           : blocks_to_boundary_mask(c.labels, c.grid);
        }
        report.merged = merge_masks(report.boundary_masks);
        report.filled = fill_holes(report.merged);
        report.overlay = edge_overlay(report.filled, original);
    } catch (const std::exception& e) {
        stage_fail("fusion", e);
    }
    return report;
}

MetricsReport evaluate(const DefectReport& report, const BinaryMask& truth_mask,
                       double min_overlap) {
    std::array<CroppingEval, 4> evals;
    for (std::size_t i = 0; i < 4; ++i) {
        const CroppingResult& c = report.croppings[i];
        CroppingEval eval;
        eval.corner = c.grid.source_corner;
        const BlockLabels truth = block_ground_truth(truth_mask, c.grid, min_overlap);
        eval.confusion = confusion(c.labels, truth);
        eval.metrics = metrics(eval.confusion);
        evals[i] = eval;
    }
    return aggregate_report(evals);
}

} // namespace texdefect
