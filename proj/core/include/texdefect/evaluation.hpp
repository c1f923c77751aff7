#ifndef TEXDEFECT_EVALUATION_HPP
#define TEXDEFECT_EVALUATION_HPP

#include <array>
#include <span>
#include <string>

#include "texdefect/clustering.hpp"
#include "texdefect/imaging.hpp"

namespace texdefect {

/// 2x2 counts with "defective" as the positive class.
struct Confusion {
    long tp = 0;
    long fp = 0;
    long tn = 0;
    long fn = 0;

    long total() const { return tp + fp + tn + fn; }

    Confusion& operator+=(const Confusion& other) {
        tp += other.tp;
        fp += other.fp;
        tn += other.tn;
        fn += other.fn;
        return *this;
    }
};

/// Percentages in [0, 100]. Degenerate denominators: no positive prediction
/// means precision 100 (no false alarm was raised); no positive truth means
/// recall 100 (nothing to find).
struct Metrics {
    double precision = 0.0;
    double recall = 0.0;
    double accuracy = 0.0;
};

struct CroppingEval {
    Corner corner = Corner::TopLeft;
    Confusion confusion;
    Metrics metrics;
};

/// Per-cropping detail plus the cross-cropping averages. The block count is
/// summed over the four croppings, matching how per-image totals are reported.
struct MetricsReport {
    std::array<CroppingEval, 4> croppings;
    Metrics averaged;
    long total_blocks = 0;
};

/// A block is truth-defective iff the fraction of its pixels set in the mask
/// exceeds min_overlap. Throws PreconditionError on dimension mismatch.
BlockLabels block_ground_truth(const BinaryMask& defect_mask, const BlockGrid& grid,
                               double min_overlap = 0.0);

/// Standard confusion counting; both label sets must cover the same blocks.
Confusion confusion(const BlockLabels& pred, const BlockLabels& truth);

Metrics metrics(const Confusion& c);

MetricsReport aggregate_report(std::span<const CroppingEval> per_cropping);

/// Renders a percentage with one decimal; an exact 100 renders as "100"
/// (so a row reads "252, 100, 80.0, 96.8").
std::string format_metric(double percent);

/// "n_blocks, precision, recall, accuracy" tail of a report row.
std::string format_metrics_row(long n_blocks, const Metrics& m);

} // namespace texdefect

#endif // TEXDEFECT_EVALUATION_HPP
