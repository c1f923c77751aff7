#include "texdefect/evaluation.hpp"

#include <cstdio>

namespace texdefect {

BlockLabels block_ground_truth(const BinaryMask& defect_mask, const BlockGrid& grid,
                               double min_overlap) {
    if (defect_mask.width() != grid.original_width ||
        defect_mask.height() != grid.original_height) {
        throw PreconditionError("block_ground_truth: mask does not match the original image size");
    }
    BlockLabels truth;
    truth.total_blocks = grid.block_count();
    const double block_pixels =
        static_cast<double>(grid.period.unit_rows()) * grid.period.unit_cols();
    for (int id = 1; id <= grid.block_count(); ++id) {
        const BlockRect r = grid.block_rect_in_original(id);
        long set = 0;
        for (int row = r.row; row < r.row + r.rows; ++row) {
            for (int col = r.col; col < r.col + r.cols; ++col) {
                if (defect_mask.test(row, col)) ++set;
            }
        }
        if (static_cast<double>(set) / block_pixels > min_overlap) {
            truth.defective_ids.push_back(id);
        }
    }
    return truth;
}

Confusion confusion(const BlockLabels& pred, const BlockLabels& truth) {
    if (pred.total_blocks != truth.total_blocks) {
        throw PreconditionError("confusion: predictions and truth cover different block sets");
    }
    Confusion c;
    for (int id = 1; id <= pred.total_blocks; ++id) {
        const bool p = pred.is_defective(id);
        const bool t = truth.is_defective(id);
        if (p && t) {
            ++c.tp;
        } else if (p && !t) {
            ++c.fp;
        } else if (!p && t) {
            ++c.fn;
        } else {
            ++c.tn;
        }
    }
    return c;
}

Metrics metrics(const Confusion& c) {
    Metrics m;
    m.precision = (c.tp + c.fp == 0) ? 100.0
                                     : 100.0 * static_cast<double>(c.tp) /
                                           static_cast<double>(c.tp + c.fp);
    m.recall = (c.tp + c.fn == 0) ? 100.0
                                  : 100.0 * static_cast<double>(c.tp) /
                                        static_cast<double>(c.tp + c.fn);
    m.accuracy = (c.total() == 0) ? 100.0
                                  : 100.0 * static_cast<double>(c.tp + c.tn) /
                                        static_cast<double>(c.total());
    return m;
}

MetricsReport aggregate_report(std::span<const CroppingEval> per_cropping) {
    if (per_cropping.size() != 4) {
        throw PreconditionError("aggregate_report: expected evaluations for four croppings");
    }
    MetricsReport report;
    double p = 0.0;
    double r = 0.0;
    double a = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        report.croppings[i] = per_cropping[i];
        report.total_blocks += per_cropping[i].confusion.total();
        p += per_cropping[i].metrics.precision;
        r += per_cropping[i].metrics.recall;
        a += per_cropping[i].metrics.accuracy;
    }
    report.averaged = Metrics{p / 4.0, r / 4.0, a / 4.0};
    return report;
}

std::string format_metric(double percent) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", percent);
    if (std::string(buf) == "100.0") return "100";
    return buf;
}

std::string format_metrics_row(long n_blocks, const Metrics& m) {
    return std::to_string(n_blocks) + ", " + format_metric(m.precision) + ", " +
           format_metric(m.recall) + ", " + format_metric(m.accuracy);
}

} // namespace texdefect
