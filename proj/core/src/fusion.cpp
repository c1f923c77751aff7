#include "texdefect/fusion.hpp"

#include <vector>

namespace texdefect {

namespace {

BinaryMask mask_for_grid(const BlockGrid& grid) {
    return BinaryMask(grid.original_width, grid.original_height);
}

void check_same_dims(const BinaryMask& a, const BinaryMask& b, const char* op) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw PreconditionError(std::string(op) + ": mask dimension mismatch");
    }
}

} // namespace

BinaryMask blocks_to_boundary_mask(const BlockLabels& labels, const BlockGrid& grid) {
    BinaryMask mask = mask_for_grid(grid);
    for (int id : labels.defective_ids) {
        const BlockRect r = grid.block_rect_in_original(id);
        const int r1 = r.row + r.rows - 1;
        const int c1 = r.col + r.cols - 1;
        for (int c = r.col; c <= c1; ++c) {
            mask.set(r.row, c);
            mask.set(r1, c);
        }
        for (int row = r.row; row <= r1; ++row) {
            mask.set(row, r.col);
            mask.set(row, c1);
        }
    }
    return mask;
}

BinaryMask blocks_to_solid_mask(const BlockLabels& labels, const BlockGrid& grid) {
    BinaryMask mask = mask_for_grid(grid);
    for (int id : labels.defective_ids) {
        const BlockRect r = grid.block_rect_in_original(id);
        for (int row = r.row; row < r.row + r.rows; ++row) {
            for (int col = r.col; col < r.col + r.cols; ++col) {
                mask.set(row, col);
            }
        }
    }
    return mask;
}

BinaryMask merge_masks(std::span<const BinaryMask> masks) {
    if (masks.empty()) {
        throw PreconditionError("merge_masks: empty input");
    }
    BinaryMask out = masks.front();
    for (std::size_t k = 1; k < masks.size(); ++k) {
        check_same_dims(out, masks[k], "merge_masks");
        for (int r = 0; r < out.height(); ++r) {
            for (int c = 0; c < out.width(); ++c) {
                if (masks[k].test(r, c)) out.set(r, c);
            }
        }
    }
    return out;
}

BinaryMask fill_holes(const BinaryMask& mask) {
    const int h = mask.height();
    const int w = mask.width();

    // Flood the background from every clear border pixel (4-connectivity);
    // whatever background remains unreached is an interior hole.
    std::vector<std::uint8_t> reached(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::pair<int, int>> stack;
    auto push = [&](int r, int c) {
        if (r < 0 || r >= h || c < 0 || c >= w) return;
        const std::size_t idx = static_cast<std::size_t>(r) * w + c;
        if (reached[idx] || mask.test(r, c)) return;
        reached[idx] = 1;
        stack.emplace_back(r, c);
    };
    for (int c = 0; c < w; ++c) {
        push(0, c);
        push(h - 1, c);
    }
    for (int r = 0; r < h; ++r) {
        push(r, 0);
        push(r, w - 1);
    }
    while (!stack.empty()) {
        const auto [r, c] = stack.back();
        stack.pop_back();
        push(r - 1, c);
        push(r + 1, c);
        push(r, c - 1);
        push(r, c + 1);
    }

    BinaryMask out(w, h);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            if (!reached[static_cast<std::size_t>(r) * w + c]) out.set(r, c);
        }
    }
    return out;
}

GrayImage edge_overlay(const BinaryMask& filled, const GrayImage& original) {
    if (filled.width() != original.width() || filled.height() != original.height()) {
        throw PreconditionError("edge_overlay: mask and image dimensions differ");
    }
    GrayImage out = original;
    const int h = filled.height();
    const int w = filled.width();
    const std::uint8_t white = static_cast<std::uint8_t>(original.levels() - 1);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            if (!filled.test(r, c)) continue;
            const bool boundary = r == 0 || r == h - 1 || c == 0 || c == w - 1 ||
                                  !filled.test(r - 1, c) || !filled.test(r + 1, c) ||
                                  !filled.test(r, c - 1) || !filled.test(r, c + 1);
            if (boundary) out.at(r, c) = white;
        }
    }
    return out;
}

} // namespace texdefect
