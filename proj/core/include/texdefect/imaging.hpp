#ifndef TEXDEFECT_IMAGING_HPP
#define TEXDEFECT_IMAGING_HPP

#include <array>
#include <string>
#include <vector>

#include "texdefect/image.hpp"

namespace texdefect {

/// Size of the repeating unit of a periodic texture.
///
/// row_period (P_r) is the horizontal period: the number of columns in one
/// periodic unit. col_period (P_c) is the vertical period: the number of
/// rows in one unit. A periodic block therefore spans col_period rows by
/// row_period columns.
struct Periodicity {
    int row_period = 0; // P_r, columns per unit
    int col_period = 0; // P_c, rows per unit

    int unit_rows() const { return col_period; }
    int unit_cols() const { return row_period; }
};

enum class Corner { TopLeft, BottomLeft, TopRight, BottomRight };

inline constexpr std::array<Corner, 4> kAllCorners = {
    Corner::TopLeft, Corner::BottomLeft, Corner::TopRight, Corner::BottomRight};

/// Human-readable name, e.g. "top-left".
std::string corner_name(Corner c);

/// Filename-safe name, e.g. "top_left".
std::string corner_slug(Corner c);

/// Rectangle in image coordinates (top-left corner plus extent).
struct BlockRect {
    int row = 0;
    int col = 0;
    int rows = 0;
    int cols = 0;
};

/// A corner cropping of an image partitioned into periodic blocks.
///
/// Block IDs are 1-based and row-major within the crop: block 1 is the
/// top-left unit, block 2 the unit to its right, and so on.
struct BlockGrid {
    Corner source_corner = Corner::TopLeft;
    int origin_row = 0; // offset of the crop inside the original image
    int origin_col = 0;
    int original_width = 0;
    int original_height = 0;
    Periodicity period;
    GrayImage crop;
    int blocks_per_row = 0; // N_crop / P_r
    int blocks_per_col = 0; // M_crop / P_c

    int block_count() const { return blocks_per_row * blocks_per_col; }

    /// Rectangle of block `id` within the crop. Throws on out-of-range id.
    BlockRect block_rect(int id) const;

    /// Rectangle of block `id` in original-image coordinates.
    BlockRect block_rect_in_original(int id) const;
};

/// One periodic block extracted from a grid.
struct Block {
    int id = 0;
    GrayImage image;
};

/// Uniform re-binning of gray levels: out = floor(v * target_levels / levels).
/// Throws PreconditionError if target_levels < 2 or exceeds the input levels.
GrayImage quantize(const GrayImage& img, int target_levels);

/// Crops `img` to the largest multiple of the periodicity, anchored at a
/// corner, and describes the resulting block grid.
/// Requires at least two periodic units in each direction.
BlockGrid crop_corner(const GrayImage& img, Corner corner, const Periodicity& p);

/// All four corner croppings, in kAllCorners order.
std::array<BlockGrid, 4> crop_all_corners(const GrayImage& img, const Periodicity& p);

/// Extracts the periodic blocks in 1-based row-major order.
std::vector<Block> partition_blocks(const BlockGrid& grid);

} // namespace texdefect

#endif // TEXDEFECT_IMAGING_HPP
