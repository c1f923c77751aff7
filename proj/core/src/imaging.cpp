#include "texdefect/imaging.hpp"

#include <sstream>

namespace texdefect {

std::string corner_name(Corner c) {
    switch (c) {
        case Corner::TopLeft: return "top-left";
        case Corner::BottomLeft: return "bottom-left";
        case Corner::TopRight: return "top-right";
        case Corner::BottomRight: return "bottom-right";
    }
    return "?";
}

std::string corner_slug(Corner c) {
    switch (c) {
        case Corner::TopLeft: return "top_left";
        case Corner::BottomLeft: return "bottom_left";
        case Corner::TopRight: return "top_right";
        case Corner::BottomRight: return "bottom_right";
    }
    return "?";
}

BlockRect BlockGrid::block_rect(int id) const {
    if (id < 1 || id > block_count()) {
        std::ostringstream msg;
        msg << "block id " << id << " out of range [1, " << block_count() << "]";
        throw PreconditionError(msg.str());
    }
    const int index = id - 1;
    const int block_row = index / blocks_per_row;
    const int block_col = index % blocks_per_row;
    return BlockRect{block_row * period.unit_rows(), block_col * period.unit_cols(),
                     period.unit_rows(), period.unit_cols()};
}

BlockRect BlockGrid::block_rect_in_original(int id) const {
    BlockRect r = block_rect(id);
    r.row += origin_row;
    r.col += origin_col;
    return r;
}

GrayImage quantize(const GrayImage& img, int target_levels) {
    if (target_levels < 2) {
        throw PreconditionError("quantize: target_levels must be >= 2");
    }
    if (target_levels > img.levels()) {
        throw PreconditionError("quantize: target_levels exceeds input levels");
    }
    std::vector<std::uint8_t> out(img.pixel_count());
    const long in_levels = img.levels();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(img.pixels()[i] * static_cast<long>(target_levels) / in_levels);
    }
    return GrayImage(img.width(), img.height(), target_levels, std::move(out));
}

BlockGrid crop_corner(const GrayImage& img, Corner corner, const Periodicity& p) {
    if (p.row_period < 2 || p.col_period < 2) {
        throw PreconditionError("crop_corner: periodicity must be >= 2 in both directions");
    }
    const int m = img.height();
    const int n = img.width();
    if (m < 2 * p.col_period || n < 2 * p.row_period) {
        std::ostringstream msg;
        msg << "crop_corner: image " << m << "x" << n
            << " holds fewer than two periodic units of " << p.col_period << "x" << p.row_period;
        throw PreconditionError(msg.str());
    }

    const int m_crop = (m / p.col_period) * p.col_period;
    const int n_crop = (n / p.row_period) * p.row_period;

    int origin_row = 0;
    int origin_col = 0;
    switch (corner) {
        case Corner::TopLeft: break;
        case Corner::BottomLeft: origin_row = m - m_crop; break;
        case Corner::TopRight: origin_col = n - n_crop; break;
        case Corner::BottomRight:
            origin_row = m - m_crop;
            origin_col = n - n_crop;
            break;
    }

    std::vector<std::uint8_t> pixels(static_cast<std::size_t>(m_crop) * n_crop);
    for (int r = 0; r < m_crop; ++r) {
        const std::uint8_t* src = img.row(origin_row + r) + origin_col;
        std::copy(src, src + n_crop, pixels.begin() + static_cast<std::size_t>(r) * n_crop);
    }

    BlockGrid grid;
    grid.source_corner = corner;
    grid.origin_row = origin_row;
    grid.origin_col = origin_col;
    grid.original_width = n;
    grid.original_height = m;
    grid.period = p;
    grid.crop = GrayImage(n_crop, m_crop, img.levels(), std::move(pixels));
    grid.blocks_per_row = n_crop / p.row_period;
    grid.blocks_per_col = m_crop / p.col_period;
    return grid;
}

std::array<BlockGrid, 4> crop_all_corners(const GrayImage& img, const Periodicity& p) {
    return {crop_corner(img, Corner::TopLeft, p), crop_corner(img, Corner::BottomLeft, p),
            crop_corner(img, Corner::TopRight, p), crop_corner(img, Corner::BottomRight, p)};
}

std::vector<Block> partition_blocks(const BlockGrid& grid) {
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(grid.block_count()));
    const int rows = grid.period.unit_rows();
    const int cols = grid.period.unit_cols();
    for (int id = 1; id <= grid.block_count(); ++id) {
        const BlockRect rect = grid.block_rect(id);
        std::vector<std::uint8_t> pixels(static_cast<std::size_t>(rows) * cols);
        for (int r = 0; r < rows; ++r) {
            const std::uint8_t* src = grid.crop.row(rect.row + r) + rect.col;
            std::copy(src, src + cols, pixels.begin() + static_cast<std::size_t>(r) * cols);
        }
        blocks.push_back(Block{id, GrayImage(cols, rows, grid.crop.levels(), std::move(pixels))});
    }
    return blocks;
}

} // namespace texdefect
