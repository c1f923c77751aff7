#ifndef TEXDEFECT_FUSION_HPP
#define TEXDEFECT_FUSION_HPP

#include <span>

#include "texdefect/clustering.hpp"
#include "texdefect/imaging.hpp"

namespace texdefect {

/// Marks the 1-pixel perimeter of every defective block, in original-image
/// coordinates. The mask has the original image's dimensions.
BinaryMask blocks_to_boundary_mask(const BlockLabels& labels, const BlockGrid& grid);

/// Same, but marks the full block rectangles instead of their outlines.
BinaryMask blocks_to_solid_mask(const BlockLabels& labels, const BlockGrid& grid);

/// Pixelwise OR. Throws PreconditionError on dimension mismatch.
BinaryMask merge_masks(std::span<const BinaryMask> masks);

/// Sets every clear region that is not 4-connected to the image border;
/// border-connected background is preserved.
BinaryMask fill_holes(const BinaryMask& mask);

/// Paints the boundary of the filled mask (set pixels with a clear 4-neighbor
/// or on the image border) at the maximum gray level onto a copy of the
/// original image.
GrayImage edge_overlay(const BinaryMask& filled, const GrayImage& original);

} // namespace texdefect

#endif // TEXDEFECT_FUSION_HPP
