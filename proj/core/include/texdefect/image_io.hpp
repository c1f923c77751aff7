#ifndef TEXDEFECT_IMAGE_IO_HPP
#define TEXDEFECT_IMAGE_IO_HPP

#include <filesystem>

#include "texdefect/image.hpp"

namespace texdefect {

/// Decodes a PNG or PGM file into a 256-level GrayImage.
/// Color PNGs are converted with luma weights (0.299, 0.587, 0.114).
/// Throws IoError on unreadable files or unsupported formats.
GrayImage load_grayscale(const std::filesystem::path& path);

/// Writes an 8-bit grayscale PNG. The image must have levels == 256;
/// rescale with `spread_levels` first if needed.
void save_png(const std::filesystem::path& path, const GrayImage& img);

/// Writes a binary PGM (P5). Any dynamic range up to 256 levels.
void save_pgm(const std::filesystem::path& path, const GrayImage& img);

/// Writes a mask as a 0/255 grayscale PNG.
void save_mask_png(const std::filesystem::path& path, const BinaryMask& mask);

/// Loads a mask image: any nonzero pixel is treated as set.
BinaryMask load_mask(const std::filesystem::path& path);

/// Linearly maps [0, levels-1] to [0, 255] for display, e.g. to render a
/// dissimilarity heatmap or a low-range image as a viewable PNG.
GrayImage spread_levels(const GrayImage& img);

} // namespace texdefect

#endif // TEXDEFECT_IMAGE_IO_HPP
