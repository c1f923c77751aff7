#ifndef TEXDEFECT_IMAGE_HPP
#define TEXDEFECT_IMAGE_HPP

#include <cstdint>
#include <vector>

#include "texdefect/errors.hpp"

namespace texdefect {

/// Single-channel raster with an explicit dynamic range.
///
/// Pixels are stored row-major: pixel (row, col) lives at
/// pixels[row * width + col] and holds a value in [0, levels - 1].
class GrayImage {
public:
    GrayImage() = default;

    /// Allocates a width x height image filled with `fill`.
    GrayImage(int width, int height, int levels, std::uint8_t fill = 0);

    /// Wraps an existing pixel buffer. Throws PreconditionError if the
    /// buffer size or any pixel value is inconsistent with the header.
    GrayImage(int width, int height, int levels, std::vector<std::uint8_t> pixels);

    int width() const { return width_; }
    int height() const { return height_; }
    int levels() const { return levels_; }

    std::uint8_t at(int row, int col) const { return pixels_[static_cast<std::size_t>(row) * width_ + col]; }
    std::uint8_t& at(int row, int col) { return pixels_[static_cast<std::size_t>(row) * width_ + col]; }

    const std::uint8_t* row(int r) const { return pixels_.data() + static_cast<std::size_t>(r) * width_; }
    std::uint8_t* row(int r) { return pixels_.data() + static_cast<std::size_t>(r) * width_; }

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }
    std::vector<std::uint8_t>& pixels() { return pixels_; }

    std::size_t pixel_count() const { return pixels_.size(); }

    bool operator==(const GrayImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    int levels_ = 0;
    std::vector<std::uint8_t> pixels_;
};

/// Row-major boolean grid, always sized like the original (uncropped) image.
class BinaryMask {
public:
    BinaryMask() = default;
    BinaryMask(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }

    bool test(int row, int col) const { return bits_[static_cast<std::size_t>(row) * width_ + col] != 0; }
    void set(int row, int col, bool value = true) {
        bits_[static_cast<std::size_t>(row) * width_ + col] = value ? 1 : 0;
    }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    /// Number of set pixels.
    std::size_t count() const;

    bool empty() const { return count() == 0; }

    bool operator==(const BinaryMask&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> bits_;
};

} // namespace texdefect

#endif // TEXDEFECT_IMAGE_HPP
