#include "texdefect/image.hpp"

#include <algorithm>
#include <numeric>

namespace texdefect {

namespace {

void check_header(int width, int height, int levels) {
    if (width < 1 || height < 1) {
        throw PreconditionError("GrayImage: width and height must be >= 1");
    }
    if (levels < 2 || levels > 256) {
        throw PreconditionError("GrayImage: levels must be in [2, 256]");
    }
}

} // namespace

GrayImage::GrayImage(int width, int height, int levels, std::uint8_t fill)
    : width_(width), height_(height), levels_(levels) {
    check_header(width, height, levels);
    if (fill >= levels) {
        throw PreconditionError("GrayImage: fill value out of range");
    }
    pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, int levels, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), levels_(levels), pixels_(std::move(pixels)) {
    check_header(width, height, levels);
    if (pixels_.size() != static_cast<std::size_t>(width) * height) {
        throw PreconditionError("GrayImage: pixel buffer size does not match dimensions");
    }
    const int lv = levels_;
    if (lv < 256 && std::any_of(pixels_.begin(), pixels_.end(),
                                [lv](std::uint8_t v) { return v >= lv; })) {
        throw PreconditionError("GrayImage: pixel value out of range for declared levels");
    }
}

BinaryMask::BinaryMask(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw PreconditionError("BinaryMask: width and height must be >= 1");
    }
    bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

std::size_t BinaryMask::count() const {
    return static_cast<std::size_t>(
        std::count_if(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; }));
}

} // namespace texdefect
