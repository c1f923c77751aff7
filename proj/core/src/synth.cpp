#include "texdefect/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace texdefect {

std::string defect_shape_name(DefectShape s) {
    switch (s) {
        case DefectShape::Bar: return "bar";
        case DefectShape::Blob: return "blob";
        case DefectShape::BrokenLine: return "broken-line";
    }
    return "?";
}

DefectShape parse_defect_shape(const std::string& name) {
    if (name == "bar") return DefectShape::Bar;
    if (name == "blob") return DefectShape::Blob;
    if (name == "broken-line") return DefectShape::BrokenLine;
    throw PreconditionError("unknown defect shape '" + name + "' (bar|blob|broken-line)");
}

GrayImage make_dot_unit(int rows, int cols, std::uint8_t foreground, std::uint8_t background) {
    GrayImage unit(cols, rows, 256, background);
    const double cr = (rows - 1) / 2.0;
    const double cc = (cols - 1) / 2.0;
    const double radius = std::min(rows, cols) / 4.0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const double dr = r - cr;
            const double dc = c - cc;
            if (dr * dr + dc * dc <= radius * radius) unit.at(r, c) = foreground;
        }
    }
    return unit;
}

GrayImage make_box_unit(int rows, int cols, std::uint8_t foreground, std::uint8_t background) {
    GrayImage unit(cols, rows, 256, background);
    const int inset_r = rows / 4;
    const int inset_c = cols / 4;
    const int r0 = inset_r;
    const int r1 = rows - 1 - inset_r;
    const int c0 = inset_c;
    const int c1 = cols - 1 - inset_c;
    for (int c = c0; c <= c1; ++c) {
        unit.at(r0, c) = foreground;
        unit.at(r1, c) = foreground;
    }
    for (int r = r0; r <= r1; ++r) {
        unit.at(r, c0) = foreground;
        unit.at(r, c1) = foreground;
    }
    return unit;
}

namespace {

// Box-Muller on raw generator output, so the noise stream does not depend on
// the standard library's distribution internals.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();       // [0, 1)
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

std::uint8_t clamp_level(long v, int levels) {
    if (v < 0) return 0;
    if (v > levels - 1) return static_cast<std::uint8_t>(levels - 1);
    return static_cast<std::uint8_t>(v);
}

void paint_defect(const DefectSpec& d, GrayImage& img, BinaryMask& truth) {
    if (d.rows < 1 || d.cols < 1) {
        throw PreconditionError("generate: defect extent must be >= 1x1");
    }
    if (d.row < 0 || d.col < 0 || d.row + d.rows > img.height() || d.col + d.cols > img.width()) {
        std::ostringstream msg;
        msg << "generate: " << defect_shape_name(d.shape) << " defect at (" << d.row << ","
            << d.col << ") size " << d.rows << "x" << d.cols << " exceeds image bounds";
        throw PreconditionError(msg.str());
    }

    auto covers = [&d](int r, int c) {
        switch (d.shape) {
            case DefectShape::Bar:
                return true;
            case DefectShape::Blob: {
                const double cr = d.row + (d.rows - 1) / 2.0;
                const double cc = d.col + (d.cols - 1) / 2.0;
                const double ar = d.rows / 2.0;
                const double ac = d.cols / 2.0;
                const double nr = (r - cr) / ar;
                const double nc = (c - cc) / ac;
                return nr * nr + nc * nc <= 1.0;
            }
            case DefectShape::BrokenLine: {
                // Central gap along the long axis, one fifth of its length.
                if (d.cols >= d.rows) {
                    const int gap = std::max(1, d.cols / 5);
                    const int g0 = d.col + (d.cols - gap) / 2;
                    return c < g0 || c >= g0 + gap;
                }
                const int gap = std::max(1, d.rows / 5);
                const int g0 = d.row + (d.rows - gap) / 2;
                return r < g0 || r >= g0 + gap;
            }
        }
        return false;
    };

    for (int r = d.row; r < d.row + d.rows; ++r) {
        for (int c = d.col; c < d.col + d.cols; ++c) {
            if (!covers(r, c)) continue;
            img.at(r, c) = clamp_level(static_cast<long>(img.at(r, c)) + d.delta, img.levels());
            truth.set(r, c);
        }
    }
}

} // namespace

SynthResult generate(const SynthSpec& spec) {
    if (spec.tile_rows < 1 || spec.tile_cols < 1) {
        throw PreconditionError("generate: tiling must repeat the unit at least once");
    }
    const int unit_rows = spec.unit.height();
    const int unit_cols = spec.unit.width();
    const int height = unit_rows * spec.tile_rows;
    const int width = unit_cols * spec.tile_cols;
    const int levels = spec.unit.levels();

    GrayImage image(width, height, levels);
    for (int r = 0; r < height; ++r) {
        const std::uint8_t* src = spec.unit.row(r % unit_rows);
        std::uint8_t* dst = image.row(r);
        for (int c = 0; c < width; ++c) {
            dst[c] = src[c % unit_cols];
        }
    }

    if (spec.noise_sigma > 0.0) {
        GaussianStream noise(spec.seed);
        for (int r = 0; r < height; ++r) {
            std::uint8_t* dst = image.row(r);
            for (int c = 0; c < width; ++c) {
                const long v = dst[c] + std::lround(spec.noise_sigma * noise.next());
                dst[c] = clamp_level(v, levels);
            }
        }
    }

    BinaryMask truth(width, height);
    for (const DefectSpec& d : spec.defects) {
        paint_defect(d, image, truth);
    }
    if (truth.count() * 2 >= static_cast<std::size_t>(width) * height && !spec.defects.empty()) {
        throw PreconditionError("generate: defects cover half the image or more");
    }

    return SynthResult{std::move(image), std::move(truth)};
}

} // namespace texdefect
