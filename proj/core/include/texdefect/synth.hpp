#ifndef TEXDEFECT_SYNTH_HPP
#define TEXDEFECT_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "texdefect/image.hpp"

namespace texdefect {

enum class DefectShape { Bar, Blob, BrokenLine };

std::string defect_shape_name(DefectShape s);
DefectShape parse_defect_shape(const std::string& name);

/// One injected defect: an additive intensity perturbation over a footprint
/// anchored at (row, col) with extent rows x cols.
///   bar         - the full rectangle (thin or thick bar, depending on extent)
///   blob        - the ellipse inscribed in the rectangle
///   broken-line - the rectangle with a central gap along its long axis
struct DefectSpec {
    DefectShape shape = DefectShape::Bar;
    int row = 0;
    int col = 0;
    int rows = 0;
    int cols = 0;
    int delta = -40; // gray levels, added and clamped
};

/// Recipe for a synthetic periodic texture with ground truth.
struct SynthSpec {
    GrayImage unit;             // one periodic unit (256 levels)
    int tile_rows = 0;          // vertical repetitions
    int tile_cols = 0;          // horizontal repetitions
    double noise_sigma = 0.0;   // i.i.d. gaussian noise, gray levels
    std::vector<DefectSpec> defects;
    std::uint64_t seed = 0;
};

struct SynthResult {
    GrayImage image;
    BinaryMask truth; // exactly the perturbed pixels
};

/// Bright disc on a dark ground (dot-patterned unit).
GrayImage make_dot_unit(int rows, int cols, std::uint8_t foreground = 190,
                        std::uint8_t background = 60);

/// Bright square outline on a dark ground (box-patterned unit).
GrayImage make_box_unit(int rows, int cols, std::uint8_t foreground = 190,
                        std::uint8_t background = 60);

/// Tiles the unit, adds clamped gaussian noise, applies the defects, and
/// marks their footprints in the ground-truth mask. Fully deterministic for
/// a given seed. Throws PreconditionError if a defect leaves the image or
/// defects would cover half the image or more.
SynthResult generate(const SynthSpec& spec);

} // namespace texdefect

#endif // TEXDEFECT_SYNTH_HPP
