#include <doctest.h>

#include "texdefect/dissimilarity.hpp"
#include "texdefect/imaging.hpp"
#include "texdefect/synth.hpp"

using namespace texdefect;

namespace {

SynthSpec base_spec() {
    SynthSpec spec;
    spec.unit = make_dot_unit(16, 16);
    spec.tile_rows = 4;
    spec.tile_cols = 4;
    spec.seed = 42;
    return spec;
}

} // namespace

TEST_CASE("noise-free generation tiles the unit exactly") {
    SynthSpec spec = base_spec();
    SynthResult out = generate(spec);
    CHECK(out.image.width() == 64);
    CHECK(out.image.height() == 64);
    CHECK(out.truth.count() == 0);
    for (int r = 0; r < 64; ++r) {
        for (int c = 0; c < 64; ++c) {
            CHECK(out.image.at(r, c) == spec.unit.at(r % 16, c % 16));
        }
    }
    // Exact tiling: all four croppings are identical.
    const Periodicity p{16, 16};
    const GrayImage q = quantize(out.image, 64);
    const BlockGrid tl = crop_corner(q, Corner::TopLeft, p);
    for (Corner corner : {Corner::BottomLeft, Corner::TopRight, Corner::BottomRight}) {
        CHECK(crop_corner(q, corner, p).crop == tl.crop);
    }
}

TEST_CASE("identical blocks of a clean tiling have zero distance") {
    SynthSpec spec = base_spec();
    SynthResult out = generate(spec);
    const BlockGrid grid = crop_corner(quantize(out.image, 64), Corner::TopLeft, Periodicity{16, 16});
    std::vector<JointHistogram> sigs;
    const auto offsets = default_offsets();
    for (const Block& b : partition_blocks(grid)) {
        sigs.push_back(block_signature(b.image, offsets));
    }
    DissimilarityMatrix d = dissimilarity_matrix(sigs);
    for (int i = 0; i < d.size(); ++i) {
        for (int j = 0; j < d.size(); ++j) {
            CHECK(d.at(i, j) == 0.0);
        }
    }
}

TEST_CASE("generation is deterministic for a fixed seed") {
    SynthSpec spec = base_spec();
    spec.noise_sigma = 3.0;
    spec.defects.push_back(DefectSpec{DefectShape::Bar, 10, 4, 3, 40, -40});
    SynthResult a = generate(spec);
    SynthResult b = generate(spec);
    CHECK(a.image == b.image);
    CHECK(a.truth == b.truth);

    spec.seed = 43;
    SynthResult c = generate(spec);
    CHECK(a.image != c.image);
}

TEST_CASE("bar defect footprint matches the mask exactly") {
    SynthSpec spec = base_spec();
    spec.defects.push_back(DefectSpec{DefectShape::Bar, 12, 8, 3, 40, -40});
    SynthResult out = generate(spec);
    CHECK(out.truth.count() == 3u * 40u);
    SynthResult clean = generate(base_spec());
    for (int r = 0; r < 64; ++r) {
        for (int c = 0; c < 64; ++c) {
            const bool inside = r >= 12 && r < 15 && c >= 8 && c < 48;
            CHECK(out.truth.test(r, c) == inside);
            if (inside) {
                const long expect = std::max(0L, static_cast<long>(clean.image.at(r, c)) - 40);
                CHECK(out.image.at(r, c) == expect);
            } else {
                CHECK(out.image.at(r, c) == clean.image.at(r, c));
            }
        }
    }
}

TEST_CASE("blob and broken-line footprints") {
    SynthSpec spec = base_spec();
    spec.defects.push_back(DefectSpec{DefectShape::Blob, 8, 8, 12, 12, 40});
    SynthResult blob = generate(spec);
    // Inscribed ellipse: strictly smaller than the box, centered inside it.
    CHECK(blob.truth.count() > 0);
    CHECK(blob.truth.count() < 12u * 12u);
    CHECK(blob.truth.test(14, 14));
    CHECK(!blob.truth.test(8, 8));

    SynthSpec line = base_spec();
    line.defects.push_back(DefectSpec{DefectShape::BrokenLine, 20, 4, 2, 50, -40});
    SynthResult broken = generate(line);
    // Gap of 10 columns centered in the 50-wide run: 2 rows x 40 columns set.
    CHECK(broken.truth.count() == 2u * 40u);
    CHECK(broken.truth.test(20, 4));
    CHECK(!broken.truth.test(20, 29)); // inside the gap
    CHECK(broken.truth.test(20, 45));
}

TEST_CASE("defects outside the image are rejected") {
    SynthSpec spec = base_spec();
    spec.defects.push_back(DefectSpec{DefectShape::Bar, 60, 0, 10, 10, 40});
    CHECK_THROWS_AS(generate(spec), PreconditionError);
    spec.defects.clear();
    spec.defects.push_back(DefectSpec{DefectShape::Bar, -1, 0, 4, 4, 40});
    CHECK_THROWS_AS(generate(spec), PreconditionError);
}

TEST_CASE("oversized defects violate the minority assumption") {
    SynthSpec spec = base_spec();
    spec.defects.push_back(DefectSpec{DefectShape::Bar, 0, 0, 64, 64, 40});
    CHECK_THROWS_AS(generate(spec), PreconditionError);
}

TEST_CASE("built-in units have figure and ground at the requested levels") {
    GrayImage dot = make_dot_unit(16, 16, 190, 60);
    CHECK(dot.at(8, 8) == 190);
    CHECK(dot.at(0, 0) == 60);

    GrayImage box = make_box_unit(16, 16, 190, 60);
    CHECK(box.at(4, 8) == 190);  // top edge of the outline
    CHECK(box.at(8, 8) == 60);   // hollow center
    CHECK(box.at(0, 0) == 60);
}
