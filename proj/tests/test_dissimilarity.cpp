#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "texdefect/dissimilarity.hpp"

using namespace texdefect;

namespace {

JointHistogram histogram_from(std::vector<double> values, int levels) {
    values.resize(static_cast<std::size_t>(levels) * levels, 0.0);
    return JointHistogram(levels, std::move(values));
}

JointHistogram random_histogram(std::mt19937& rng, int levels, double sparsity = 0.0) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> values(static_cast<std::size_t>(levels) * levels, 0.0);
    double total = 0.0;
    for (auto& v : values) {
        if (sparsity > 0.0 && unit(rng) < sparsity) continue;
        v = unit(rng);
        total += v;
    }
    if (total == 0.0) {
        values[0] = 1.0;
        total = 1.0;
    }
    for (auto& v : values) v /= total;
    return JointHistogram(levels, std::move(values));
}

} // namespace

TEST_CASE("distance of a histogram to itself is exactly zero") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        JointHistogram h = random_histogram(rng, 8);
        CHECK(chi_square_distance(h, h) == 0.0);
    }
}

TEST_CASE("disjoint supports give distance one") {
    JointHistogram p = histogram_from({0.25, 0.75, 0.0, 0.0}, 2);
    JointHistogram q = histogram_from({0.0, 0.0, 0.5, 0.5}, 2);
    CHECK(chi_square_distance(p, q) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-bin example evaluates to sqrt(1/3)") {
    // Mass confined to the first two bins of a 2x2 histogram; the remaining
    // bins are empty on both sides and contribute nothing.
    JointHistogram p = histogram_from({0.5, 0.5}, 2);
    JointHistogram q = histogram_from({1.0, 0.0}, 2);
    CHECK(chi_square_distance(p, q) == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("mismatched level counts are rejected") {
    std::mt19937 rng(67);
    JointHistogram a = random_histogram(rng, 4);
    JointHistogram b = random_histogram(rng, 8);
    CHECK_THROWS_AS(chi_square_distance(a, b), PreconditionError);
}

TEST_CASE("small bins weigh more than large bins for the same difference") {
    // Two histogram pairs differing by the same 0.05 in one bin; the pair
    // whose bin mass is smaller must be farther apart.
    JointHistogram small_p = histogram_from({0.06, 0.94, 0.0, 0.0}, 2);
    JointHistogram small_q = histogram_from({0.01, 0.99, 0.0, 0.0}, 2);
    JointHistogram large_p = histogram_from({0.50, 0.50, 0.0, 0.0}, 2);
    JointHistogram large_q = histogram_from({0.45, 0.55, 0.0, 0.0}, 2);
    CHECK(chi_square_distance(small_p, small_q) > chi_square_distance(large_p, large_q));
}

TEST_CASE("metric properties hold on random histogram triples") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 500; ++trial) {
        const double sparsity = trial % 2 ? 0.8 : 0.0;
        JointHistogram a = random_histogram(rng, 8, sparsity);
        JointHistogram b = random_histogram(rng, 8, sparsity);
        JointHistogram c = random_histogram(rng, 8, sparsity);
        const double ab = chi_square_distance(a, b);
        const double ba = chi_square_distance(b, a);
        const double ac = chi_square_distance(a, c);
        const double bc = chi_square_distance(b, c);
        CHECK(ab == ba);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0 + 1e-12);
        CHECK(ac <= ab + bc + 1e-12);
    }
}

TEST_CASE("dissimilarity matrix of identical signatures is zero") {
    std::mt19937 rng(73);
    JointHistogram h = random_histogram(rng, 8);
    std::vector<JointHistogram> sigs(5, h);
    DissimilarityMatrix d = dissimilarity_matrix(sigs);
    REQUIRE(d.size() == 5);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            CHECK(d.at(i, j) == 0.0);
        }
    }
}

TEST_CASE("two disjoint signatures give the unit matrix pattern") {
    JointHistogram p = histogram_from({1.0, 0.0, 0.0, 0.0}, 2);
    JointHistogram q = histogram_from({0.0, 0.0, 0.0, 1.0}, 2);
    std::vector<JointHistogram> sigs{p, q};
    DissimilarityMatrix d = dissimilarity_matrix(sigs);
    CHECK(d.at(0, 0) == 0.0);
    CHECK(d.at(1, 1) == 0.0);
    CHECK(d.at(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.at(1, 0) == d.at(0, 1));
}

TEST_CASE("matrix agrees with a brute-force all-pairs recomputation") {
    std::mt19937 rng(79);
    std::vector<JointHistogram> sigs;
    for (int i = 0; i < 7; ++i) sigs.push_back(random_histogram(rng, 8));
    DissimilarityMatrix d = dissimilarity_matrix(sigs);
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            const double expect = i == j ? 0.0 : chi_square_distance(sigs[i], sigs[j]);
            CHECK(d.at(i, j) == expect);
        }
    }
}

TEST_CASE("fewer than two signatures is an error") {
    std::mt19937 rng(83);
    std::vector<JointHistogram> one{random_histogram(rng, 4)};
    CHECK_THROWS_AS(dissimilarity_matrix(one), PreconditionError);
}

TEST_CASE("permuting signatures permutes rows and columns identically") {
    std::mt19937 rng(89);
    std::vector<JointHistogram> sigs;
    for (int i = 0; i < 6; ++i) sigs.push_back(random_histogram(rng, 8));
    DissimilarityMatrix d = dissimilarity_matrix(sigs);

    std::vector<int> perm{3, 0, 5, 1, 4, 2};
    std::vector<JointHistogram> shuffled;
    for (int i : perm) shuffled.push_back(sigs[static_cast<std::size_t>(i)]);
    DissimilarityMatrix ds = dissimilarity_matrix(shuffled);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            CHECK(ds.at(i, j) == d.at(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));
        }
    }
}

TEST_CASE("average of per-offset matrices stays within range") {
    std::mt19937 rng(97);
    std::vector<DissimilarityMatrix> mats;
    for (int k = 0; k < 3; ++k) {
        std::vector<JointHistogram> sigs;
        for (int i = 0; i < 4; ++i) sigs.push_back(random_histogram(rng, 8));
        mats.push_back(dissimilarity_matrix(sigs));
    }
    DissimilarityMatrix avg = average_matrices(mats);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double sum = 0.0;
            for (const auto& m : mats) sum += m.at(i, j);
            CHECK(avg.at(i, j) == doctest::Approx(sum / 3.0).epsilon(1e-15));
            CHECK(avg.at(i, j) >= 0.0);
            CHECK(avg.at(i, j) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("CSV export is square and plain") {
    JointHistogram p = histogram_from({1.0, 0.0, 0.0, 0.0}, 2);
    JointHistogram q = histogram_from({0.0, 0.0, 0.0, 1.0}, 2);
    std::vector<JointHistogram> sigs{p, q};
    DissimilarityMatrix d = dissimilarity_matrix(sigs);
    CHECK(d.to_csv() == "0,1\n1,0\n");
}

TEST_CASE("heatmap maps the unit interval onto 0..255") {
    DissimilarityMatrix d(2);
    d.set(0, 1, 0.5);
    GrayImage heat = d.to_heatmap();
    CHECK(heat.at(0, 0) == 0);
    CHECK(heat.at(0, 1) == 128);
    CHECK(heat.at(1, 0) == 128);
}
