#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "texdefect/clustering.hpp"

using namespace texdefect;

namespace {

DissimilarityMatrix matrix_from(int n, const std::vector<double>& upper) {
    DissimilarityMatrix d(n);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            d.set(i, j, upper.at(k++));
        }
    }
    REQUIRE(k == upper.size());
    return d;
}

/// Planted two-cluster matrix: members of `defect` (0-based indices) sit far
/// from the rest; distances drawn within the given bands.
DissimilarityMatrix planted_matrix(std::mt19937& rng, int n, const std::set<int>& defect,
                                   double within_max = 0.1, double cross_min = 0.9) {
    std::uniform_real_distribution<double> within(0.0, within_max);
    std::uniform_real_distribution<double> cross(cross_min, 1.0);
    DissimilarityMatrix d(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool split = defect.count(i) != defect.count(j);
            d.set(i, j, split ? cross(rng) : within(rng));
        }
    }
    return d;
}

std::set<int> to_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

bool partition_matches(const TwoClusters& cut, const std::set<int>& planted_ids) {
    return to_set(cut.first) == planted_ids || to_set(cut.second) == planted_ids;
}

// Exhaustive check that the planted bipartition is the unique one whose
// largest within-cluster distance stays below its smallest cross distance.
bool planted_is_unique_margin_partition(const DissimilarityMatrix& d,
                                        const std::set<int>& planted_ids) {
    const int n = d.size();
    int found = 0;
    bool planted_found = false;
    // Index 0 stays on one fixed side, so each bipartition is visited once.
    for (unsigned long bits = 1; bits < (1ul << (n - 1)); ++bits) {
        std::set<int> side;
        for (int i = 1; i < n; ++i) {
            if ((bits >> (i - 1)) & 1ul) side.insert(i);
        }
        double max_within = 0.0;
        double min_cross = 2.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const bool split = side.count(i) != side.count(j);
                if (split) {
                    min_cross = std::min(min_cross, d.at(i, j));
                } else {
                    max_within = std::max(max_within, d.at(i, j));
                }
            }
        }
        if (max_within < min_cross) {
            ++found;
            std::set<int> ids;
            for (int i : side) ids.insert(i + 1);
            std::set<int> complement;
            for (int i = 0; i < n; ++i) {
                if (!side.count(i)) complement.insert(i + 1);
            }
            if (ids == planted_ids || complement == planted_ids) planted_found = true;
        }
    }
    return found == 1 && planted_found;
}

} // namespace

TEST_CASE("two blocks merge once at their distance") {
    DissimilarityMatrix d = matrix_from(2, {0.4});
    Dendrogram dend = agglomerate(d, Linkage::Average);
    REQUIRE(dend.merges.size() == 1);
    CHECK(dend.merges[0].cluster_a == 1);
    CHECK(dend.merges[0].cluster_b == 2);
    CHECK(dend.merges[0].height == 0.4);
    CHECK(dend.merges[0].size == 2);

    TwoClusters cut = cut_two(dend);
    CHECK(cut.first == std::vector<int>{1});
    CHECK(cut.second == std::vector<int>{2});
}

TEST_CASE("zero matrix merges everything at height zero") {
    DissimilarityMatrix d(4);
    for (Linkage linkage : {Linkage::Single, Linkage::Complete, Linkage::Average}) {
        Dendrogram dend = agglomerate(d, linkage);
        REQUIRE(dend.merges.size() == 3);
        for (const auto& m : dend.merges) CHECK(m.height == 0.0);
        TwoClusters cut = cut_two(dend);
        CHECK(!cut.first.empty());
        CHECK(!cut.second.empty());
        CHECK(cut.first.size() + cut.second.size() == 4);
    }
}

TEST_CASE("tight groups merge internally before the final cross merge") {
    std::mt19937 rng(101);
    const std::set<int> defect_idx{1, 4};
    DissimilarityMatrix d = planted_matrix(rng, 6, defect_idx);
    const std::set<int> defect_ids{2, 5};
    for (Linkage linkage : {Linkage::Single, Linkage::Complete, Linkage::Average}) {
        Dendrogram dend = agglomerate(d, linkage);
        CHECK(dend.merges.back().height >= 0.9);
        CHECK(partition_matches(cut_two(dend), defect_ids));
    }
}

TEST_CASE("merge heights are non-decreasing on random matrices") {
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);
        DissimilarityMatrix d(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) d.set(i, j, unit(rng));
        }
        for (Linkage linkage : {Linkage::Single, Linkage::Complete, Linkage::Average}) {
            Dendrogram dend = agglomerate(d, linkage);
            for (std::size_t k = 1; k < dend.merges.size(); ++k) {
                CHECK(dend.merges[k].height >= dend.merges[k - 1].height - 1e-12);
            }
            CHECK(dend.merges.back().size == n);
        }
    }
}

TEST_CASE("equal-height chain resolves by the lowest-id tie break") {
    // All pairwise distances equal: merges must proceed (1,2), (merged,3), ...
    DissimilarityMatrix d = matrix_from(4, {0.5, 0.5, 0.5, 0.5, 0.5, 0.5});
    Dendrogram dend = agglomerate(d, Linkage::Single);
    REQUIRE(dend.merges.size() == 3);
    CHECK(dend.merges[0].cluster_a == 1);
    CHECK(dend.merges[0].cluster_b == 2);
    CHECK(dend.merges[1].cluster_a == 3);
    CHECK(dend.merges[1].cluster_b == 4);
    CHECK(dend.merges[2].cluster_a == 5);
    CHECK(dend.merges[2].cluster_b == 6);
    TwoClusters cut = cut_two(dend);
    CHECK(cut.first == std::vector<int>{1, 2});
    CHECK(cut.second == std::vector<int>{3, 4});
}

TEST_CASE("agglomerate rejects trivially small inputs") {
    CHECK_THROWS_AS(DissimilarityMatrix(1), PreconditionError);
}

TEST_CASE("planted partitions are recovered across linkages and seeds") {
    for (int seed = 0; seed < 25; ++seed) {
        std::mt19937 rng(200 + seed);
        const int n = 5 + static_cast<int>(rng() % 8); // 5..12
        std::uniform_int_distribution<int> size_pick(1, n / 2);
        const int defect_count = size_pick(rng);
        std::set<int> defect_idx;
        while (static_cast<int>(defect_idx.size()) < defect_count) {
            defect_idx.insert(static_cast<int>(rng() % n));
        }
        DissimilarityMatrix d = planted_matrix(rng, n, defect_idx);
        std::set<int> defect_ids;
        for (int i : defect_idx) defect_ids.insert(i + 1);

        REQUIRE(planted_is_unique_margin_partition(d, defect_ids));
        for (Linkage linkage : {Linkage::Single, Linkage::Complete, Linkage::Average}) {
            CHECK(partition_matches(cut_two(agglomerate(d, linkage)), defect_ids));
        }
    }
}

TEST_CASE("monotone transforms leave single and complete cuts unchanged") {
    std::mt19937 rng(211);
    std::uniform_real_distribution<double> unit(0.01, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 6;
        DissimilarityMatrix d(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) d.set(i, j, unit(rng));
        }
        DissimilarityMatrix squared(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) squared.set(i, j, d.at(i, j) * d.at(i, j));
        }
        for (Linkage linkage : {Linkage::Single, Linkage::Complete}) {
            TwoClusters a = cut_two(agglomerate(d, linkage));
            TwoClusters b = cut_two(agglomerate(squared, linkage));
            CHECK(to_set(a.first) == to_set(b.first));
            CHECK(to_set(a.second) == to_set(b.second));
        }
    }
}

TEST_CASE("relabeling blocks permutes the defective set") {
    std::mt19937 rng(223);
    const std::set<int> defect_idx{0, 3};
    DissimilarityMatrix d = planted_matrix(rng, 7, defect_idx);
    BlockLabels base = label_defective(cut_two(agglomerate(d, Linkage::Average)), d);

    // Apply a permutation pi to block positions: entry (i,j) of the permuted
    // matrix is d(pi(i), pi(j)).
    std::vector<int> pi{2, 0, 6, 4, 1, 5, 3};
    DissimilarityMatrix dp(7);
    for (int i = 0; i < 7; ++i) {
        for (int j = i + 1; j < 7; ++j) {
            dp.set(i, j, d.at(pi[static_cast<std::size_t>(i)], pi[static_cast<std::size_t>(j)]));
        }
    }
    BlockLabels permuted = label_defective(cut_two(agglomerate(dp, Linkage::Average)), dp);

    std::set<int> expected;
    for (int pos = 0; pos < 7; ++pos) {
        if (std::find(base.defective_ids.begin(), base.defective_ids.end(),
                      pi[static_cast<std::size_t>(pos)] + 1) != base.defective_ids.end()) {
            expected.insert(pos + 1);
        }
    }
    CHECK(to_set(permuted.defective_ids) == expected);
}

TEST_CASE("minority cluster is labeled defective") {
    std::mt19937 rng(227);
    const std::set<int> defect_idx{5, 9};
    DissimilarityMatrix d = planted_matrix(rng, 12, defect_idx);
    BlockLabels labels = label_defective(cut_two(agglomerate(d, Linkage::Average)), d);
    CHECK(labels.total_blocks == 12);
    CHECK(labels.defective_ids == std::vector<int>{6, 10});
    CHECK(labels.is_defective(6));
    CHECK(!labels.is_defective(1));
}

TEST_CASE("equal-size tie falls back to the lowest block id") {
    DissimilarityMatrix d = matrix_from(2, {0.7});
    BlockLabels labels = label_defective(cut_two(agglomerate(d, Linkage::Average)), d);
    CHECK(labels.defective_ids == std::vector<int>{1});

    // Regression: a 4-block split into two pairs keeps the rule deterministic.
    DissimilarityMatrix d4 = matrix_from(4, {0.05, 0.9, 0.9, 0.9, 0.9, 0.05});
    BlockLabels four = label_defective(cut_two(agglomerate(d4, Linkage::Average)), d4);
    CHECK(four.defective_ids == std::vector<int>{1, 2});
}

TEST_CASE("gap test reports no defects for flat matrices") {
    DissimilarityMatrix d(6); // all zero
    Dendrogram dend = agglomerate(d, Linkage::Average);
    CHECK(no_defects_by_gap(dend, d, 2.0));

    std::mt19937 rng(229);
    std::uniform_real_distribution<double> tight(0.20, 0.24);
    DissimilarityMatrix noisy(8);
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) noisy.set(i, j, tight(rng));
    }
    Dendrogram noisy_dend = agglomerate(noisy, Linkage::Average);
    CHECK(no_defects_by_gap(noisy_dend, noisy, 2.0));

    const std::set<int> defect_idx{2};
    DissimilarityMatrix planted = planted_matrix(rng, 8, defect_idx, 0.05, 0.9);
    Dendrogram planted_dend = agglomerate(planted, Linkage::Average);
    CHECK(!no_defects_by_gap(planted_dend, planted, 2.0));
}

TEST_CASE("dendrogram JSON lists leaves and merges") {
    DissimilarityMatrix d = matrix_from(2, {0.25});
    Dendrogram dend = agglomerate(d, Linkage::Single);
    CHECK(dendrogram_to_json(dend) ==
          "{\"leaves\":[1,2],\"merges\":[{\"a\":1,\"b\":2,\"height\":0.25,\"size\":2}]}");
}

TEST_CASE("block lists render in caption style") {
    CHECK(format_block_list({}) == "(none)");
    CHECK(format_block_list({8}) == "(8)");
    CHECK(format_block_list({8, 9}) == "(8 and 9)");
    CHECK(format_block_list({8, 9, 15, 16}) == "(8, 9, 15, and 16)");
}
