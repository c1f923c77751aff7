#include "texdefect/glcm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace texdefect {

std::vector<Offset> default_offsets() {
    return {Offset{0, 1}, Offset{1, 0}, Offset{1, 1}, Offset{1, -1}};
}

std::vector<Offset> parse_offsets(const std::string& text) {
    std::vector<Offset> offsets;
    std::stringstream stream(text);
    std::string pair;
    while (std::getline(stream, pair, ';')) {
        if (pair.empty()) continue;
        std::stringstream ps(pair);
        int dr = 0;
        int dc = 0;
        char comma = 0;
        if (!(ps >> dr >> comma >> dc) || comma != ',' || (ps >> std::ws, !ps.eof())) {
            throw PreconditionError("parse_offsets: expected 'dr,dc' pairs separated by ';', got '" +
                                    pair + "'");
        }
        if (dr == 0 && dc == 0) {
            throw PreconditionError("parse_offsets: offset (0,0) is not allowed");
        }
        offsets.push_back(Offset{dr, dc});
    }
    if (offsets.empty()) {
        throw PreconditionError("parse_offsets: empty offset set");
    }
    return offsets;
}

std::uint64_t CountMatrix::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::string CountMatrix::to_csv() const {
    std::ostringstream out;
    for (int i = 0; i < levels_; ++i) {
        for (int j = 0; j < levels_; ++j) {
            if (j) out << ',';
            out << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

JointHistogram::JointHistogram(int levels, std::vector<double> probs)
    : levels_(levels), probs_(std::move(probs)) {
    if (levels < 2 || probs_.size() != static_cast<std::size_t>(levels) * levels) {
        throw PreconditionError("JointHistogram: size does not match levels");
    }
}

namespace {

void accumulate_glcm(const GrayImage& block, Offset offset, CountMatrix& out) {
    if (offset.d_row == 0 && offset.d_col == 0) {
        throw PreconditionError("compute_glcm: offset (0,0) is not allowed");
    }
    const int rows = block.height();
    const int cols = block.width();
    const int r0 = std::max(0, -offset.d_row);
    const int r1 = rows - std::max(0, offset.d_row);
    const int c0 = std::max(0, -offset.d_col);
    const int c1 = cols - std::max(0, offset.d_col);
    if (r0 >= r1 || c0 >= c1) {
        std::ostringstream msg;
        msg << "compute_glcm: offset (" << offset.d_row << "," << offset.d_col
            << ") leaves no valid pairs in a " << rows << "x" << cols << " block";
        throw PreconditionError(msg.str());
    }
    const int levels = block.levels();
    std::uint32_t* counts = &out.at(0, 0);
    for (int r = r0; r < r1; ++r) {
        const std::uint8_t* src = block.row(r);
        const std::uint8_t* dst = block.row(r + offset.d_row) + offset.d_col;
        for (int c = c0; c < c1; ++c) {
            ++counts[static_cast<std::size_t>(src[c]) * levels + dst[c]];
        }
    }
}

void add_transpose(CountMatrix& m) {
    const int levels = m.levels();
    for (int i = 0; i < levels; ++i) {
        for (int j = i; j < levels; ++j) {
            const std::uint32_t sum = m.at(i, j) + m.at(j, i);
            m.at(i, j) = sum;
            m.at(j, i) = sum;
        }
    }
}

} // namespace

CountMatrix compute_glcm(const GrayImage& block, Offset offset) {
    CountMatrix out(block.levels(), offset);
    accumulate_glcm(block, offset, out);
    return out;
}

JointHistogram normalize(const CountMatrix& counts) {
    const std::uint64_t total = counts.total();
    if (total == 0) {
        throw PreconditionError("normalize: all-zero count matrix");
    }
    std::vector<double> probs(counts.counts().size());
    const double inv = 1.0 / static_cast<double>(total);
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = static_cast<double>(counts.counts()[i]) * inv;
    }
    return JointHistogram(counts.levels(), std::move(probs));
}

CountMatrix accumulate_counts(const GrayImage& block, std::span<const Offset> offsets,
                              bool symmetrize) {
    if (offsets.empty()) {
        throw PreconditionError("block_signature: empty offset set");
    }
    CountMatrix acc(block.levels(), offsets.front());
    for (const Offset& offset : offsets) {
        accumulate_glcm(block, offset, acc);
    }
    if (symmetrize) add_transpose(acc);
    return acc;
}

JointHistogram block_signature(const GrayImage& block, std::span<const Offset> offsets,
                               bool symmetrize) {
    return normalize(accumulate_counts(block, offsets, symmetrize));
}

std::vector<JointHistogram> per_offset_signatures(const GrayImage& block,
                                                  std::span<const Offset> offsets,
                                                  bool symmetrize) {
    if (offsets.empty()) {
        throw PreconditionError("per_offset_signatures: empty offset set");
    }
    std::vector<JointHistogram> signatures;
    signatures.reserve(offsets.size());
    for (const Offset& offset : offsets) {
        CountMatrix m = compute_glcm(block, offset);
        if (symmetrize) add_transpose(m);
        signatures.push_back(normalize(m));
    }
    return signatures;
}

} // namespace texdefect
