#include "texdefect/dissimilarity.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace texdefect {

DissimilarityMatrix::DissimilarityMatrix(int n) : n_(n) {
    if (n < 2) {
        throw PreconditionError("DissimilarityMatrix: need at least 2 blocks");
    }
    d_.assign(static_cast<std::size_t>(n) * n, 0.0);
    block_ids_.resize(static_cast<std::size_t>(n));
    std::iota(block_ids_.begin(), block_ids_.end(), 1);
}

std::string DissimilarityMatrix::to_csv() const {
    std::ostringstream out;
    char buf[32];
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (j) out << ',';
            std::snprintf(buf, sizeof(buf), "%.9g", at(i, j));
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

GrayImage DissimilarityMatrix::to_heatmap() const {
    std::vector<std::uint8_t> pixels(static_cast<std::size_t>(n_) * n_);
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        const double v = d_[i] < 0.0 ? 0.0 : (d_[i] > 1.0 ? 1.0 : d_[i]);
        pixels[i] = static_cast<std::uint8_t>(std::lround(v * 255.0));
    }
    return GrayImage(n_, n_, 256, std::move(pixels));
}

double chi_square_distance(const JointHistogram& p, const JointHistogram& q) {
    if (p.levels() != q.levels()) {
        throw PreconditionError("chi_square_distance: histograms have different level counts");
    }
    const std::vector<double>& a = p.probs();
    const std::vector<double>& b = q.probs();
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double sum = a[i] + b[i];
        if (sum > 0.0) {
            const double diff = a[i] - b[i];
            acc += diff * diff / sum;
        }
    }
    return std::sqrt(0.5 * acc);
}

DissimilarityMatrix dissimilarity_matrix(std::span<const JointHistogram> signatures) {
    if (signatures.size() < 2) {
        throw PreconditionError("dissimilarity_matrix: need at least 2 signatures");
    }
    const int n = static_cast<int>(signatures.size());
    DissimilarityMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            out.set(i, j, chi_square_distance(signatures[i], signatures[j]));
        }
    }
    return out;
}

DissimilarityMatrix average_matrices(std::span<const DissimilarityMatrix> matrices) {
    if (matrices.empty()) {
        throw PreconditionError("average_matrices: empty input");
    }
    const int n = matrices.front().size();
    for (const DissimilarityMatrix& m : matrices) {
        if (m.size() != n) {
            throw PreconditionError("average_matrices: size mismatch");
        }
    }
    DissimilarityMatrix out(n);
    const double inv = 1.0 / static_cast<double>(matrices.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double sum = 0.0;
            for (const DissimilarityMatrix& m : matrices) sum += m.at(i, j);
            out.set(i, j, sum * inv);
        }
    }
    return out;
}

} // namespace texdefect
