#ifndef TEXDEFECT_TESTS_HELPERS_HPP
#define TEXDEFECT_TESTS_HELPERS_HPP

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "texdefect/image.hpp"

namespace testutil {

inline texdefect::GrayImage random_image(std::mt19937& rng, int width, int height, int levels) {
    std::uniform_int_distribution<int> pick(0, levels - 1);
    std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height);
    for (auto& px : pixels) px = static_cast<std::uint8_t>(pick(rng));
    return texdefect::GrayImage(width, height, levels, std::move(pixels));
}

/// Scratch directory under the current working directory, removed on scope exit.
class TempDir {
public:
    explicit TempDir(const std::string& name) : path_(std::filesystem::absolute("tmp_" + name)) {
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

} // namespace testutil

#endif // TEXDEFECT_TESTS_HELPERS_HPP
