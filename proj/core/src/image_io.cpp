#include "texdefect/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

namespace texdefect {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void io_fail(const std::filesystem::path& path, const std::string& what) {
    throw IoError(path.string() + ": " + what);
}

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    const double y = 0.299 * r + 0.587 * g + 0.114 * b;
    const long v = std::lround(y);
    return static_cast<std::uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
}

GrayImage load_png(const std::filesystem::path& path) {
    FilePtr file(std::fopen(path.string().c_str(), "rb"));
    if (!file) io_fail(path, "cannot open for reading");

    png_byte header[8];
    if (std::fread(header, 1, 8, file.get()) != 8 || png_sig_cmp(header, 0, 8) != 0) {
        io_fail(path, "not a PNG file");
    }

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) io_fail(path, "png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        io_fail(path, "png_create_info_struct failed");
    }

    std::vector<std::uint8_t> data;
    std::vector<png_bytep> row_ptrs;
    int width = 0;
    int height = 0;
    int channels = 0;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        io_fail(path, "PNG decode error (corrupt or truncated file)");
    }

    png_init_io(png, file.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    width = static_cast<int>(png_get_image_width(png, info));
    height = static_cast<int>(png_get_image_height(png, info));
    const png_byte color_type = png_get_color_type(png, info);
    const png_byte bit_depth = png_get_bit_depth(png, info);

    if (width < 1 || height < 1) {
        png_destroy_read_struct(&png, &info, nullptr);
        io_fail(path, "zero-dimension image");
    }

    // Normalize everything to 8-bit gray or RGB.
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    channels = png_get_channels(png, info);
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        io_fail(path, "unsupported PNG channel layout");
    }

    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    data.resize(stride * height);
    row_ptrs.resize(static_cast<std::size_t>(height));
    for (int r = 0; r < height; ++r) {
        row_ptrs[static_cast<std::size_t>(r)] = data.data() + static_cast<std::size_t>(r) * stride;
    }
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    std::vector<std::uint8_t> gray(static_cast<std::size_t>(width) * height);
    if (channels == 1) {
        gray = std::move(data);
    } else {
        for (std::size_t i = 0; i < gray.size(); ++i) {
            const std::uint8_t* px = data.data() + i * 3;
            gray[i] = luma(px[0], px[1], px[2]);
        }
    }
    return GrayImage(width, height, 256, std::move(gray));
}

// Reads the next PGM header token, skipping whitespace and '#' comments.
std::string next_pgm_token(std::istream& in) {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {
            }
        } else if (!std::isspace(ch)) {
            tok.push_back(static_cast<char>(ch));
            break;
        }
    }
    while ((ch = in.get()) != EOF && !std::isspace(ch) && ch != '#') {
        tok.push_back(static_cast<char>(ch));
    }
    if (ch == '#') in.unget();
    return tok;
}

long parse_pgm_int(std::istream& in, const std::filesystem::path& path, const char* field) {
    const std::string tok = next_pgm_token(in);
    if (tok.empty()) io_fail(path, std::string("truncated PGM header (missing ") + field + ")");
    try {
        return std::stol(tok);
    } catch (const std::exception&) {
        io_fail(path, std::string("malformed PGM ") + field);
    }
}

GrayImage load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) io_fail(path, "cannot open for reading");

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5')) {
        io_fail(path, "not a PGM file (expected P2 or P5)");
    }
    const bool binary = magic[1] == '5';

    const long width = parse_pgm_int(in, path, "width");
    const long height = parse_pgm_int(in, path, "height");
    const long maxval = parse_pgm_int(in, path, "maxval");
    if (width < 1 || height < 1) io_fail(path, "zero-dimension image");
    if (maxval < 1 || maxval > 255) io_fail(path, "unsupported PGM maxval (8-bit only)");

    std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height);
    if (binary) {
        // Exactly one whitespace byte separates the header from the raster.
        in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
        if (static_cast<std::size_t>(in.gcount()) != pixels.size()) io_fail(path, "truncated PGM raster");
    } else {
        for (auto& px : pixels) {
            const long v = parse_pgm_int(in, path, "pixel");
            if (v < 0 || v > maxval) io_fail(path, "PGM pixel out of range");
            px = static_cast<std::uint8_t>(v);
        }
    }
    for (auto px : pixels) {
        if (px > maxval) io_fail(path, "PGM pixel out of range");
    }
    return GrayImage(static_cast<int>(width), static_cast<int>(height), 256, std::move(pixels));
}

} // namespace

GrayImage load_grayscale(const std::filesystem::path& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) io_fail(path, "cannot open for reading");
    char magic[2] = {0, 0};
    probe.read(magic, 2);
    probe.close();
    if (magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5')) {
        return load_pgm(path);
    }
    if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
        return load_png(path);
    }
    io_fail(path, "unsupported format (PNG and 8-bit PGM only)");
}

void save_png(const std::filesystem::path& path, const GrayImage& img) {
    if (img.levels() != 256) {
        throw PreconditionError("save_png: image must have 256 levels (use spread_levels)");
    }
    FilePtr file(std::fopen(path.string().c_str(), "wb"));
    if (!file) io_fail(path, "cannot open for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) io_fail(path, "png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        io_fail(path, "png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        io_fail(path, "PNG encode error");
    }

    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
                 static_cast<png_uint_32>(img.height()), 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int r = 0; r < img.height(); ++r) {
        png_write_row(png, const_cast<png_bytep>(img.row(r)));
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

void save_pgm(const std::filesystem::path& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) io_fail(path, "cannot open for writing");
    out << "P5\n" << img.width() << " " << img.height() << "\n" << (img.levels() - 1) << "\n";
    out.write(reinterpret_cast<const char*>(img.pixels().data()),
              static_cast<std::streamsize>(img.pixel_count()));
    if (!out) io_fail(path, "write failed");
}

void save_mask_png(const std::filesystem::path& path, const BinaryMask& mask) {
    std::vector<std::uint8_t> pixels(mask.bits().size());
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        pixels[i] = mask.bits()[i] ? 255 : 0;
    }
    save_png(path, GrayImage(mask.width(), mask.height(), 256, std::move(pixels)));
}

BinaryMask load_mask(const std::filesystem::path& path) {
    const GrayImage img = load_grayscale(path);
    BinaryMask mask(img.width(), img.height());
    for (int r = 0; r < img.height(); ++r) {
        for (int c = 0; c < img.width(); ++c) {
            if (img.at(r, c) != 0) mask.set(r, c);
        }
    }
    return mask;
}

GrayImage spread_levels(const GrayImage& img) {
    if (img.levels() == 256) return img;
    std::vector<std::uint8_t> out(img.pixel_count());
    const double scale = 255.0 / (img.levels() - 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(std::lround(img.pixels()[i] * scale));
    }
    return GrayImage(img.width(), img.height(), 256, std::move(out));
}

} // namespace texdefect
