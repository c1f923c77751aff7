// texdefect: defect detection on periodic textures.
//
// Subcommands:
//   detect    run the detection pipeline and write masks/overlays
//   evaluate  score detections against a pixel ground-truth mask
//   synth     generate synthetic periodic textures with planted defects
//   bench     time the GLCM and all-pairs distance kernels
//
// Exit codes: 0 success, 2 I/O error, 3 precondition violation,
// 4 internal error; CLI usage errors return CLI11's own codes.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "texdefect/clustering.hpp"
#include "texdefect/dissimilarity.hpp"
#include "texdefect/evaluation.hpp"
#include "texdefect/image_io.hpp"
#include "texdefect/pipeline.hpp"
#include "texdefect/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace texdefect;

namespace {

constexpr int kExitIo = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

struct RunConfig {
    std::vector<std::string> inputs;
    int period_rows = 0; // P_r, columns per periodic unit
    int period_cols = 0; // P_c, rows per periodic unit
    int levels = 64;
    std::string offsets = "0,1;1,0;1,1;1,-1";
    std::string linkage = "average";
    std::string aggregate = "sum";
    std::optional<double> gap_factor;
    double min_overlap = 0.0;
    std::string out_dir = ".";
    std::vector<std::string> truth;
    std::vector<std::string> defect_types;
    std::uint64_t seed = 1;
    bool solid_blocks = false;
    bool symmetric_glcm = false;
    bool write_boundaries = false;
    bool write_heatmaps = false;
    bool dump_dendrograms = false;
    int dump_glcm_block = 0; // 0 = disabled
    double display_scale = 1.0;
    unsigned jobs = 0; // 0 = hardware default
};

void apply_config_file(const fs::path& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw IoError(path.string() + ": cannot open config file");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw IoError(path.string() + ": " + e.what());
    }
    try {
        if (doc.contains("inputs")) cfg.inputs = doc["inputs"].get<std::vector<std::string>>();
        if (doc.contains("period_rows")) cfg.period_rows = doc["period_rows"].get<int>();
        if (doc.contains("period_cols")) cfg.period_cols = doc["period_cols"].get<int>();
        if (doc.contains("levels")) cfg.levels = doc["levels"].get<int>();
        if (doc.contains("offsets")) cfg.offsets = doc["offsets"].get<std::string>();
        if (doc.contains("linkage")) cfg.linkage = doc["linkage"].get<std::string>();
        if (doc.contains("aggregate")) cfg.aggregate = doc["aggregate"].get<std::string>();
        if (doc.contains("gap_factor")) cfg.gap_factor = doc["gap_factor"].get<double>();
        if (doc.contains("min_overlap")) cfg.min_overlap = doc["min_overlap"].get<double>();
        if (doc.contains("out_dir")) cfg.out_dir = doc["out_dir"].get<std::string>();
        if (doc.contains("truth")) cfg.truth = doc["truth"].get<std::vector<std::string>>();
        if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("solid_blocks")) cfg.solid_blocks = doc["solid_blocks"].get<bool>();
        if (doc.contains("symmetric_glcm")) cfg.symmetric_glcm = doc["symmetric_glcm"].get<bool>();
        if (doc.contains("display_scale")) cfg.display_scale = doc["display_scale"].get<double>();
        if (doc.contains("jobs")) cfg.jobs = doc["jobs"].get<unsigned>();
    } catch (const json::exception& e) {
        throw PreconditionError(path.string() + ": " + e.what());
    }
}

DetectOptions to_detect_options(const RunConfig& cfg) {
    if (cfg.period_rows < 2 || cfg.period_cols < 2) {
        throw PreconditionError("periodicity must be at least 2 pixels in each direction "
                                "(--period-rows/--period-cols)");
    }
    if (cfg.levels < 2 || cfg.levels > 256) {
        throw PreconditionError("--levels must lie in [2, 256]");
    }
    DetectOptions opt;
    opt.period = Periodicity{cfg.period_rows, cfg.period_cols};
    opt.levels = cfg.levels;
    opt.offsets = parse_offsets(cfg.offsets);
    for (const Offset& o : opt.offsets) {
        if (std::abs(o.d_row) >= cfg.period_cols || std::abs(o.d_col) >= cfg.period_rows) {
            std::ostringstream msg;
            msg << "offset (" << o.d_row << "," << o.d_col << ") does not fit in a "
                << cfg.period_cols << "x" << cfg.period_rows << " block";
            throw PreconditionError(msg.str());
        }
    }
    opt.linkage = parse_linkage(cfg.linkage);
    opt.aggregation = parse_aggregation(cfg.aggregate);
    opt.symmetric_glcm = cfg.symmetric_glcm;
    opt.solid_blocks = cfg.solid_blocks;
    opt.gap_factor = cfg.gap_factor;
    return opt;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path.string() + ": cannot open for writing");
    out << text;
    if (!out) throw IoError(path.string() + ": write failed");
}

GrayImage scale_for_display(const GrayImage& img, double factor) {
    if (factor == 1.0) return img;
    std::vector<std::uint8_t> pixels(img.pixel_count());
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        const long v = std::lround(img.pixels()[i] * factor);
        pixels[i] = static_cast<std::uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
    }
    return GrayImage(img.width(), img.height(), img.levels(), std::move(pixels));
}

unsigned effective_jobs(const RunConfig& cfg, std::size_t task_count) {
    unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(jobs, task_count));
}

// ---------------------------------------------------------------- detect ---

struct DetectOutcome {
    std::string stdout_text;
    bool any_defects = false;
};

DetectOutcome detect_one(const fs::path& input, const RunConfig& cfg,
                         const DetectOptions& options) {
    GrayImage original = load_grayscale(input);
    DefectReport report = detect(original, options);

    const fs::path out_dir(cfg.out_dir);
    const std::string stem = input.stem().string();

    std::ostringstream text;
    text << stem << ": " << original.width() << "x" << original.height() << ", "
         << report.croppings[0].grid.block_count() << " blocks per cropping\n";

    json report_json;
    report_json["image"] = input.string();
    report_json["period_rows"] = cfg.period_rows;
    report_json["period_cols"] = cfg.period_cols;
    report_json["levels"] = cfg.levels;
    report_json["offsets"] = cfg.offsets;
    report_json["linkage"] = cfg.linkage;
    report_json["aggregate"] = cfg.aggregate;
    report_json["croppings"] = json::array();

    for (std::size_t i = 0; i < 4; ++i) {
        const CroppingResult& c = report.croppings[i];
        const std::string name = corner_name(c.grid.source_corner);
        const std::string slug = corner_slug(c.grid.source_corner);
        text << "  " << name << ": defective blocks "
             << format_block_list(c.labels.defective_ids) << "\n";

        write_text(out_dir / (stem + ".dissimilarity." + slug + ".csv"),
                   c.dissimilarity.to_csv());
        if (cfg.write_heatmaps) {
            save_png(out_dir / (stem + ".dissimilarity." + slug + ".png"),
                     c.dissimilarity.to_heatmap());
        }
        if (cfg.write_boundaries) {
            save_mask_png(out_dir / (stem + ".boundaries." + slug + ".png"),
                          report.boundary_masks[i]);
        }
        if (cfg.dump_dendrograms) {
            write_text(out_dir / (stem + ".dendrogram." + slug + ".json"),
                       dendrogram_to_json(c.dendrogram));
        }
        if (cfg.dump_glcm_block > 0) {
            std::vector<Block> blocks = partition_blocks(c.grid);
            if (cfg.dump_glcm_block > static_cast<int>(blocks.size())) {
                throw PreconditionError("--dump-glcm-block: block id out of range");
            }
            const Block& b = blocks[static_cast<std::size_t>(cfg.dump_glcm_block - 1)];
            const CountMatrix counts =
                accumulate_counts(b.image, options.offsets, options.symmetric_glcm);
            write_text(out_dir / (stem + ".glcm." + slug + ".block" +
                                  std::to_string(cfg.dump_glcm_block) + ".csv"),
                       counts.to_csv());
        }

        json cj;
        cj["corner"] = name;
        cj["origin"] = {c.grid.origin_row, c.grid.origin_col};
        cj["blocks"] = c.labels.total_blocks;
        cj["defective_ids"] = c.labels.defective_ids;
        cj["no_defects"] = c.no_defects;
        report_json["croppings"].push_back(cj);
    }

    save_mask_png(out_dir / (stem + ".mask.png"), report.filled);
    const GrayImage base = scale_for_display(original, cfg.display_scale);
    save_png(out_dir / (stem + ".defects.png"), edge_overlay(report.filled, base));

    const bool any = report.any_defects();
    report_json["any_defects"] = any;
    write_text(out_dir / (stem + ".report.json"), report_json.dump(2) + "\n");

    if (!any) text << "  no defects found\n";
    return DetectOutcome{text.str(), any};
}

int run_detect(const RunConfig& cfg) {
    if (cfg.inputs.empty()) throw PreconditionError("detect: no input images given");
    const DetectOptions options = to_detect_options(cfg);
    fs::create_directories(cfg.out_dir);

    const unsigned jobs = effective_jobs(cfg, cfg.inputs.size());
    std::vector<DetectOutcome> outcomes(cfg.inputs.size());
    for (std::size_t base = 0; base < cfg.inputs.size(); base += jobs) {
        const std::size_t end = std::min(cfg.inputs.size(), base + jobs);
        std::vector<std::future<DetectOutcome>> wave;
        for (std::size_t i = base; i < end; ++i) {
            wave.push_back(std::async(std::launch::async, [&, i] {
                return detect_one(cfg.inputs[i], cfg, options);
            }));
        }
        for (std::size_t i = base; i < end; ++i) {
            outcomes[i] = wave[i - base].get();
        }
    }
    for (const DetectOutcome& o : outcomes) std::cout << o.stdout_text;
    return 0;
}

// -------------------------------------------------------------- evaluate ---

int run_evaluate(const RunConfig& cfg) {
    if (cfg.inputs.empty()) throw PreconditionError("evaluate: no input images given");
    if (cfg.truth.empty()) throw PreconditionError("evaluate: --truth mask required");
    if (cfg.truth.size() != 1 && cfg.truth.size() != cfg.inputs.size()) {
        throw PreconditionError("evaluate: give one --truth mask, or one per input");
    }
    if (!cfg.defect_types.empty() && cfg.defect_types.size() != 1 &&
        cfg.defect_types.size() != cfg.inputs.size()) {
        throw PreconditionError("evaluate: give one --defect-type, or one per input");
    }
    if (cfg.min_overlap < 0.0 || cfg.min_overlap >= 1.0) {
        throw PreconditionError("evaluate: --min-overlap must lie in [0, 1)");
    }
    const DetectOptions options = to_detect_options(cfg);
    fs::create_directories(cfg.out_dir);

    std::ostringstream csv;
    csv << "image, defect_type, n_blocks, precision, recall, accuracy\n";
    json all = json::array();
    Metrics mean_sum;
    long total_blocks = 0;

    for (std::size_t i = 0; i < cfg.inputs.size(); ++i) {
        const fs::path input(cfg.inputs[i]);
        const fs::path truth_path(cfg.truth.size() == 1 ? cfg.truth[0] : cfg.truth[i]);
        const std::string defect_type =
            cfg.defect_types.empty()
                ? "-"
                : (cfg.defect_types.size() == 1 ? cfg.defect_types[0] : cfg.defect_types[i]);

        const GrayImage original = load_grayscale(input);
        const BinaryMask truth = load_mask(truth_path);
        const DefectReport report = detect(original, options);
        const MetricsReport scored = evaluate(report, truth, cfg.min_overlap);

        csv << input.stem().string() << ", " << defect_type << ", "
            << format_metrics_row(scored.total_blocks, scored.averaged) << "\n";

        json entry;
        entry["image"] = input.string();
        entry["defect_type"] = defect_type;
        entry["total_blocks"] = scored.total_blocks;
        entry["averaged"] = {{"precision", scored.averaged.precision},
                             {"recall", scored.averaged.recall},
                             {"accuracy", scored.averaged.accuracy}};
        entry["croppings"] = json::array();
        for (const CroppingEval& e : scored.croppings) {
            entry["croppings"].push_back({{"corner", corner_name(e.corner)},
                                          {"tp", e.confusion.tp},
                                          {"fp", e.confusion.fp},
                                          {"tn", e.confusion.tn},
                                          {"fn", e.confusion.fn},
                                          {"precision", e.metrics.precision},
                                          {"recall", e.metrics.recall},
                                          {"accuracy", e.metrics.accuracy}});
        }
        all.push_back(entry);

        mean_sum.precision += scored.averaged.precision;
        mean_sum.recall += scored.averaged.recall;
        mean_sum.accuracy += scored.averaged.accuracy;
        total_blocks += scored.total_blocks;
    }

    json doc;
    doc["images"] = all;
    if (cfg.inputs.size() > 1) {
        const double n = static_cast<double>(cfg.inputs.size());
        const Metrics avg{mean_sum.precision / n, mean_sum.recall / n, mean_sum.accuracy / n};
        csv << "average, -, " << format_metrics_row(total_blocks, avg) << "\n";
        doc["average"] = {{"total_blocks", total_blocks},
                          {"precision", avg.precision},
                          {"recall", avg.recall},
                          {"accuracy", avg.accuracy}};
    }

    const std::string rendered = csv.str();
    write_text(fs::path(cfg.out_dir) / "report.csv", rendered);
    write_text(fs::path(cfg.out_dir) / "report.json", doc.dump(2) + "\n");
    std::cout << rendered;
    return 0;
}

// ----------------------------------------------------------------- synth ---

struct SynthCli {
    std::string pattern = "dot";
    int unit_rows = 16;
    int unit_cols = 16;
    int tile_rows = 8;
    int tile_cols = 8;
    double noise_sigma = 2.0;
    int foreground = 190;
    int background = 60;
    std::vector<std::string> defects;
};

DefectSpec parse_defect_arg(const std::string& text) {
    std::stringstream ss(text);
    std::string shape;
    if (!std::getline(ss, shape, ',')) {
        throw PreconditionError("--defect: expected shape,row,col,rows,cols,delta");
    }
    DefectSpec d;
    d.shape = parse_defect_shape(shape);
    std::string field;
    int values[5];
    for (int k = 0; k < 5; ++k) {
        if (!std::getline(ss, field, ',')) {
            throw PreconditionError("--defect: expected shape,row,col,rows,cols,delta, got '" +
                                    text + "'");
        }
        try {
            values[k] = std::stoi(field);
        } catch (const std::exception&) {
            throw PreconditionError("--defect: malformed number '" + field + "'");
        }
    }
    if (ss.rdbuf()->in_avail() > 0) {
        throw PreconditionError("--defect: trailing fields in '" + text + "'");
    }
    d.row = values[0];
    d.col = values[1];
    d.rows = values[2];
    d.cols = values[3];
    d.delta = values[4];
    return d;
}

int run_synth(const RunConfig& cfg, const SynthCli& s) {
    if (s.unit_rows < 2 || s.unit_cols < 2) {
        throw PreconditionError("synth: unit must be at least 2x2");
    }
    if (s.foreground < 0 || s.foreground > 255 || s.background < 0 || s.background > 255) {
        throw PreconditionError("synth: foreground/background must lie in [0, 255]");
    }
    SynthSpec spec;
    if (s.pattern == "dot") {
        spec.unit = make_dot_unit(s.unit_rows, s.unit_cols, static_cast<std::uint8_t>(s.foreground),
                                  static_cast<std::uint8_t>(s.background));
    } else if (s.pattern == "box") {
        spec.unit = make_box_unit(s.unit_rows, s.unit_cols, static_cast<std::uint8_t>(s.foreground),
                                  static_cast<std::uint8_t>(s.background));
    } else {
        throw PreconditionError("synth: unknown pattern '" + s.pattern + "' (dot|box)");
    }
    spec.tile_rows = s.tile_rows;
    spec.tile_cols = s.tile_cols;
    spec.noise_sigma = s.noise_sigma;
    spec.seed = cfg.seed;
    for (const std::string& text : s.defects) {
        spec.defects.push_back(parse_defect_arg(text));
    }

    const SynthResult out = generate(spec);
    fs::create_directories(cfg.out_dir);
    const fs::path dir(cfg.out_dir);
    save_png(dir / "image.png", out.image);
    save_mask_png(dir / "truth.png", out.truth);

    json doc;
    doc["pattern"] = s.pattern;
    doc["unit_rows"] = s.unit_rows;
    doc["unit_cols"] = s.unit_cols;
    doc["tile_rows"] = s.tile_rows;
    doc["tile_cols"] = s.tile_cols;
    doc["noise_sigma"] = s.noise_sigma;
    doc["foreground"] = s.foreground;
    doc["background"] = s.background;
    doc["seed"] = cfg.seed;
    doc["defects"] = json::array();
    for (const DefectSpec& d : spec.defects) {
        doc["defects"].push_back({{"shape", defect_shape_name(d.shape)},
                                  {"row", d.row},
                                  {"col", d.col},
                                  {"rows", d.rows},
                                  {"cols", d.cols},
                                  {"delta", d.delta}});
    }
    write_text(dir / "spec.json", doc.dump(2) + "\n");

    std::cout << "wrote " << (dir / "image.png").string() << " ("
              << out.image.width() << "x" << out.image.height() << ", "
              << out.truth.count() << " defect pixels)\n";
    return 0;
}

// ----------------------------------------------------------------- bench ---

struct BenchCli {
    int block_rows = 32;
    int block_cols = 32;
    std::string counts = "16,64";
    std::string out_file; // empty = stdout
};

int run_bench(const RunConfig& cfg, const BenchCli& b) {
    if (cfg.levels < 2 || cfg.levels > 256) {
        throw PreconditionError("--levels must lie in [2, 256]");
    }
    std::vector<int> counts;
    std::stringstream ss(b.counts);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            counts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw PreconditionError("bench: malformed --counts entry '" + tok + "'");
        }
        if (counts.back() < 1) throw PreconditionError("bench: block counts must be >= 1");
    }
    if (counts.empty()) throw PreconditionError("bench: empty --counts");

    const auto offsets = default_offsets();
    std::ostringstream csv;
    csv << "operation,blocks,block_rows,block_cols,levels,pairs,wall_ms\n";

    std::mt19937 rng(1);
    std::uniform_int_distribution<int> pick(0, cfg.levels - 1);
    using clock = std::chrono::steady_clock;

    for (int n : counts) {
        std::vector<GrayImage> blocks;
        blocks.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<std::uint8_t> pixels(static_cast<std::size_t>(b.block_rows) * b.block_cols);
            for (auto& px : pixels) px = static_cast<std::uint8_t>(pick(rng));
            blocks.emplace_back(b.block_cols, b.block_rows, cfg.levels, std::move(pixels));
        }

        const auto glcm_start = clock::now();
        std::vector<JointHistogram> signatures;
        signatures.reserve(blocks.size());
        for (const GrayImage& block : blocks) {
            signatures.push_back(block_signature(block, offsets));
        }
        const double glcm_ms =
            std::chrono::duration<double, std::milli>(clock::now() - glcm_start).count();
        char ms[32];
        std::snprintf(ms, sizeof(ms), "%.3f", glcm_ms);
        csv << "glcm," << n << ',' << b.block_rows << ',' << b.block_cols << ',' << cfg.levels
            << ",," << ms << "\n";

        const long pairs = static_cast<long>(n) * (n - 1) / 2;
        if (n < 2) {
            csv << "distance," << n << ',' << b.block_rows << ',' << b.block_cols << ','
                << cfg.levels << ",0,\n";
            continue;
        }
        const auto dist_start = clock::now();
        const DissimilarityMatrix d = dissimilarity_matrix(signatures);
        const double dist_ms =
            std::chrono::duration<double, std::milli>(clock::now() - dist_start).count();
        (void)d;
        std::snprintf(ms, sizeof(ms), "%.3f", dist_ms);
        csv << "distance," << n << ',' << b.block_rows << ',' << b.block_cols << ',' << cfg.levels
            << ',' << pairs << ',' << ms << "\n";
    }

    if (b.out_file.empty()) {
        std::cout << csv.str();
    } else {
        write_text(b.out_file, csv.str());
        std::cout << "wrote " << b.out_file << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ main ---

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "JSON config file; flags given here override it");
    cmd->add_option("--period-rows", cfg.period_rows,
                    "row periodicity P_r: width of one periodic unit, in pixels");
    cmd->add_option("--period-cols", cfg.period_cols,
                    "column periodicity P_c: height of one periodic unit, in pixels");
    cmd->add_option("--levels", cfg.levels, "gray levels after quantization (default 64)");
    cmd->add_option("--offsets", cfg.offsets, "GLCM offsets as 'dr,dc;dr,dc;...'");
    cmd->add_option("--linkage", cfg.linkage, "clustering linkage: single|complete|average");
    cmd->add_option("--aggregate", cfg.aggregate,
                    "signature aggregation: sum (one histogram) | per-offset (averaged distances)");
    cmd->add_option("--gap-factor", cfg.gap_factor,
                    "enable the no-defect guard: report no defects when the final merge height "
                    "is below FACTOR x median dissimilarity");
    cmd->add_option("--out-dir", cfg.out_dir, "output directory");
    cmd->add_flag("--solid-blocks", cfg.solid_blocks,
                  "fuse solid block rectangles instead of boundary outlines");
    cmd->add_flag("--symmetric-glcm", cfg.symmetric_glcm, "use C + C^T instead of directional C");
    cmd->add_option("--jobs", cfg.jobs, "max images processed in parallel");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Defect detection on periodic textures via GLCM chi-square clustering"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;

    // A config file provides defaults; explicit flags override them. The file
    // has to be applied before parsing, so fish it out of argv first.
    for (int i = 1; i < argc; ++i) {
        const std::string arg(argv[i]);
        std::string path;
        if (arg == "--config" && i + 1 < argc) {
            path = argv[i + 1];
        } else if (arg.rfind("--config=", 0) == 0) {
            path = arg.substr(9);
        } else {
            continue;
        }
        try {
            apply_config_file(path, cfg);
        } catch (const IoError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitIo;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitPrecondition;
        }
    }

    CLI::App* detect_cmd = app.add_subcommand("detect", "detect defects in images");
    detect_cmd->add_option("inputs", cfg.inputs, "input images (PNG or 8-bit PGM)");
    add_common_options(detect_cmd, cfg, config_path);
    detect_cmd->add_flag("--write-boundaries", cfg.write_boundaries,
                         "also write per-cropping boundary masks");
    detect_cmd->add_flag("--heatmaps", cfg.write_heatmaps,
                         "also write dissimilarity heatmap PNGs");
    detect_cmd->add_flag("--dump-dendrograms", cfg.dump_dendrograms,
                         "also write per-cropping dendrogram JSON");
    detect_cmd->add_option("--dump-glcm-block", cfg.dump_glcm_block,
                           "dump the aggregated GLCM counts of this block id as CSV");
    detect_cmd->add_option("--display-scale", cfg.display_scale,
                           "scale overlay luminance for display only (e.g. 0.5)");

    CLI::App* evaluate_cmd = app.add_subcommand("evaluate", "score detections against ground truth");
    evaluate_cmd->add_option("inputs", cfg.inputs, "input images");
    add_common_options(evaluate_cmd, cfg, config_path);
    evaluate_cmd->add_option("--truth", cfg.truth, "ground-truth mask(s), one or one-per-input");
    evaluate_cmd->add_option("--min-overlap", cfg.min_overlap,
                             "fraction of block pixels that must be defective (default 0)");
    evaluate_cmd->add_option("--defect-type", cfg.defect_types,
                             "defect label(s) for the report rows");

    SynthCli synth_cli;
    CLI::App* synth_cmd = app.add_subcommand("synth", "generate a synthetic periodic texture");
    synth_cmd->add_option("--pattern", synth_cli.pattern, "unit pattern: dot|box");
    synth_cmd->add_option("--unit-rows", synth_cli.unit_rows, "unit height in pixels");
    synth_cmd->add_option("--unit-cols", synth_cli.unit_cols, "unit width in pixels");
    synth_cmd->add_option("--tile-rows", synth_cli.tile_rows, "vertical repetitions");
    synth_cmd->add_option("--tile-cols", synth_cli.tile_cols, "horizontal repetitions");
    synth_cmd->add_option("--noise-sigma", synth_cli.noise_sigma, "gaussian noise sigma");
    synth_cmd->add_option("--fg", synth_cli.foreground, "figure gray level");
    synth_cmd->add_option("--bg", synth_cli.background, "ground gray level");
    synth_cmd->add_option("--defect", synth_cli.defects,
                          "planted defect: shape,row,col,rows,cols,delta (repeatable)");
    synth_cmd->add_option("--seed", cfg.seed, "RNG seed");
    synth_cmd->add_option("--out-dir", cfg.out_dir, "output directory")->required();

    BenchCli bench_cli;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time GLCM and distance kernels");
    bench_cmd->add_option("--levels", cfg.levels, "gray levels");
    bench_cmd->add_option("--block-rows", bench_cli.block_rows, "block height");
    bench_cmd->add_option("--block-cols", bench_cli.block_cols, "block width");
    bench_cmd->add_option("--counts", bench_cli.counts, "comma-separated block counts");
    bench_cmd->add_option("--out", bench_cli.out_file, "write CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (detect_cmd->parsed()) return run_detect(cfg);
        if (evaluate_cmd->parsed()) return run_evaluate(cfg);
        if (synth_cmd->parsed()) return run_synth(cfg, synth_cli);
        if (bench_cmd->parsed()) return run_bench(cfg, bench_cli);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
