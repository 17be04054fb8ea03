#pragma once

// Corpus benchmark: per-image rate/quality table in the column order
// AMBTC, Level1..Level4 (optionally prefixed by classic BTC).

#include <filesystem>
#include <string>
#include <vector>

#include "ibtc/codec.hpp"
#include "ibtc/metrics.hpp"
#include "ibtc/raster.hpp"

namespace ibtc::cli {

struct BenchCell {
    double bpp = 0.0;
    double psnr = 0.0;
};

struct BenchRow {
    std::string image;
    std::vector<BenchCell> cells;  // parallel to BenchTable::modes
};

struct BenchTable {
    std::vector<Mode> modes;
    std::vector<BenchRow> rows;
    BenchRow average;
};

std::vector<Mode> bench_modes(bool with_btc);

/// Encode, serialize, parse back, decode and measure one image in memory.
QualityReport run_pipeline(const Raster& image, Mode mode);

BenchRow bench_image(const std::string& name, const Raster& image, const std::vector<Mode>& modes);

/// Sorted *.pgm files directly inside `dir`.
std::vector<std::filesystem::path> list_corpus(const std::filesystem::path& dir);

/// Rows are ordered by filename. Throws Error on an empty corpus.
BenchTable run_bench(const std::filesystem::path& corpus_dir, bool with_btc);

std::string render_csv(const BenchTable& table);
std::string render_markdown(const BenchTable& table);

/// Fixed four decimals with trailing zeros trimmed: 2, 2.5, 1.75.
std::string format_bpp(double bpp);
/// Two decimals, or "inf".
std::string format_psnr(double psnr);

}  // namespace ibtc::cli
