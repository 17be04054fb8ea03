#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "ibtc/raster.hpp"

namespace ibtc {

/// Parses binary (P5) or ASCII (P2) graymaps with maxval <= 255. Sample
/// values are kept as stored, not rescaled to 255. Throws ParseError.
Raster read_pgm(std::span<const std::uint8_t> bytes);

/// "P5\n<w> <h>\n255\n" followed by raw rows.
std::vector<std::uint8_t> write_pgm(const Raster& raster);

Raster load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const Raster& raster);

/// Whole-file helpers shared by the tools.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace ibtc
