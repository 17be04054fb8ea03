#pragma once

#include <cstdint>
#include <limits>

#include "ibtc/codec.hpp"
#include "ibtc/raster.hpp"

namespace ibtc {

inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

struct QualityReport {
    Mode mode = Mode::L1;
    double mse = 0.0;
    double psnr = kInfinitePsnr;
    double bpp = 0.0;
};

/// Mean squared error. Throws InvalidArgument on a dimension mismatch.
double mse(const Raster& a, const Raster& b);

/// 10 log10(255^2 / mse); infinite for a perfect reconstruction.
double psnr(double mse);

/// Payload bits (header excluded) per original pixel.
double bpp(const CompressedImage& ci, const Raster& original);

QualityReport measure(const Raster& original, const Raster& reconstructed,
                      const CompressedImage& ci);

}  // namespace ibtc
