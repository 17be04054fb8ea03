#include "ibtc/metrics.hpp"

#include <cmath>

#include "ibtc/errors.hpp"

namespace ibtc {

double mse(const Raster& a, const Raster& b) {
    if (a.width != b.width || a.height != b.height) {
        throw InvalidArgument("mse: dimension mismatch");
    }
    if (a.pixels.empty()) throw InvalidArgument("mse: empty raster");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(a.pixels[i]) - b.pixels[i];
        acc += static_cast<std::uint64_t>(d * d);
    }
    return static_cast<double>(acc) / static_cast<double>(a.pixels.size());
}

double psnr(double mse) {
    if (mse <= 0.0) return kInfinitePsnr;
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double bpp(const CompressedImage& ci, const Raster& original) {
    return static_cast<double>(ci.payload_bits()) /
           static_cast<double>(original.width * original.height);
}

QualityReport measure(const Raster& original, const Raster& reconstructed,
                      const CompressedImage& ci) {
    QualityReport r;
    r.mode = ci.mode;
    r.mse = mse(original, reconstructed);
    r.psnr = psnr(r.mse);
    r.bpp = bpp(ci, original);
    return r;
}

}  // namespace ibtc
