#include "cli.hpp"

#include <CLI11.hpp>

#include "bench.hpp"
#include "ibtc/codec.hpp"
#include "ibtc/container.hpp"
#include "ibtc/errors.hpp"
#include "ibtc/metrics.hpp"
#include "ibtc/pnm_io.hpp"

namespace ibtc::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Mode mode_from_flag(const std::string& flag) {
    if (auto m = parse_mode(flag)) return *m;
    throw UsageError("invalid --mode '" + flag + "' (expected btc, ambtc, l1, l2, l3 or l4)");
}

int cmd_compress(const std::string& input, const std::string& output, const std::string& mode_flag,
                 std::ostream& out) {
    const Mode mode = mode_from_flag(mode_flag);
    const Raster image = load_pgm(input);
    const CompressedImage ci = encode_image(image, mode);
    const auto bytes = serialize(ci);
    write_file(output, bytes);
    out << "mode=" << mode_name(mode) << " bpp=" << format_bpp(bpp(ci, image))
        << " payload_bytes=" << (ci.payload_bits() + 7) / 8 << " file_bytes=" << bytes.size()
        << '\n';
    return kExitOk;
}

int cmd_decompress(const std::string& input, const std::string& output, std::ostream& out,
                   std::ostream& err) {
    DeserializeDiagnostics diag;
    const CompressedImage ci = deserialize(read_file(input), &diag);
    if (diag.nonzero_padding) err << "warning: nonzero padding bits in " << input << '\n';
    const Raster image = decode_image(ci);
    save_pgm(output, image);
    out << "mode=" << mode_name(ci.mode) << " width=" << image.width
        << " height=" << image.height << '\n';
    return kExitOk;
}

int cmd_metrics(const std::string& original, const std::string& reconstructed, std::ostream& out) {
    const Raster a = load_pgm(original);
    const Raster b = load_pgm(reconstructed);
    const double e = mse(a, b);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", e);
    out << "MSE=" << buf << " PSNR=" << format_psnr(psnr(e)) << '\n';
    return kExitOk;
}

int cmd_bench(const std::string& corpus, const std::string& format, bool with_btc,
              std::ostream& out) {
    if (format != "csv" && format != "markdown") {
        throw UsageError("invalid --format '" + format + "' (expected csv or markdown)");
    }
    const BenchTable table = run_bench(corpus, with_btc);
    out << (format == "csv" ? render_csv(table) : render_markdown(table));
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Block truncation image codec: BTC, AMBTC and four-level ladder coding"};
    app.name(args.empty() ? "ibtc" : args.front());
    app.require_subcommand(1);

    std::string input, output, mode_flag;
    auto* compress = app.add_subcommand("compress", "Encode a PGM image into an .ibtc file");
    compress->add_option("input", input, "Input PGM")->required();
    compress->add_option("output", output, "Output .ibtc file")->required();
    compress->add_option("--mode,-m", mode_flag, "btc, ambtc, l1, l2, l3 or l4")->required();

    auto* decompress = app.add_subcommand("decompress", "Decode an .ibtc file into a PGM image");
    decompress->add_option("input", input, "Input .ibtc file")->required();
    decompress->add_option("output", output, "Output PGM")->required();

    std::string original, reconstructed;
    auto* metrics = app.add_subcommand("metrics", "Report MSE and PSNR between two PGM images");
    metrics->add_option("original", original, "Reference PGM")->required();
    metrics->add_option("reconstructed", reconstructed, "Reconstructed PGM")->required();

    std::string corpus, format = "csv";
    bool with_btc = false;
    auto* bench = app.add_subcommand("bench", "Rate/PSNR table over a directory of PGM images");
    bench->add_option("corpus", corpus, "Directory of PGM images")->required();
    bench->add_option("--format,-f", format, "csv or markdown");
    bench->add_flag("--with-btc", with_btc, "Add classic BTC columns");

    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (*compress) return cmd_compress(input, output, mode_flag, out);
        if (*decompress) return cmd_decompress(input, output, out, err);
        if (*metrics) return cmd_metrics(original, reconstructed, out);
        if (*bench) return cmd_bench(corpus, format, with_btc, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntimeError;
    }
    return kExitUsage;
}

}  // namespace ibtc::cli
