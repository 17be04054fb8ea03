#include "bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ibtc/container.hpp"
#include "ibtc/errors.hpp"
#include "ibtc/pnm_io.hpp"

namespace ibtc::cli {

namespace {

std::string column_label(Mode mode) {
    switch (mode) {
        case Mode::Btc: return "BTC";
        case Mode::Ambtc: return "AMBTC";
        case Mode::L1: return "Level1";
        case Mode::L2: return "Level2";
        case Mode::L3: return "Level3";
        case Mode::L4: return "Level4";
    }
    return "?";
}

}  // namespace

std::string format_bpp(double bpp) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", bpp);
    std::string s = buf;
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
    return s;
}

std::string format_psnr(double psnr) {
    if (std::isinf(psnr)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", psnr);
    return buf;
}

std::vector<Mode> bench_modes(bool with_btc) {
    std::vector<Mode> modes;
    if (with_btc) modes.push_back(Mode::Btc);
    modes.insert(modes.end(), {Mode::Ambtc, Mode::L1, Mode::L2, Mode::L3, Mode::L4});
    return modes;
}

QualityReport run_pipeline(const Raster& image, Mode mode) {
    const CompressedImage encoded = encode_image(image, mode);
    const std::vector<std::uint8_t> bytes = serialize(encoded);
    const CompressedImage parsed = deserialize(bytes);
    const Raster decoded = decode_image(parsed);
    return measure(image, decoded, parsed);
}

BenchRow bench_image(const std::string& name, const Raster& image, const std::vector<Mode>& modes) {
    BenchRow row;
    row.image = name;
    for (Mode m : modes) {
        const QualityReport r = run_pipeline(image, m);
        row.cells.push_back({r.bpp, r.psnr});
    }
    return row;
}

std::vector<std::filesystem::path> list_corpus(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    return files;
}

BenchTable run_bench(const std::filesystem::path& corpus_dir, bool with_btc) {
    if (!std::filesystem::is_directory(corpus_dir)) {
        throw Error("corpus directory not found: " + corpus_dir.string());
    }
    const auto files = list_corpus(corpus_dir);
    if (files.empty()) throw Error("no .pgm images in " + corpus_dir.string());

    BenchTable table;
    table.modes = bench_modes(with_btc);
    for (const auto& f : files) {
        table.rows.push_back(bench_image(f.stem().string(), load_pgm(f), table.modes));
    }

    // PSNR is averaged in dB, as the usual comparison tables do.
    table.average.image = "Average";
    const double n = static_cast<double>(table.rows.size());
    for (std::size_t c = 0; c < table.modes.size(); ++c) {
        BenchCell avg;
        for (const auto& row : table.rows) {
            avg.bpp += row.cells[c].bpp;
            avg.psnr += row.cells[c].psnr;
        }
        avg.bpp /= n;
        avg.psnr /= n;
        table.average.cells.push_back(avg);
    }
    return table;
}

std::string render_csv(const BenchTable& table) {
    std::ostringstream out;
    out << "image";
    for (Mode m : table.modes) {
        out << ',' << mode_name(m) << "_bpp," << mode_name(m) << "_psnr";
    }
    out << '\n';
    auto emit = [&](const BenchRow& row) {
        out << row.image;
        for (const auto& cell : row.cells) {
            out << ',' << format_bpp(cell.bpp) << ',' << format_psnr(cell.psnr);
        }
        out << '\n';
    };
    for (const auto& row : table.rows) emit(row);
    emit(table.average);
    return out.str();
}

std::string render_markdown(const BenchTable& table) {
    std::ostringstream out;
    out << "| Image |";
    for (Mode m : table.modes) {
        out << ' ' << column_label(m) << " bpp | " << column_label(m) << " PSNR |";
    }
    out << "\n|---|";
    for (std::size_t i = 0; i < table.modes.size(); ++i) out << "---:|---:|";
    out << '\n';
    auto emit = [&](const BenchRow& row) {
        out << "| " << row.image << " |";
        for (const auto& cell : row.cells) {
            out << ' ' << format_bpp(cell.bpp) << " | " << format_psnr(cell.psnr) << " |";
        }
        out << '\n';
    };
    for (const auto& row : table.rows) emit(row);
    emit(table.average);
    return out.str();
}

}  // namespace ibtc::cli
