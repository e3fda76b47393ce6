#include "catwig/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace catwig {

std::string format_sig9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string grid_to_csv(const WignerGrid& g) {
    const GridSpec& spec = g.spec;
    std::string out = "x,y,w\n";
    out.reserve(out.size() + static_cast<std::size_t>(spec.nx) * spec.ny * 32);
    for (int row = 0; row < spec.ny; ++row) {
        for (int col = 0; col < spec.nx; ++col) {
            const PhasePoint p = spec.point(row, col);
            out += format_sig9(p.x);
            out += ',';
            out += format_sig9(p.y);
            out += ',';
            out += format_sig9(g.at(row, col));
            out += '\n';
        }
    }
    return out;
}

std::string sweep_to_csv(const SweepResult& r) {
    std::string out = "param,metric\n";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        out += format_sig9(r.params[i]);
        out += ',';
        out += format_sig9(r.values[i]);
        out += '\n';
    }
    if (!r.skipped.empty()) {
        out += "# skipped:";
        for (std::size_t i = 0; i < r.skipped.size(); ++i) {
            out += i == 0 ? " " : ",";
            out += format_sig9(r.skipped[i]);
        }
        out += '\n';
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path dest{path};
    fs::path tmp = dest;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open for writing: " + tmp.string());
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, dest, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("rename failed: " + dest.string());
    }
}

}  // namespace catwig
