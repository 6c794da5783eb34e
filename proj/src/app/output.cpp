#include "app/output.hpp"

#include <fmt/format.h>

#include <cstdio>
#include <fstream>

#include "parabose/error.hpp"

namespace parabose::app {

void CsvTable::add(std::vector<double> row) {
    if (row.size() != header_.size()) raise(ErrorKind::io, "csv row width differs from header");
    rows_.push_back(std::move(row));
}

std::string format_number(double v, int precision) {
    if (v == 0.0) return "0";
    return fmt::format("{:.{}g}", v, precision);
}

std::string tag(double v) { return fmt::format("{:g}", v); }

std::string CsvTable::render(int precision) const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) out += (i ? "," : "") + header_[i];
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i], precision);
        }
        out += '\n';
    }
    return out;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) raise(ErrorKind::io, "cannot create directory " + path.parent_path().string());
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) raise(ErrorKind::io, "cannot open " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) raise(ErrorKind::io, "write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        raise(ErrorKind::io, "cannot rename into " + path.string());
    }
}

std::string plot_script(const std::filesystem::path& csv, const std::vector<std::string>& header) {
    std::string s = "set datafile separator ','\nset key autotitle columnhead\nset xlabel '" + header.front() + "'\nplot ";
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (i > 1) s += ", \\\n     ";
        s += fmt::format("'{}' using 1:{} with linespoints", csv.filename().string(), i + 1);
    }
    return s + "\npause -1\n";
}

}  // namespace parabose::app
