#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace parabose::app {

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<double> row);
    std::size_t rows() const { return rows_.size(); }
    const std::vector<std::string>& header() const { return header_; }
    // Every value printed with `precision` significant digits, shortest of fixed/exponent form.
    std::string render(int precision) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<double>> rows_;
};

// Temp file in the same directory, then rename over the target.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string format_number(double v, int precision);

// Tag used in file names, e.g. 2.5 -> "2.5".
std::string tag(double v);

// Generic gnuplot commands plotting column 1 against each other column.
std::string plot_script(const std::filesystem::path& csv, const std::vector<std::string>& header);

}  // namespace parabose::app
