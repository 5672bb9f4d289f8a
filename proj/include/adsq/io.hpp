#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace adsq {

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// shortest decimal representation that round-trips a double
std::string format_real(double v);

void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace adsq
