#pragma once

#include <filesystem>
#include <string>

#include "adsq/io.hpp"

namespace adsq {

// Deterministic SVG from a CSV table. kind = "heatmap" expects columns
// (x, y, value [, more value columns -> first is used]); kind = "line" treats
// the first column as x and every other column as a series. Signed heatmap
// data gets a diverging palette centered at zero.
void render_svg(const CsvTable& table, const std::string& kind,
                const std::filesystem::path& out_path);

}  // namespace adsq
