#pragma once

#include "ywall/crystal.hpp"

#include <filesystem>
#include <string>
#include <tuple>
#include <vector>

namespace ywall {

/// $YWALL_FIXTURE_DIR if set, otherwise the data/ directory of the source tree.
std::filesystem::path fixture_dir();

/// Lines "src color dst"; blank lines and '#' comments are skipped.
std::vector<std::tuple<std::string, Color, std::string>> read_edge_fixture(const std::filesystem::path& path);

/// Whitespace-separated integer matrix; '#' comments are skipped.
std::vector<std::vector<int>> read_table_fixture(const std::filesystem::path& path);

std::filesystem::path edge_fixture_path(AffineType type);
std::filesystem::path energy_fixture_path(AffineType type);

} // namespace ywall
