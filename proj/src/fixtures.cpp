#include "ywall/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef YWALL_DEFAULT_FIXTURE_DIR
#define YWALL_DEFAULT_FIXTURE_DIR "data"
#endif

namespace ywall {

namespace {

std::vector<std::string> content_lines(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open fixture " + path.string());
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back(line);
    }
    return lines;
}

} // namespace

std::filesystem::path fixture_dir()
{
    if (const char* env = std::getenv("YWALL_FIXTURE_DIR"); env && *env)
        return env;
    return YWALL_DEFAULT_FIXTURE_DIR;
}

std::vector<std::tuple<std::string, Color, std::string>> read_edge_fixture(const std::filesystem::path& path)
{
    std::vector<std::tuple<std::string, Color, std::string>> out;
    for (const auto& line : content_lines(path)) {
        std::istringstream row(line);
        std::string src, dst;
        Color color = -1;
        if (!(row >> src >> color >> dst))
            throw std::runtime_error("malformed edge line in " + path.string() + ": " + line);
        out.emplace_back(src, color, dst);
    }
    return out;
}

std::vector<std::vector<int>> read_table_fixture(const std::filesystem::path& path)
{
    std::vector<std::vector<int>> out;
    for (const auto& line : content_lines(path)) {
        std::istringstream row(line);
        auto& values = out.emplace_back();
        for (int v; row >> v;)
            values.push_back(v);
        if (!row.eof())
            throw std::runtime_error("malformed table line in " + path.string() + ": " + line);
    }
    return out;
}

std::filesystem::path edge_fixture_path(AffineType type)
{
    return fixture_dir() / (type == AffineType::D4_3 ? "b1_d4_3.edges" : "b1_g2_1.edges");
}

std::filesystem::path energy_fixture_path(AffineType type)
{
    return fixture_dir() / (type == AffineType::D4_3 ? "energy_d4_3.tsv" : "energy_g2_1.tsv");
}

} // namespace ywall
