#pragma once

#include "ywall/cartan.hpp"

#include <iosfwd>
#include <string>

namespace ywall::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

enum class GenFormat { Dot, Json, Mult };

struct RunConfig {
    AffineType type = AffineType::D4_3;
    std::string weight = "L0";
    int depth = 6;
    GenFormat format = GenFormat::Mult;
    std::string output; // empty: stdout
    int verbosity = 0;
};

/// "L0" / "L2" -> Lambda_0 / Lambda_2; throws std::invalid_argument when the
/// weight is not level-1 dominant for the type.
Weight parse_weight(AffineType type, const std::string& text);

GenFormat parse_format(const std::string& text);

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// emit: "table" or "diff".
int cmd_energy(AffineType type, const std::string& emit, std::ostream& out, std::ostream& err);
int cmd_adjacent(AffineType type, bool with_count, std::ostream& out);
int cmd_verify(const std::string& suite, int depth, int range, int verbosity, std::ostream& out, std::ostream& err);

/// Full command line entry point (argv[0] included).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ywall::cli
