#include "ywall/cli.hpp"

#include "ywall/energy.hpp"
#include "ywall/graph_io.hpp"
#include "ywall/verify.hpp"
#include "ywall/wall.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace ywall::cli {

Weight parse_weight(AffineType type, const std::string& text)
{
    if (text.size() != 2 || (text[0] != 'L' && text[0] != 'l') || text[1] < '0' || text[1] > '2')
        throw std::invalid_argument("weight must be L0, L1 or L2");
    const auto lambda = Weight::fundamental(text[1] - '0');
    if (!is_level_one_dominant(type, lambda))
        throw std::invalid_argument(text + " has level " + std::to_string(level(type, lambda)) + " for " +
                                    std::string(to_string(type)) + "; a level-1 weight is required");
    return lambda;
}

GenFormat parse_format(const std::string& text)
{
    if (text == "dot")
        return GenFormat::Dot;
    if (text == "json")
        return GenFormat::Json;
    if (text == "mult")
        return GenFormat::Mult;
    throw std::invalid_argument("format must be dot, json or mult");
}

namespace {

std::string multiplicity_tsv(const WallCrystal& crystal)
{
    std::map<std::pair<int, Weight>, int> mult;
    for (std::size_t k = 0; k < crystal.walls.size(); ++k)
        ++mult[{crystal.depth[k], crystal.graph.weight(ElementId{static_cast<std::uint32_t>(k)})}];
    std::ostringstream out;
    out << "depth\tm0\tm1\tm2\tdelta\tmultiplicity\n";
    for (const auto& [key, count] : mult) {
        const auto& [d, w] = key;
        out << d << '\t' << w.lambda[0] << '\t' << w.lambda[1] << '\t' << w.lambda[2] << '\t' << w.delta << '\t'
            << count << '\n';
    }
    return out.str();
}

} // namespace

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    Weight lambda;
    try {
        lambda = parse_weight(cfg.type, cfg.weight);
        if (cfg.depth < 0)
            throw std::invalid_argument("depth must be non-negative");
    } catch (const std::invalid_argument& e) {
        err << "gen: " << e.what() << '\n';
        return kExitUsage;
    }
    const auto crystal = generate_crystal(cfg.type, lambda, cfg.depth);
    std::string text;
    switch (cfg.format) {
    case GenFormat::Dot:
        text = export_dot(crystal.graph, std::string(to_string(cfg.type)) + "_" + cfg.weight);
        break;
    case GenFormat::Json:
        text = export_json(crystal.graph);
        break;
    case GenFormat::Mult:
        text = multiplicity_tsv(crystal);
        break;
    }
    if (cfg.output.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!(file << text)) {
            err << "gen: cannot write " << cfg.output << '\n';
            return kExitFail;
        }
        if (cfg.verbosity > 0)
            err << "wrote " << crystal.walls.size() << " walls to " << cfg.output << '\n';
    }
    return kExitPass;
}

int cmd_energy(AffineType type, const std::string& emit, std::ostream& out, std::ostream& err)
{
    const auto& b = perfect_crystal(type);
    const auto solved = solve_energy(b);
    if (emit == "table") {
        out << format_table(b, solved);
        return kExitPass;
    }
    if (emit == "diff") {
        const auto diff = compare_tables(reference_table(type), solved);
        for (const auto& m : diff)
            out << short_label(b.graph.label(m.left)) << '\t' << short_label(b.graph.label(m.right)) << "\treference "
                << m.expected << "\tsolved " << m.actual << '\n';
        return diff.empty() ? kExitPass : kExitFail;
    }
    err << "energy: --emit must be table or diff\n";
    return kExitUsage;
}

int cmd_adjacent(AffineType type, bool with_count, std::ostream& out)
{
    const auto pairs = enumerate_reduced_adjacent_pairs(type);
    if (with_count)
        out << pairs.size() << '\n';
    for (const auto& p : pairs)
        out << column_label(p.left) << '\t' << column_label(p.right) << "\tn_right-n_left=" << p.n_difference << '\n';
    return kExitPass;
}

int cmd_verify(const std::string& suite, int depth, int range, int verbosity, std::ostream& out, std::ostream& err)
{
    Report report;
    try {
        report = run_suite(suite, depth, range);
    } catch (const std::invalid_argument& e) {
        err << "verify: " << e.what() << '\n';
        return kExitUsage;
    }
    if (verbosity >= 0)
        report.print(out);
    const auto failed = std::count_if(report.checks.begin(), report.checks.end(), [](const auto& c) { return !c.passed; });
    out << (failed == 0 ? "OK" : "FAILED") << ": " << report.checks.size() - static_cast<std::size_t>(failed) << "/"
        << report.checks.size() << " checks passed\n";
    return failed == 0 ? kExitPass : kExitFail;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Young wall crystals for level-1 D4(3) and G2(1)", "ywall"};
    app.require_subcommand(1);

    std::string type_text = "d4_3";
    RunConfig cfg;
    std::string format_text = "mult";
    auto* gen = app.add_subcommand("gen", "Generate the top part of Y(lambda)");
    gen->add_option("--type", type_text, "d4_3 or g2_1")->required();
    gen->add_option("--weight", cfg.weight, "L0 or L2")->default_val("L0");
    gen->add_option("--depth", cfg.depth, "number of added blocks")->default_val(6);
    gen->add_option("--format", format_text, "dot, json or mult")->default_val("mult");
    gen->add_option("-o,--output", cfg.output, "output file (default stdout)");
    gen->add_flag("-v,--verbose", cfg.verbosity, "report what was written");

    std::string emit = "table";
    auto* energy = app.add_subcommand("energy", "Print the solved energy function");
    energy->add_option("--type", type_text, "d4_3 or g2_1")->required();
    energy->add_option("--emit", emit, "table or diff")->default_val("table");

    bool with_count = false;
    auto* adjacent = app.add_subcommand("adjacent", "List reduced adjacent column pairs");
    adjacent->add_option("--type", type_text, "d4_3 or g2_1")->required();
    adjacent->add_flag("--count", with_count, "print the number of pairs first");

    std::string suite = "all";
    int depth = 8;
    int range = 3;
    bool quiet = false;
    auto* verify = app.add_subcommand("verify", "Run property suites");
    verify->add_option("suite", suite, "all, energy, perfect, rmatrix, columns, walls or paths")->default_val("all");
    verify->add_option("--depth", depth, "BFS depth for walls/paths")->default_val(8);
    verify->add_option("--range", range, "affine index range for rmatrix")->default_val(3);
    verify->add_flag("-q,--quiet", quiet, "only print the summary line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    AffineType type;
    try {
        type = parse_affine_type(type_text);
        if (*gen)
            cfg.format = parse_format(format_text);
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*gen) {
            cfg.type = type;
            return cmd_gen(cfg, out, err);
        }
        if (*energy)
            return cmd_energy(type, emit, out, err);
        if (*adjacent)
            return cmd_adjacent(type, with_count, out);
        return cmd_verify(suite, depth, range, quiet ? -1 : 0, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFail;
    }
}

} // namespace ywall::cli
