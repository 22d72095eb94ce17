#include "ywall/graph_io.hpp"

#include <json.hpp>

#include <array>
#include <sstream>

namespace ywall {

namespace {

constexpr std::array<std::string_view, kRank> kEdgeColors{"red", "black", "blue"};

std::string dot_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string export_dot(const CrystalGraph& g, std::string_view name)
{
    std::ostringstream out;
    out << "digraph \"" << dot_escape(name) << "\" {\n";
    out << "  // type " << to_string(g.type()) << '\n';
    for (auto b : g.elements())
        out << "  n" << b.value << " [label=\"" << dot_escape(g.label(b)) << "\"];\n";
    for (const auto& edge : g.edges())
        out << "  n" << edge.src.value << " -> n" << edge.dst.value << " [color=" << kEdgeColors[edge.color]
            << ", label=\"" << edge.color << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string export_json(const CrystalGraph& g)
{
    using nlohmann::json;
    std::ostringstream out;
    out << "{\"type\":" << json(std::string(to_string(g.type()))).dump() << ",\n\"elements\":[";
    bool first = true;
    for (auto b : g.elements()) {
        const auto& w = g.weight(b);
        json element{{"id", b.value},
                     {"label", g.label(b)},
                     {"weight", {w.lambda[0], w.lambda[1], w.lambda[2], w.delta}}};
        out << (first ? "\n" : ",\n") << element.dump();
        first = false;
    }
    out << "],\n\"edges\":[";
    first = true;
    for (const auto& edge : g.edges()) {
        json e{{"src", edge.src.value}, {"color", edge.color}, {"dst", edge.dst.value}};
        out << (first ? "\n" : ",\n") << e.dump();
        first = false;
    }
    out << "]}\n";
    return out.str();
}

CrystalGraph import_json(std::string_view text)
{
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw GraphError(std::string("invalid crystal JSON: ") + err.what());
    }
    try {
        CrystalGraph g(parse_affine_type(doc.at("type").get<std::string>()));
        std::uint32_t expected = 0;
        for (const auto& element : doc.at("elements")) {
            if (element.at("id").get<std::uint32_t>() != expected++)
                throw GraphError("element ids must be 0..N-1 in order");
            const auto w = element.at("weight").get<std::vector<int>>();
            if (w.size() != 4)
                throw GraphError("weight must have 4 entries");
            g.add_element(element.at("label").get<std::string>(), Weight{{w[0], w[1], w[2]}, w[3]});
        }
        for (const auto& edge : doc.at("edges"))
            g.add_edge(ElementId{edge.at("src").get<std::uint32_t>()}, edge.at("color").get<Color>(),
                       ElementId{edge.at("dst").get<std::uint32_t>()});
        return g;
    } catch (const json::exception& err) {
        throw GraphError(std::string("malformed crystal JSON: ") + err.what());
    } catch (const std::invalid_argument& err) {
        throw GraphError(err.what());
    }
}

} // namespace ywall
