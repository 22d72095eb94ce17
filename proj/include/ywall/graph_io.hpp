#pragma once

#include "ywall/crystal.hpp"

#include <string>
#include <string_view>

namespace ywall {

/// Graphviz digraph; edges colored by i (0 red, 1 black, 2 blue).
std::string export_dot(const CrystalGraph& g, std::string_view name = "crystal");

/// {type, elements:[{id,label,weight:[m0,m1,m2,d]}], edges:[{src,color,dst}]}
/// Compact, one element or edge per line, in id order.
std::string export_json(const CrystalGraph& g);

/// Inverse of export_json. Throws GraphError on malformed input.
CrystalGraph import_json(std::string_view text);

} // namespace ywall
