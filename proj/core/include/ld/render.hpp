#pragma once

#include <string>

#include "ld/graph.hpp"

namespace ld {

// ASCII rendering with nested boxes: single border for classical cuts,
// double border for alternate cuts.
std::string render_graph(const Graph& g);

}  // namespace ld
