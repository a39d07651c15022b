#pragma once

#include <string>
#include <vector>

#include "normgraph/norm_graph.hpp"

namespace normgraph::cli {

/// "5x^2+3x+6"; the zero element prints as "0".
std::string format_element(const ExtElement& x);
/// "(5x^2+3x+6, 2)"
std::string format_vertex(const Vertex& v);
/// "x^3+5" style rendering of a base-field polynomial.
std::string format_poly(const FpPoly& h);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace normgraph::cli
