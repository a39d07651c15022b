#include "format.hpp"

namespace normgraph::cli {

namespace {

std::string monomial(std::uint64_t c, std::size_t i) {
  std::string s;
  if (c != 1 || i == 0) s = std::to_string(c);
  if (i >= 1) s += "x";
  if (i >= 2) s += "^" + std::to_string(i);
  return s;
}

std::string render(const std::vector<FpElement>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i].is_zero()) continue;
    if (!out.empty()) out += "+";
    out += monomial(coeffs[i].value, i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string format_element(const ExtElement& x) { return render(x.coeffs); }

std::string format_vertex(const Vertex& v) { return "(" + format_element(v.alpha) + ", " + std::to_string(v.a.value) + ")"; }

std::string format_poly(const FpPoly& h) { return render(h.coeffs); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace normgraph::cli
