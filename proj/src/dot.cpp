#include <array>
#include <string>

#include "ringtop/topology.hpp"

namespace ringtop {

namespace {

// Fixed palette cycled by component id; repeats are fine, adjacency is what
// the coloring conveys.
constexpr std::array<const char*, 10> kPalette = {
    "#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6",
    "#ffff99", "#1f78b4", "#33a02c", "#e31a1c", "#ff7f00",
};

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const TopologySpace& t) {
  const FiniteRing& r = t.ring();
  std::string dot;
  dot += "digraph successor {\n";
  dot += "  // ring " + r.spec + ", a=" + r.label(t.acting_element()) +
         ", side=" + to_string(t.side()) + "\n";
  dot += "  rankdir=LR;\n  node [shape=circle, style=filled];\n";
  for (elem x = 0; x < t.order(); ++x) {
    dot += "  n" + std::to_string(x) + " [label=\"" + escape(r.label(x)) +
           "\", fillcolor=\"" +
           kPalette[t.component_of(x) % kPalette.size()] + "\"];\n";
  }
  for (elem x = 0; x < t.order(); ++x)
    dot += "  n" + std::to_string(x) + " -> n" +
           std::to_string(t.successor(x)) + ";\n";
  dot += "}\n";
  return dot;
}

}  // namespace ringtop
