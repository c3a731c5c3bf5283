#ifndef BEL_GRAPH_IO_HPP
#define BEL_GRAPH_IO_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace bel {

/// Reads the edge-list format: an optional "n <count>" header, then one
/// "u v" pair per line. Blank lines and '#' comments are skipped. Without a
/// header the order is the largest endpoint seen.
inline Graph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  int declared = -1;
  bool seen_edge = false;
  std::vector<std::pair<std::pair<int, int>, int>> edges;  // endpoints, line
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (declared >= 0) throw ParseError("duplicate header", lineno);
      if (seen_edge) throw ParseError("header must precede the edges", lineno);
      long long count = 0;
      std::string extra;
      if (!(ls >> count) || (ls >> extra)) throw ParseError("expected 'n <count>'", lineno);
      if (count < 1 || count > kMaxGraphOrder)
        throw ParseError("vertex count must lie in 1.." + std::to_string(kMaxGraphOrder), lineno);
      declared = static_cast<int>(count);
      continue;
    }
    long long u = 0, v = 0;
    std::string extra;
    std::istringstream es(line);
    if (!(es >> u >> v) || (es >> extra)) throw ParseError("expected an edge 'u v'", lineno);
    if (u < 1 || v < 1 || u > kMaxGraphOrder || v > kMaxGraphOrder)
      throw ParseError("vertex out of range", lineno);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), lineno);
    if (declared >= 0 && (u > declared || v > declared))
      throw ParseError("vertex exceeds declared count " + std::to_string(declared), lineno);
    edges.push_back({{static_cast<int>(u), static_cast<int>(v)}, lineno});
    seen_edge = true;
  }
  int n = declared;
  if (n < 0) {
    n = 0;
    for (const auto& [e, l] : edges) n = std::max({n, e.first, e.second});
    if (n == 0) throw ParseError("empty graph needs an 'n <count>' header");
  }
  Graph g(n);
  for (const auto& [e, l] : edges) g.add_edge(e.first, e.second);
  return g;
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace bel

#endif  // BEL_GRAPH_IO_HPP
