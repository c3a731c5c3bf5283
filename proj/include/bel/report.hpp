#ifndef BEL_REPORT_HPP
#define BEL_REPORT_HPP

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "field.hpp"
#include "graph.hpp"

namespace bel {

using json = nlohmann::json;

/// Output of one command: what was asked, on which graph, and what came out.
struct Report {
  std::string command;
  std::vector<std::string> args;
  std::optional<Graph> graph;
  std::string field;
  json results = json::object();
  std::map<std::string, double> timings;  // seconds

  friend bool operator==(const Report&, const Report&) = default;
};

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (Edge e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

inline void to_json(json& j, const Report& r) {
  j = json{{"command", r.command}, {"args", r.args}, {"field", r.field}, {"results", r.results}, {"timings", r.timings}};
  j["graph"] = r.graph ? graph_to_json(*r.graph) : json(nullptr);
}

inline void from_json(const json& j, Report& r) {
  r.command = j.at("command").get<std::string>();
  r.args = j.at("args").get<std::vector<std::string>>();
  r.field = j.at("field").get<std::string>();
  r.results = j.at("results");
  r.timings = j.at("timings").get<std::map<std::string, double>>();
  r.graph.reset();
  if (!j.at("graph").is_null()) r.graph = graph_from_json(j.at("graph"));
}

/// Labeling as the list sigma(1), ..., sigma(n).
inline json labeling_to_json(const Labeling& l) {
  json a = json::array();
  for (int v = 1; v <= l.size(); ++v) a.push_back(l(v));
  return a;
}

using FieldSpec = std::variant<RationalField, PrimeField>;

/// "q" or "fp:<p>" with p an odd prime below 2^31.
inline FieldSpec parse_field_spec(const std::string& s) {
  if (s == "q") return RationalField{};
  if (s.rfind("fp:", 0) == 0) {
    const std::string digits = s.substr(3);
    if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("field: expected fp:<prime>, got '" + s + "'");
    const unsigned long long p = std::stoull(digits);
    if (p < (1ull << 31)) {
      try {
        return PrimeField(static_cast<std::uint32_t>(p));
      } catch (const std::invalid_argument&) {
      }
    }
    throw ParseError("field: " + digits + " is not an odd prime below 2^31");
  }
  throw ParseError("field: expected 'q' or 'fp:<p>', got '" + s + "'");
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace bel

#endif  // BEL_REPORT_HPP
