#ifndef BEL_COMMANDS_HPP
#define BEL_COMMANDS_HPP

#include <string>
#include <variant>
#include <vector>

#include "bei.hpp"
#include "complex.hpp"
#include "decomp.hpp"
#include "graph_classes.hpp"
#include "report.hpp"

namespace bel {

// Exit statuses shared by the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeCap = 3;

struct Caps {
  int labeling = kDefaultLabelingSearchCap;
  int primes = kDefaultPrimeCap;
  int m_closed = kDefaultMClosedCap;

  static Caps uniform(int n) { return {n, n, n}; }
};

struct Outcome {
  Report report;
  int status = kExitOk;
};

namespace detail {

inline json witness_to_json(const GenCatWitness& w) {
  json joins = json::array();
  for (const auto& j : w.joins)
    joins.push_back({{"edge", {j.edge.u, j.edge.v}}, {"size", j.size}, {"added", j.added}});
  json whiskers = json::array();
  for (const auto& s : w.whiskers) whiskers.push_back({{"at", s.at}, {"leaf", s.leaf}});
  return {{"base_vertices", w.base_vertices},
          {"central_path", w.central_path.vertices},
          {"joins", joins},
          {"whiskers", whiskers}};
}

template <class Field>
json poly_list(const Ring<Field>& R, const std::vector<Polynomial<typename Field::Coeff>>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(R.to_string(p));
  return a;
}

template <class Field>
json primes_to_json(const Ring<Field>& R, const std::vector<PrimeComponent<Field>>& ps) {
  json a = json::array();
  for (const auto& p : ps)
    a.push_back({{"U", p.U}, {"components", p.components}, {"generators", poly_list(R, p.ideal.generators())}});
  return a;
}

inline Report start(const std::string& command, const std::vector<std::string>& args, const Graph& g,
                    const std::string& field) {
  Report r;
  r.command = command;
  r.args = args;
  r.graph = g;
  r.field = field;
  return r;
}

}  // namespace detail

/// Every recognizer on one graph. A recognizer that would exceed its cap is
/// reported as {"size_cap": message} and the status becomes kExitSizeCap.
inline Outcome cmd_classify(const Graph& g, const std::vector<std::string>& args, const Caps& caps = {}) {
  Outcome out{detail::start("classify", args, g, ""), kExitOk};
  json& r = out.report.results;
  Stopwatch clock;
  auto capped = [&](const std::string& key, const SizeCapError& e) {
    r[key] = {{"size_cap", e.what()}};
    out.status = kExitSizeCap;
  };

  const bool connected = is_connected(g);
  r["n"] = g.order();
  r["m"] = g.size();
  r["connected"] = connected;
  r["tree"] = is_tree(g);
  r["caterpillar"] = is_caterpillar(g);
  if (is_caterpillar(g)) r["central_path"] = central_path(g).vertices;
  r["block_graph"] = is_block_graph(g);
  r["cutpoints"] = cutpoints(g);
  r["blocks"] = blocks(g);
  r["T_G"] = dominating_set_T(g);
  r["ass_two"] = connected ? json(ass_count_is_two(g)) : json(nullptr);

  try {
    auto l = find_closed_labeling(g, caps.labeling);
    r["closed"] = l.has_value();
    if (l) r["closed_labeling"] = labeling_to_json(*l);
  } catch (const SizeCapError& e) {
    capped("closed", e);
  }
  if (g.order() <= caps.labeling) {
    auto l = find_weakly_closed_labeling(g, caps.labeling);
    r["weakly_closed"] = l.has_value();
    if (l) r["weakly_closed_labeling"] = labeling_to_json(*l);
  } else {
    r["weakly_closed"] = is_weakly_closed(g, caps.labeling);
  }
  r["complement_comparability"] = is_comparability(complement(g));

  auto net = find_induced_net(g);
  r["net_free"] = !net.has_value();
  if (net) r["induced_net"] = *net;

  auto w = is_generalized_caterpillar(g);
  r["gen_caterpillar"] = w.has_value();
  if (w) {
    r["gen_caterpillar_witness"] = detail::witness_to_json(*w);
    if (!net) r["gencat_labeling"] = labeling_to_json(gencat_labeling(g));
  }

  r["gb_max_degree"] = gb_max_degree(g, Labeling::identity(g.order()));
  try {
    auto m = min_gb_max_degree(g, caps.m_closed);
    r["m_closed"] = {{"degree", m.degree}, {"labeling", labeling_to_json(m.labeling)}};
  } catch (const SizeCapError& e) {
    capped("m_closed", e);
  }
  out.report.timings["total"] = clock.seconds();
  return out;
}

/// Reduced Groebner basis of J_G from admissible paths, optionally compared
/// term by term with Buchberger's algorithm.
template <class Field>
Outcome cmd_gb(const Ring<Field>& R, const Graph& g, bool check, const std::vector<std::string>& args) {
  Outcome out{detail::start("gb", args, g, R.field().name()), kExitOk};
  json& r = out.report.results;
  Stopwatch clock;
  const auto gb = groebner_combinatorial(R, g);
  out.report.timings["combinatorial"] = clock.seconds();
  json paths = json::array();
  for (const auto& p : admissible_paths(g)) paths.push_back({{"i", p.i}, {"j", p.j}, {"interior", p.interior}});
  int maxdeg = 0;
  for (const auto& f : gb) maxdeg = std::max(maxdeg, f.degree());
  r["elements"] = detail::poly_list(R, gb);
  r["count"] = gb.size();
  r["max_degree"] = maxdeg;
  r["admissible_paths"] = paths;
  if (check) {
    Stopwatch bb;
    GroebnerStats stats;
    const auto ref = buchberger(R, binomial_edge_ideal(R, g).generators(), &stats);
    out.report.timings["buchberger"] = bb.seconds();
    const bool same = ref == gb;
    r["check_buchberger"] = {{"identical", same}, {"buchberger_size", ref.size()}};
    if (!same) out.status = kExitVerificationFailed;
  }
  out.report.timings["total"] = clock.seconds();
  return out;
}

/// Minimal primes by containment, cross-checked against the cut-set rule.
template <class Field>
Outcome cmd_primes(const Ring<Field>& R, const Graph& g, const Caps& caps, const std::vector<std::string>& args) {
  Outcome out{detail::start("primes", args, g, R.field().name()), kExitOk};
  json& r = out.report.results;
  Stopwatch clock;
  const auto ps = minimal_primes(R, g, MinimalPrimeMethod::containment, caps.primes);
  out.report.timings["containment"] = clock.seconds();
  std::vector<VertexSet> by_rule;
  for (const auto& p : minimal_primes(R, g, MinimalPrimeMethod::cut_sets, caps.primes)) by_rule.push_back(p.U);
  std::vector<VertexSet> by_gb;
  for (const auto& p : ps) by_gb.push_back(p.U);
  r["count"] = ps.size();
  r["minimal_primes"] = detail::primes_to_json(R, ps);
  r["cut_set_agreement"] = by_rule == by_gb;
  if (by_rule != by_gb) out.status = kExitVerificationFailed;
  out.report.timings["total"] = clock.seconds();
  return out;
}

/// J_G^t against J_G^(t).
template <class Field>
Outcome cmd_powers(const Ring<Field>& R, const Graph& g, int t, const Caps& caps,
                   const std::vector<std::string>& args) {
  Outcome out{detail::start("powers", args, g, R.field().name()), kExitOk};
  json& r = out.report.results;
  Stopwatch clock;
  const auto v = equality_verdict(R, g, t, caps.primes);
  out.report.timings["total"] = clock.seconds();
  r["t"] = t;
  r["equal"] = v.equal;
  r["contained"] = v.contained;
  r["witness"] = v.witness ? json(R.to_string(*v.witness)) : json(nullptr);
  if (v.witness) r["witness_degree"] = v.witness->degree();
  r["ordinary_gb_size"] = v.ordinary_gb_size;
  r["symbolic_gb_size"] = v.symbolic_gb_size;
  json mp = json::array();
  for (const auto& p : v.minimal_primes) mp.push_back({{"U", p.U}, {"generators", detail::poly_list(R, p.ideal.generators())}});
  r["minimal_primes"] = mp;
  if (!v.contained) out.status = kExitVerificationFailed;
  return out;
}

enum class ComplexLabeling { identity, caterpillar, gencat };

/// Δ(in(J_G)) after relabelling, with the special odd cycle search on demand.
inline Outcome cmd_complex(const Graph& g0, ComplexLabeling how, bool search, const std::vector<std::string>& args) {
  Labeling sigma = Labeling::identity(g0.order());
  if (how == ComplexLabeling::caterpillar) sigma = caterpillar_labeling(g0);
  if (how == ComplexLabeling::gencat) sigma = gencat_labeling(g0);
  const Graph g = relabel(g0, sigma);
  Outcome out{detail::start("complex", args, g0, ""), kExitOk};
  json& r = out.report.results;
  Stopwatch clock;
  Ring<PrimeField> R(PrimeField{}, g.order());
  const auto d = delta_of(g.order(), initial_monomials(R, g));
  auto names = [&](const std::vector<Symbol>& f) {
    json a = json::array();
    for (Symbol s : f) a.push_back(d.symbol_name(s));
    return a;
  };
  json facets = json::array();
  for (const auto& f : d.facets) facets.push_back(names(f));
  r["labeling"] = labeling_to_json(sigma);
  r["facets"] = facets;
  if (search) {
    const auto c = find_special_odd_cycle(d);
    if (c) {
      json fs = json::array();
      for (std::size_t k : c->facets) fs.push_back(names(d.facets[k]));
      r["special_odd_cycle"] = {{"vertices", names(c->vertices)}, {"facets", fs}};
      if (!is_special_cycle(d, *c)) out.status = kExitVerificationFailed;
    } else {
      r["special_odd_cycle"] = nullptr;
    }
    r["criterion_holds"] = !c.has_value();
  }
  out.report.timings["total"] = clock.seconds();
  return out;
}

}  // namespace bel

#endif  // BEL_COMMANDS_HPP
