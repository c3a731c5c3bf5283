#ifndef BEL_SUITE_HPP
#define BEL_SUITE_HPP

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bei.hpp"
#include "complex.hpp"
#include "corpus.hpp"
#include "decomp.hpp"
#include "graded.hpp"
#include "report.hpp"

namespace bel {

enum class CaseStatus { pass, fail, skipped };

inline const char* status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass: return "PASS";
    case CaseStatus::fail: return "FAIL";
    case CaseStatus::skipped: return "SKIPPED";
  }
  return "?";
}

struct SuiteOptions {
  bool quick = false;  // skip the net computation
  std::uint64_t seed = kDefaultCorpusSeed;
  std::size_t random_order6 = 25;
};

/// Counters shared by the criteria; the property criterion reads them.
struct SuiteContext {
  SuiteOptions options;
  std::size_t containment_checked = 0;
  std::size_t containment_failed = 0;
};

struct CriterionOutcome {
  CaseStatus status = CaseStatus::pass;
  std::size_t cases = 0;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  double budget_seconds = 0;
  std::function<CriterionOutcome(SuiteContext&)> run;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  CaseStatus status = CaseStatus::pass;
  std::size_t cases = 0;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

namespace detail {

inline std::string edge_text(const Graph& g) {
  std::ostringstream s;
  s << "n=" << g.order() << " {";
  bool first = true;
  for (Edge e : g.edges()) {
    s << (first ? "" : ",") << e.u << "-" << e.v;
    first = false;
  }
  s << "}";
  return s.str();
}

// Accumulates cases; the first failure is kept as the detail.
struct Tally {
  CriterionOutcome out;
  void check(bool ok, const std::string& what) {
    ++out.cases;
    if (!ok && out.status != CaseStatus::fail) {
      out.status = CaseStatus::fail;
      out.detail = what;
    }
  }
};

template <class Field>
EqualityVerdict<Field> verdict(SuiteContext& ctx, const Graph& g, int t, const Field& field = Field{}) {
  Ring<Field> R(field, g.order());
  auto v = equality_verdict(R, g, t);
  ++ctx.containment_checked;
  if (!v.contained) ++ctx.containment_failed;
  return v;
}

inline std::vector<Graph> gb_corpus(const SuiteOptions& o) {
  auto gs = connected_graphs_up_to(5, false);
  auto extra = random_connected_graphs(6, o.random_order6, o.seed);
  gs.insert(gs.end(), extra.begin(), extra.end());
  return gs;
}

}  // namespace detail

inline CriterionOutcome criterion_gb_paths(SuiteContext& ctx) {
  detail::Tally t;
  for (const auto& g : detail::gb_corpus(ctx.options)) {
    QRing R(RationalField{}, g.order());
    t.check(buchberger(R, binomial_edge_ideal(R, g).generators()) == groebner_combinatorial(R, g),
            "bases differ on " + detail::edge_text(g));
  }
  return t.out;
}

inline CriterionOutcome criterion_decomposition(SuiteContext&) {
  detail::Tally t;
  for (const auto& g : connected_graphs_up_to(5, false)) {
    QRing R(RationalField{}, g.order());
    std::vector<Ideal<RationalField>> all;
    for (VertexMask m = 0; m < (VertexMask{1} << g.order()); ++m) all.push_back(prime_component(R, g, mask_to_set(m)).ideal);
    t.check(equal(intersect_all(all), binomial_edge_ideal(R, g)), "intersection differs from J_G on " + detail::edge_text(g));
  }
  return t.out;
}

inline CriterionOutcome criterion_two_primes(SuiteContext&) {
  detail::Tally t;
  for (const auto& g : connected_graphs_up_to(5, false)) {
    QRing R(RationalField{}, g.order());
    t.check(ass_count_is_two(g) == (minimal_primes(R, g).size() == 2), "disagreement on " + detail::edge_text(g));
  }
  return t.out;
}

inline CriterionOutcome criterion_two_primes_equality(SuiteContext& ctx) {
  detail::Tally t;
  for (const auto& g : connected_graphs_up_to(5, false)) {
    if (!ass_count_is_two(g)) continue;
    for (int k : {2, 3})
      t.check(detail::verdict<RationalField>(ctx, g, k).equal,
              "powers differ at t=" + std::to_string(k) + " on " + detail::edge_text(g));
  }
  return t.out;
}

inline CriterionOutcome criterion_caterpillars(SuiteContext& ctx) {
  detail::Tally t;
  for (const auto& g0 : caterpillar_trees_up_to(6)) {
    const Graph g = relabel(g0, caterpillar_labeling(g0));
    const std::string name = detail::edge_text(g);
    t.check(detail::verdict<RationalField>(ctx, g, 2).equal, "powers differ at t=2 on " + name);
    Ring<RationalField> R(RationalField{}, g.order());
    t.check(!find_special_odd_cycle(delta_of(g.order(), initial_monomials(R, g))).has_value(),
            "special odd cycle on " + name);
    t.check(gb_max_degree(g, Labeling::identity(g.order())) <= 3, "basis degree above 3 on " + name);
  }
  t.check(detail::verdict<RationalField>(ctx, Graph::star(3), 3).equal, "powers differ at t=3 on K_{1,3}");
  return t.out;
}

inline CriterionOutcome criterion_net(SuiteContext& ctx) {
  if (ctx.options.quick) return {CaseStatus::skipped, 0, "--quick"};
  detail::Tally t;
  const Graph g = net_graph();
  QRing R(RationalField{}, g.order());
  const auto v = detail::verdict<RationalField>(ctx, g, 2);
  t.check(!v.equal, "powers agree on the net");
  t.check(v.witness.has_value(), "no witness");
  if (!v.witness) return t.out;
  const auto& w = *v.witness;
  // Groebner-basis membership.
  const auto j2 = power(binomial_edge_ideal(R, g), 2);
  t.check(!member(w, j2), "witness lies in J^2 (normal form)");
  for (const auto& p : v.minimal_primes) t.check(member(w, power(p.ideal, 2)), "witness outside a P^2 (normal form)");
  // Linear algebra in one graded piece, primes from the cut-set rule.
  t.check(!member_graded(R, w, j2.generators()), "witness lies in J^2 (graded)");
  for (const auto& p : minimal_primes(R, g, MinimalPrimeMethod::cut_sets))
    t.check(member_graded(R, w, power(p.ideal, 2).generators()), "witness outside a P^2 (graded)");
  t.out.detail = t.out.status == CaseStatus::pass ? "witness degree " + std::to_string(w.degree()) : t.out.detail;
  return t.out;
}

inline CriterionOutcome criterion_gen_caterpillars(SuiteContext& ctx) {
  detail::Tally t;
  const auto corpus = net_free_gen_caterpillars(6);
  t.check(corpus.size() >= 10, "corpus has fewer than 10 graphs");
  for (const auto& g : corpus) {
    const std::string name = detail::edge_text(g);
    t.check(detail::verdict<RationalField>(ctx, g, 2).equal, "powers differ at t=2 on " + name);
    t.check(is_weakly_closed_with_labeling(g, gencat_labeling(g)), "labeling not weakly closed on " + name);
  }
  return t.out;
}

inline CriterionOutcome criterion_weakly_closed(SuiteContext&) {
  detail::Tally t;
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : labeled_graphs(n, false))
      t.check(is_weakly_closed(g) == is_comparability(complement(g)), "disagreement on " + detail::edge_text(g));
  for (const auto& g : generated_gen_caterpillars(6))
    t.check(is_net_free(g) == is_weakly_closed(g), "net-free differs from weakly closed on " + detail::edge_text(g));
  t.check(!is_comparability(complement(net_graph())), "complement of the net is a comparability graph");
  return t.out;
}

namespace detail {

inline Monomial random_monomial(std::mt19937_64& rng, int nvars, int maxexp) {
  Monomial m;
  for (int i = 0; i < nvars; ++i) m.set(i, static_cast<int>(rng() % static_cast<std::uint64_t>(maxexp + 1)));
  return m;
}

inline void order_axioms(Tally& t, const QRing& R, std::mt19937_64& rng) {
  const Monomial one;
  for (int k = 0; k < 300; ++k) {
    Monomial a = random_monomial(rng, R.nvars(), 2), b = random_monomial(rng, R.nvars(), 2),
             c = random_monomial(rng, R.nvars(), 2);
    auto ab = R.compare(a, b), ba = R.compare(b, a);
    t.check((ab == 0) == (a == b) && (ab < 0) == (ba > 0), "order is not antisymmetric");
    if (ab < 0 && R.compare(b, c) < 0) t.check(R.compare(a, c) < 0, "order is not transitive");
    t.check(R.compare(a * c, b * c) == ab, "order is not multiplicative");
    t.check(R.compare(one, a) <= 0, "1 is not least");
  }
}

}  // namespace detail

inline CriterionOutcome criterion_properties(SuiteContext& ctx) {
  detail::Tally t;
  std::mt19937_64 rng(ctx.options.seed);
  detail::order_axioms(t, QRing(RationalField{}, 4), rng);
  detail::order_axioms(t, QRing(RationalField{}, 4, 1), rng);

  for (const auto& g : detail::gb_corpus(ctx.options)) {
    QRing R(RationalField{}, g.order());
    const auto gb = binomial_edge_ideal(R, g).groebner();
    t.check(buchberger(R, gb) == gb && is_groebner_basis(R, gb), "basis not idempotent on " + detail::edge_text(g));
  }

  for (const auto& g : connected_graphs_up_to(4, true)) {
    QRing R(RationalField{}, g.order());
    const auto J = binomial_edge_ideal(R, g);
    for (VertexMask m = 1; m < (VertexMask{1} << g.order()); m += 3) {
      const auto P = prime_component(R, g, mask_to_set(m)).ideal;
      const auto meet = intersect(J, P);
      t.check(is_subset(meet, J) && is_subset(meet, P) && is_subset(product(J, P), meet),
              "intersection containments fail on " + detail::edge_text(g));
    }
  }

  std::vector<Graph> agree = connected_graphs_up_to(5, true);
  if (!ctx.options.quick) agree.push_back(net_graph());
  for (const auto& g : agree) {
    const auto q = detail::verdict<RationalField>(ctx, g, 2);
    const auto p = detail::verdict<PrimeField>(ctx, g, 2);
    t.check(q.equal == p.equal && q.ordinary_gb_size == p.ordinary_gb_size && q.symbolic_gb_size == p.symbolic_gb_size,
            "Q and F_p verdicts differ on " + detail::edge_text(g));
  }
  t.check(ctx.containment_failed == 0, "containment J^t in J^(t) failed");
  t.out.cases += ctx.containment_checked;
  if (t.out.status == CaseStatus::pass)
    t.out.detail = std::to_string(ctx.containment_checked) + " containments checked";
  return t.out;
}

/// The acceptance criteria, in order.
inline std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "combinatorial basis equals Buchberger", 300, criterion_gb_paths},
      {2, "J_G is the intersection of all P_U", 600, criterion_decomposition},
      {3, "two-prime rule matches minimal primes", 120, criterion_two_primes},
      {4, "two associated primes give equal powers", 900, criterion_two_primes_equality},
      {5, "caterpillar trees", 900, criterion_caterpillars},
      {6, "net: symbolic square exceeds ordinary square", 1200, criterion_net},
      {7, "net-free generalized caterpillars", 1800, criterion_gen_caterpillars},
      {8, "weakly closed equals co-comparability", 300, criterion_weakly_closed},
      {9, "property suite", 300, criterion_properties},
  };
}

inline std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << status_name(r.status) << " [" << r.id << "] " << r.name << ": " << r.cases << " cases, ";
  s.precision(3);
  s << std::fixed << r.seconds << " s (budget " << static_cast<int>(r.budget_seconds) << " s)";
  if (!r.detail.empty()) s << " -- " << r.detail;
  return s.str();
}

/// Runs the criteria in order, writing one line per criterion to `log` when
/// given. A criterion over its time budget fails. Exceptions fail only the
/// criterion that threw.
inline std::vector<CriterionResult> run_suite(const std::vector<Criterion>& criteria, const SuiteOptions& options,
                                              std::ostream* log = nullptr) {
  SuiteContext ctx{options};
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    CriterionResult r{c.id, c.name, CaseStatus::pass, 0, "", 0, c.budget_seconds};
    Stopwatch clock;
    try {
      auto o = c.run(ctx);
      r.status = o.status;
      r.cases = o.cases;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.status = CaseStatus::fail;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = clock.seconds();
    if (r.status == CaseStatus::pass && r.seconds > r.budget_seconds) {
      r.status = CaseStatus::fail;
      r.detail = "over time budget";
    }
    if (log) *log << format_result(r) << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

inline bool suite_passed(const std::vector<CriterionResult>& rs) {
  return std::none_of(rs.begin(), rs.end(), [](const CriterionResult& r) { return r.status == CaseStatus::fail; });
}

inline json suite_to_json(const std::vector<CriterionResult>& rs) {
  json a = json::array();
  for (const auto& r : rs)
    a.push_back({{"id", r.id},
                 {"name", r.name},
                 {"status", status_name(r.status)},
                 {"cases", r.cases},
                 {"detail", r.detail},
                 {"seconds", r.seconds},
                 {"budget_seconds", r.budget_seconds}});
  return a;
}

}  // namespace bel

#endif  // BEL_SUITE_HPP
