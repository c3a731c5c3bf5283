// bel: binomial edge ideals from the command line.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bel/commands.hpp"
#include "bel/graph_io.hpp"
#include "bel/suite.hpp"

namespace {

using namespace bel;

void print_text(const Outcome& o) {
  const json& r = o.report.results;
  if (o.report.command == "gb") {
    for (const auto& e : r.at("elements")) std::cout << e.get<std::string>() << "\n";
    if (r.contains("check_buchberger"))
      std::cout << "# buchberger: " << (r["check_buchberger"]["identical"].get<bool>() ? "identical" : "DIFFERENT")
                << "\n";
    return;
  }
  for (const auto& [key, value] : r.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

template <class F>
void with_field(const std::string& spec, F&& body) {
  std::visit(body, parse_field_spec(spec));
}

Graph load(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial edge ideals: Groebner bases, minimal primes, ordinary and symbolic powers."};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  int max_n = 0;
  app.add_flag("--json", as_json, "Print the full report as JSON");
  app.add_option("--max-n", max_n, "Cap on n for every exhaustive search (defaults: labelings 8, primes 8, m-closed 7)")
      ->check(CLI::Range(1, 64));

  std::string path;
  std::string field = "q";
  auto add_graph = [&](CLI::App* sub) { sub->add_option("graph", path, "Graph file: optional 'n <count>' line, then 'u v' edges")->required(); };
  auto add_field = [&](CLI::App* sub) { sub->add_option("--field", field, "Coefficient field: q or fp:<p>"); };

  auto* classify = app.add_subcommand("classify", "Run every graph-class recognizer");
  add_graph(classify);

  bool check = false;
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of J_G from admissible paths");
  add_graph(gb);
  add_field(gb);
  gb->add_flag("--check-buchberger", check, "Compare with Buchberger's algorithm");

  auto* primes = app.add_subcommand("primes", "Minimal primes P_U(G)");
  add_graph(primes);
  add_field(primes);

  int t = 2;
  auto* powers = app.add_subcommand("powers", "Decide whether J_G^t equals J_G^(t)");
  add_graph(powers);
  add_field(powers);
  powers->add_option("--t", t, "Exponent")->check(CLI::Range(1, 16));

  bool cycles = false;
  std::string labeling = "identity";
  auto* complex = app.add_subcommand("complex", "Simplicial complex of in(J_G)");
  add_graph(complex);
  complex->add_flag("--special-odd-cycles", cycles, "Search for a special odd cycle");
  complex->add_option("--labeling", labeling, "Relabel first: identity, caterpillar or gencat")
      ->check(CLI::IsMember({"identity", "caterpillar", "gencat"}));

  bool quick = false;
  std::uint64_t seed = kDefaultCorpusSeed;
  auto* suite = app.add_subcommand("suite", "Run the acceptance suite");
  suite->add_flag("--quick", quick, "Skip the net computation");
  suite->add_option("--seed", seed, "Seed for the random order-6 graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::vector<std::string> args(argv + 1, argv + argc);
  const Caps caps = max_n > 0 ? Caps::uniform(max_n) : Caps{};

  try {
    if (suite->parsed()) {
      SuiteOptions o;
      o.quick = quick;
      o.seed = seed;
      const auto results = run_suite(acceptance_criteria(), o, as_json ? nullptr : &std::cout);
      if (as_json) {
        Report r;
        r.command = "suite";
        r.args = args;
        r.results = {{"criteria", suite_to_json(results)}, {"passed", suite_passed(results)}};
        std::cout << json(r).dump(2) << "\n";
      }
      return suite_passed(results) ? kExitOk : kExitVerificationFailed;
    }

    const Graph g = load(path);
    Outcome out;
    if (classify->parsed()) {
      out = cmd_classify(g, args, caps);
    } else if (gb->parsed()) {
      with_field(field, [&](const auto& f) {
        out = cmd_gb(Ring(f, g.order()), g, check, args);
      });
    } else if (primes->parsed()) {
      with_field(field, [&](const auto& f) {
        out = cmd_primes(Ring(f, g.order()), g, caps, args);
      });
    } else if (powers->parsed()) {
      with_field(field, [&](const auto& f) {
        out = cmd_powers(Ring(f, g.order()), g, t, caps, args);
      });
    } else {
      const auto how = labeling == "caterpillar" ? ComplexLabeling::caterpillar
                       : labeling == "gencat"    ? ComplexLabeling::gencat
                                                 : ComplexLabeling::identity;
      out = cmd_complex(g, how, cycles, args);
    }
    if (as_json)
      std::cout << json(out.report).dump(2) << "\n";
    else
      print_text(out);
    return out.status;
  } catch (const ParseError& e) {
    std::cerr << "bel: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeCapError& e) {
    std::cerr << "bel: " << e.what() << " (raise it with --max-n)\n";
    return kExitSizeCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bel: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "bel: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "bel: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}
