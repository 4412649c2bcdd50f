#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "transit/axioms.hpp"
#include "transit/canonical.hpp"
#include "transit/convexity.hpp"
#include "transit/error.hpp"
#include "transit/graph_transit.hpp"
#include "transit/harness.hpp"
#include "transit/json_io.hpp"
#include "transit/recognizers.hpp"
#include "transit/setsystems.hpp"

namespace transit::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string graph6;
  std::string set;
  std::string model;
  std::string klass;
  std::string axiom;
  std::string theorem;
  std::string find;
  std::string corpus;
  std::size_t n = 0;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  bool bruteforce = false;
  bool all = false;
  bool count_only = false;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kMalformedInput, "cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

json read_json(const Options& o, std::istream& in) {
  try {
    return json::parse(slurp(o.input, in));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
}

Graph read_graph(const Options& o, std::istream& in) {
  if (!o.graph6.empty()) return parse_graph6(o.graph6);
  std::istringstream text(slurp(o.input, in));
  std::string line;
  while (std::getline(text, line)) {
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) return parse_graph6(line);
  }
  throw Error(ErrorCode::kMalformedGraph6, "no graph6 line on input");
}

// "0,2,3" or "a,c,d" using the ground set's labels.
Subset parse_set(const GroundSet& ground, const std::string& text) {
  Subset s;
  std::istringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    if (auto i = ground.index_of(item)) {
      s.insert(*i);
      continue;
    }
    std::size_t used = 0;
    std::size_t i = 0;
    try {
      i = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorCode::kMalformedInput, "unknown element \"" + item + "\"");
    ground.check_index(i);
    s.insert(i);
  }
  return s;
}

json hull_cmd(const Options& o, std::istream& in) {
  const TransitFunction r = transit_from_json(read_json(o, in));
  const Subset s = parse_set(r.ground(), o.set);
  return {{"set", subset_to_json(s)}, {"hull", subset_to_json(hull(r, s))}, {"convex", is_convex(r, s)}};
}

json axioms_cmd(const Options& o, std::istream& in) {
  const TransitFunction r = transit_from_json(read_json(o, in));
  if (!o.axiom.empty()) {
    const auto a = parse_axiom(o.axiom);
    if (!a) throw Error(ErrorCode::kMalformedInput, "unknown axiom \"" + o.axiom + "\"");
    return verdict_to_json(check_axiom(r, *a));
  }
  return profile_to_json(axiom_profile(r));
}

json recognize_cmd(const Options& o, std::istream& in) {
  const Graph g = read_graph(o, in);
  if (o.all || o.klass.empty()) {
    json out = json::object();
    for (ClassId c : kAllClasses) out[std::string(class_name(c))] = verdict_to_json(recognize(g, c));
    return out;
  }
  const auto c = parse_class(o.klass);
  if (!c) throw Error(ErrorCode::kMalformedInput, "unknown class \"" + o.klass + "\"");
  return verdict_to_json(recognize(g, *c));
}

json setsys_cmd(const Options& o, std::istream& in) {
  const SetSystem c = setsystem_from_json(read_json(o, in));
  const KAxiomReport k = check_k_axioms(c);
  json out = k_report_to_json(k);
  if (k.is_t_system()) {
    const TransitFunction r = canonical_transit(c);
    out["canonical"] = transit_to_json(r);
    out["identified"] = transit_set_system(r) == c;
  }
  return out;
}

json hyper_cmd(const Options& o, std::istream& in) {
  const Hypergraph h = hypergraph_from_json(read_json(o, in));
  const TransitFunction c = cutvertex_C_hyper(h);
  return {{"strong_cut_vertices", subset_to_json(strong_cut_vertices(h))},
          {"transit", transit_to_json(c)},
          {"geometry", certificate_to_json(is_convex_geometry(c))}};
}

json verify_cmd(const Options& o, std::istream& in) {
  if (!o.find.empty()) {
    const std::size_t n = o.n == 0 ? 6 : o.n;
    const auto hit = find_counterexample(o.find, n, o.seed);
    json out{{"predicate", o.find}, {"found", hit.has_value()}};
    if (hit) {
      out["tried"] = hit->tried;
      if (hit->transit) out["transit"] = transit_to_json(*hit->transit);
      if (hit->hypergraph) out["hypergraph"] = hypergraph_to_json(*hit->hypergraph);
    }
    return out;
  }
  HarnessConfig cfg;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  if (!o.corpus.empty()) {
    std::istringstream lines(slurp(o.corpus, in));
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) cfg.corpus.push_back(parse_graph6(line));
    }
  }
  auto one = [&](TheoremId t) {
    return report_to_json(verify_theorem(t, o.n == 0 ? default_n_max(t) : o.n, cfg));
  };
  if (o.all) {
    json out = json::array();
    for (TheoremId t : kAllTheorems) out.push_back(one(t));
    return out;
  }
  return one(parse_theorem(o.theorem));
}

json enumerate_cmd(const Options& o) {
  const auto& graphs = enumerate_connected_graphs(o.n);
  if (o.count_only) return {{"n", o.n}, {"count", graphs.size()}};
  json list = json::array();
  for (const Graph& g : graphs) list.push_back(to_graph6(g));
  return {{"n", o.n}, {"count", graphs.size()}, {"graphs", std::move(list)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Transit functions, their convexities and convex-geometry tests"};
  app.require_subcommand(0, 1);
  Options o;
  bool print_schema = false;
  app.add_flag("--schema", print_schema, "Print the JSON schema and exit");

  auto input_opt = [&](CLI::App* sub, const char* what) {
    sub->add_option("-i,--input", o.input, std::string(what) + " file, '-' for stdin")->capture_default_str();
  };

  auto* axioms = app.add_subcommand("axioms", "Axiom profile of a transit function");
  input_opt(axioms, "Transit-function JSON");
  axioms->add_option("--axiom", o.axiom, "Check a single axiom (b1, b3, m, j0, ch, p, a_prime, k, cg)");

  auto* hull_sub = app.add_subcommand("hull", "Convex hull of a set");
  input_opt(hull_sub, "Transit-function JSON");
  hull_sub->add_option("--set", o.set, "Comma-separated indices or labels")->required();

  auto* convex = app.add_subcommand("convex-sets", "All convex sets");
  input_opt(convex, "Transit-function JSON");
  convex->add_flag("--bruteforce", o.bruteforce, "Scan all 2^n subsets instead of NextClosure");

  auto* geometry = app.add_subcommand("geometry", "Convex-geometry certificate");
  input_opt(geometry, "Transit-function JSON");

  auto* build = app.add_subcommand("build", "Transit function of a graph");
  build->add_option("--model", o.model, "I, J, m3, A, T, WT, P3 or C")->required();
  build->add_option("--graph6", o.graph6, "Graph in graph6; otherwise read from --input");
  input_opt(build, "graph6");

  auto* recognize_sub = app.add_subcommand("recognize", "Graph-class recognition with witnesses");
  recognize_sub->add_option("--class", o.klass, "Class id; all classes when omitted");
  recognize_sub->add_flag("--all", o.all, "Report every class");
  recognize_sub->add_option("--graph6", o.graph6, "Graph in graph6; otherwise read from --input");
  input_opt(recognize_sub, "graph6");

  auto* setsys = app.add_subcommand("setsys", "Set-system axioms and canonical transit function");
  input_opt(setsys, "Set-system JSON");

  auto* hyper = app.add_subcommand("hyper", "Cut-vertex transit function of a hypergraph");
  input_opt(hyper, "Hypergraph JSON");

  auto* verify = app.add_subcommand("verify", "Check a theorem on small instances");
  verify->add_option("--theorem", o.theorem, "Theorem id");
  verify->add_flag("--all", o.all, "Check every theorem");
  verify->add_option("--find", o.find, "Search for a counterexample to a predicate");
  verify->add_option("--n", o.n, "Largest order (default per theorem)");
  verify->add_option("--seed", o.seed, "Seed for random instances")->capture_default_str();
  verify->add_option("--samples", o.samples, "Random instances per order")->capture_default_str()->check(
      CLI::PositiveNumber);
  verify->add_option("--corpus", o.corpus, "Extra graph6 file for graph theorems");

  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs up to isomorphism");
  enumerate->add_option("--n", o.n, "Order, 1..8")->required();
  enumerate->add_flag("--count", o.count_only, "Only print the count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    json result;
    if (print_schema) {
      result = schema();
    } else if (*axioms) {
      result = axioms_cmd(o, in);
    } else if (*hull_sub) {
      result = hull_cmd(o, in);
    } else if (*convex) {
      const TransitFunction r = transit_from_json(read_json(o, in));
      result = family_to_json(o.bruteforce ? convex_sets_bruteforce(r) : convex_sets(r));
    } else if (*geometry) {
      result = certificate_to_json(is_convex_geometry(transit_from_json(read_json(o, in))));
    } else if (*build) {
      const auto m = parse_model(o.model);
      if (!m) {
        err << "unknown model \"" << o.model << "\"\n";
        return 1;
      }
      result = transit_to_json(build_transit(read_graph(o, in), *m));
    } else if (*recognize_sub) {
      result = recognize_cmd(o, in);
    } else if (*setsys) {
      result = setsys_cmd(o, in);
    } else if (*hyper) {
      result = hyper_cmd(o, in);
    } else if (*verify) {
      if (o.theorem.empty() && o.find.empty() && !o.all) {
        err << "verify needs --theorem, --all or --find\n";
        return 1;
      }
      result = verify_cmd(o, in);
    } else if (*enumerate) {
      result = enumerate_cmd(o);
    } else {
      err << app.help();
      return 1;
    }
    out << result.dump(2) << '\n';
    return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "malformed input: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace transit::cli
