// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "transit/axioms.hpp"
#include "transit/canonical.hpp"
#include "transit/convexity.hpp"
#include "transit/graph_transit.hpp"
#include "transit/harness.hpp"
#include "transit/hypergraph.hpp"
#include "transit/recognizers.hpp"
#include "transit/setsystems.hpp"

using namespace transit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::size_t failures = 0;
  std::ostringstream notes;    // one-line summary
  std::ostringstream details;  // failures, listed below the verdict

  void fail(const std::string& what) {
    pass = false;
    if (++failures <= 20) details << "\n    - " << what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

// ---- 1 ----------------------------------------------------------------

struct Expectation {
  const char* fixture;
  std::vector<std::pair<AxiomId, bool>> axioms;
  int geometry;         // 1 yes, 0 no, -1 not stated
  int system_geometry;  // transit-set system
};

void example_table(Outcome& o) {
  using A = AxiomId;
  const std::vector<Expectation> table = {
      {"geometry_not_monotone.json", {{A::b1, true}, {A::j0, false}, {A::m, false}}, 1, -1},
      {"monotone_b1_j0_not_geometry.json", {{A::m, true}, {A::j0, true}, {A::b1, true}}, 0, -1},
      {"ch_b1_not_j0.json", {{A::ch, true}, {A::b1, true}, {A::j0, false}}, 0, -1},
      {"j0_b1_not_ch.json", {{A::j0, true}, {A::b1, true}, {A::ch, false}}, 0, -1},
      {"j0_ch_not_b1.json", {{A::j0, true}, {A::ch, true}, {A::b1, false}}, 0, -1},
      {"peano_not_ch.json", {{A::p, true}, {A::b1, true}, {A::j0, true}, {A::ch, false}}, 1, -1},
      {"transit_sets_not_geometry.json",
       {{A::m, true}, {A::ch, true}, {A::j0, true}, {A::b1, true}, {A::a_prime, true}, {A::k, true}},
       -1,
       0},
      {"transit_sets_without_full.json",
       {{A::m, true}, {A::k, true}, {A::ch, true}, {A::j0, true}, {A::b1, true}, {A::a_prime, false}},
       -1,
       -1},
      {"transit_sets_not_closed.json",
       {{A::m, true}, {A::a_prime, true}, {A::ch, true}, {A::j0, true}, {A::b1, true}, {A::k, false}},
       -1,
       -1},
  };
  const auto t0 = Clock::now();
  std::size_t verdicts = 0;
  for (const Expectation& e : table) {
    const TransitFunction r = fixture::transit(e.fixture);
    for (const auto& [a, want] : e.axioms) {
      const AxiomVerdict v = check_axiom(r, a);
      ++verdicts;
      o.expect(v.holds == want, std::string(e.fixture) + " " + std::string(label(a)));
      if (!v.holds) o.expect(witness_confirms(r, a, v), std::string(e.fixture) + " witness " + std::string(label(a)));
    }
    if (e.geometry >= 0) {
      ++verdicts;
      o.expect(is_convex_geometry(r).is_geometry == (e.geometry == 1), std::string(e.fixture) + " geometry");
    }
    if (e.system_geometry >= 0) {
      ++verdicts;
      o.expect(transit_system_is_convex_geometry(r).is_geometry == (e.system_geometry == 1),
               std::string(e.fixture) + " transit-set geometry");
    }
  }
  // the non-closed system is not even a convexity
  const TransitFunction r44 = fixture::transit("transit_sets_not_closed.json");
  o.expect(!intersection_closed(transit_set_system(r44).members()), "transit_sets_not_closed.json closure");
  // without a full transit set, V is missing from the system
  const TransitFunction r43 = fixture::transit("transit_sets_without_full.json");
  o.expect(!transit_set_system(r43).contains(r43.full()), "transit_sets_without_full.json V member");
  const double elapsed = seconds_since(t0);
  o.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  o.notes << verdicts << " verdicts over " << table.size() << " examples in " << elapsed << " s";
}

// ---- 2 ----------------------------------------------------------------

void iff_theorems(Outcome& o) {
  using T = TheoremId;
  const std::vector<std::pair<T, std::size_t>> suites = {
      {T::geo_cg_ptolemaic, 7},          {T::p3_cg_starforest, 7},
      {T::p3_b1_triangle, 7},            {T::p3_j0_forbidden4, 7},
      {T::p3_ch_familyA, 7},             {T::allpaths_cg_tree, 7},
      {T::allpaths_j0_blocks, 7},        {T::connected_alignment_blockgraph, 7},
      {T::mono_cg_chordal, 6},           {T::m3_cg_weakbipolar, 6},
      {T::j_b1_hhd, 6},                  {T::m3_b1_hhd, 6},
      {T::m3_j0_holeA, 6},               {T::toll_cg_interval, 6},
      {T::toll_b1j0_interval, 6},        {T::weaktoll_cg_properinterval, 6},
      {T::weaktoll_b1j0_properinterval, 6}, {T::wt_eq_t_clawfree, 6},
  };
  const auto t0 = Clock::now();
  std::size_t graphs = 0;
  for (const auto& [t, n] : suites) {
    const TheoremReport r = verify_theorem(t, n, {});
    graphs += r.checked;
    if (!r.ok()) {
      std::string first;
      for (std::size_t i = 0; i < r.mismatches.size() && i < 3; ++i) first += " " + r.mismatches[i];
      o.fail(std::string(theorem_name(t)) + ": " + std::to_string(r.mismatches.size()) + " mismatches (lhs " +
             std::to_string(r.lhs_true) + ", rhs " + std::to_string(r.rhs_true) + "), e.g." + first);
    }
  }
  const double elapsed = seconds_since(t0);
  o.expect(elapsed < 600.0, "runtime " + std::to_string(elapsed) + " s");
  o.notes << suites.size() << " suites, " << graphs << " graph checks in " << elapsed << " s";
}

// ---- 3 ----------------------------------------------------------------

void implication_suite(Outcome& o) {
  using T = TheoremId;
  HarnessConfig cfg;
  cfg.samples = 10000;
  std::size_t total = 0;
  for (T t : {T::ch_implies_m, T::ch_implies_p, T::b3_implies_b1, T::cg_axioms_sufficient, T::peano_cg_iff,
              T::mono_cg_necessary, T::t11_equivalences}) {
    const TheoremReport r = verify_theorem(t, 6, cfg);
    total += r.checked;
    o.expect(r.n_min == 4 && r.n_max == 6, std::string(theorem_name(t)) + " n range");
    o.expect(r.ok(), std::string(theorem_name(t)) + ": " + std::to_string(r.mismatches.size()) + " violations");
    o.notes << theorem_name(t) << " " << r.lhs_true << "/" << r.checked << "; ";
  }
  o.notes << total << " evaluations";
}

// ---- 4 ----------------------------------------------------------------

void oracle_equivalence(Outcome& o) {
  std::size_t walk = 0, paths = 0, scans = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      ++walk;
      o.expect(toll_T(g).same_table(oracle::toll(g)), "toll " + to_graph6(g));
      o.expect(weak_toll_WT(g).same_table(oracle::weak_toll(g)), "weak toll " + to_graph6(g));
    }
  for (std::size_t n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      ++paths;
      o.expect(all_paths_A(g).same_table(oracle::all_paths(g)), "all paths " + to_graph6(g));
    }
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::uint64_t i = 0; i < 100; ++i) {
      ++scans;
      const double density = 0.05 + 0.1 * static_cast<double>(i % 5);
      const TransitFunction r = random_transit_function(n, mix_seed(n, i), density);
      std::vector<Subset> expected = oracle::convex_sets(r);
      std::sort(expected.begin(), expected.end(), [](Subset a, Subset b) { return size_then_bits(a, b); });
      o.expect(convex_sets(r).sets() == expected, "convex sets n=" + std::to_string(n));
    }
  o.notes << walk << " graphs for T/WT, " << paths << " for A, " << scans << " random R; classes";
  for (std::size_t n = 1; n <= 7; ++n) {
    const std::size_t want = oracle::connected_classes(n);
    const std::size_t got = enumerate_connected_graphs(n).size();
    o.notes << " " << got;
    o.expect(got == want, "n=" + std::to_string(n) + " enumerator " + std::to_string(got) + " oracle " +
                              std::to_string(want));
  }
}

// ---- 5 ----------------------------------------------------------------

void set_system_suite(Outcome& o) {
  using T = TheoremId;
  HarnessConfig cfg;
  cfg.samples = 10000;
  for (T t : {T::setsys_bijection, T::thm45_cg, T::lem46_cg_aprime}) {
    const TheoremReport r = verify_theorem(t, 6, cfg);
    o.expect(r.ok(), std::string(theorem_name(t)) + ": " + std::to_string(r.mismatches.size()) + " violations");
    o.notes << theorem_name(t) << " " << r.checked << "; ";
  }
  // identification against the literal monotonicity oracle
  std::size_t monotone = 0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const std::size_t n = 2 + i % 5;
    const TransitFunction r = random_monotone_transit_function(n, mix_seed(77, i), 0.1 + 0.1 * (i % 4));
    const bool m = oracle::m(r);
    monotone += m ? 1 : 0;
    o.expect(identifies(r).holds == m, "identifies on monotone sample " + std::to_string(i));
    if (m) {
      const SetSystem c = transit_set_system(r);
      o.expect(canonical_transit(c).same_table(r) && transit_set_system(canonical_transit(c)) == c,
               "round trip " + std::to_string(i));
    }
  }
  const TransitFunction r = fixture::transit("transit_sets_not_geometry.json");
  o.expect(oracle::m(r) && oracle::ch(r) && oracle::j0(r) && oracle::b1(r) && oracle::a_prime(r) && oracle::k(r),
           "set-system example profile (oracle)");
  o.expect(!transit_system_is_convex_geometry(r).is_geometry, "set-system example geometry");
  o.expect(!oracle::cg(r), "set-system example cg (oracle)");
  o.notes << monotone << " monotone samples round-tripped";
}

// ---- 6 ----------------------------------------------------------------

void hypergraph_suite(Outcome& o) {
  HarnessConfig cfg;
  cfg.samples = 10000;
  const TheoremReport r = verify_theorem(TheoremId::prop51_hyper, 7, cfg);
  o.expect(r.ok(), "prop51_hyper: " + std::to_string(r.mismatches.size()) + " violations");
  o.notes << "prop51_hyper " << r.lhs_true << " with <= 1 cut vertex of " << r.checked << " connected; ";
  const auto hit = find_counterexample("hyper_cg_three_cuts", 7);
  if (!hit || !hit->hypergraph) {
    o.fail("no hypergraph witness found");
    return;
  }
  const Hypergraph& h = *hit->hypergraph;
  o.expect(oracle::hyper_strong_cut_vertices(h).size() >= 3, "witness has fewer than 3 strong cut vertices");
  o.expect(!oracle::anti_exchange(oracle::hyper_cut_vertex(h)), "witness convexity is a geometry");
  o.notes << "witness after " << hit->tried << " instances";
}

// ---- 7 ----------------------------------------------------------------

void recognizer_suite(Outcome& o) {
  std::size_t ptolemy = 0, chordal = 0, chain = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      ++ptolemy;
      o.expect(recognize(g, ClassId::ptolemaic).holds == ptolemy_inequality_holds(g).holds,
               "ptolemy " + to_graph6(g));
      ++chordal;
      o.expect(is_chordal(g) == !oracle::has_induced_cycle(g, 4), "chordal " + to_graph6(g));
    }
  std::mt19937_64 rng(2024);
  for (std::size_t n = 9; n <= 10; ++n)
    for (int i = 0; i < 3000; ++i) {
      const double density = 0.1 + 0.1 * (i % 7);
      Graph g{GroundSet(n)};
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (unit_interval(rng()) < density) g.add_edge(u, v);
      ++chordal;
      o.expect(is_chordal(g) == !oracle::has_induced_cycle(g, 4), "chordal " + to_graph6(g));
    }
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      ++chain;
      auto in = [&](ClassId c) { return recognize(g, c).holds; };
      const std::string id = to_graph6(g);
      if (in(ClassId::proper_interval)) o.expect(in(ClassId::interval), "proper interval " + id);
      if (in(ClassId::interval)) o.expect(in(ClassId::chordal), "interval " + id);
      if (in(ClassId::ptolemaic)) o.expect(in(ClassId::chordal), "ptolemaic " + id);
      if (in(ClassId::weak_bipolarizable)) o.expect(in(ClassId::hhd_free), "weak bipolarizable " + id);
    }
  o.notes << ptolemy << " Ptolemy, " << chordal << " chordal, " << chain << " chain checks";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"example regression table", example_table},
      {"exhaustive graph iff-theorems", iff_theorems},
      {"random implication properties", implication_suite},
      {"oracle equivalence", oracle_equivalence},
      {"set-system suite", set_system_suite},
      {"hypergraph suite", hypergraph_suite},
      {"recognizer cross-checks", recognizer_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (o.failures > 20) o.details << "\n    (" << o.failures - 20 << " more failures)";
    std::printf("%s criterion %zu: %s [%.1f s] %s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                seconds_since(t0), o.notes.str().c_str(), o.details.str().c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
