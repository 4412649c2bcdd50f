#include "transit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "transit/axioms.hpp"
#include "transit/canonical.hpp"
#include "transit/convexity.hpp"
#include "transit/error.hpp"
#include "transit/graph_transit.hpp"
#include "transit/json_io.hpp"
#include "transit/patterns.hpp"
#include "transit/recognizers.hpp"
#include "transit/setsystems.hpp"

namespace transit {

namespace {

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  std::string_view statement;
  TheoremKind kind;
};

constexpr TheoremInfo kInfo[] = {
    {TheoremId::geo_cg_ptolemaic, "geo_cg_ptolemaic", "CG(I) <=> ptolemaic", TheoremKind::iff},
    {TheoremId::mono_cg_chordal, "mono_cg_chordal", "CG(J) <=> chordal", TheoremKind::iff},
    {TheoremId::m3_cg_weakbipolar, "m3_cg_weakbipolar", "CG(m3) <=> weak bipolarizable", TheoremKind::iff},
    {TheoremId::allpaths_cg_tree, "allpaths_cg_tree", "CG(A) <=> tree", TheoremKind::iff},
    {TheoremId::toll_cg_interval, "toll_cg_interval", "CG(T) <=> interval", TheoremKind::iff},
    {TheoremId::weaktoll_cg_properinterval, "weaktoll_cg_properinterval", "CG(WT) <=> proper interval",
     TheoremKind::iff},
    {TheoremId::p3_cg_starforest, "p3_cg_starforest", "CG(P3) <=> star forest", TheoremKind::iff},
    {TheoremId::j_b1_hhd, "j_b1_hhd", "(b1) for J <=> HHD-free", TheoremKind::iff},
    {TheoremId::m3_b1_hhd, "m3_b1_hhd", "(b1) for m3 <=> HHD-free", TheoremKind::iff},
    {TheoremId::m3_j0_holeA, "m3_j0_holeA", "(J0) for m3 <=> (hole, A)-free", TheoremKind::iff},
    {TheoremId::p3_b1_triangle, "p3_b1_triangle", "(b1) for P3 <=> triangle-free", TheoremKind::iff},
    {TheoremId::p3_j0_forbidden4, "p3_j0_forbidden4", "(J0) for P3 <=> (P4, C4, diamond, paw)-free",
     TheoremKind::iff},
    {TheoremId::p3_ch_familyA, "p3_ch_familyA", "(Ch) for P3 <=> family-A-free", TheoremKind::iff},
    {TheoremId::allpaths_j0_blocks, "allpaths_j0_blocks",
     "(J0) for A <=> every component a tree or 2-connected", TheoremKind::iff},
    {TheoremId::toll_b1j0_interval, "toll_b1j0_interval", "(b1) and (J0) for T <=> interval", TheoremKind::iff},
    {TheoremId::weaktoll_b1j0_properinterval, "weaktoll_b1j0_properinterval",
     "(b1) and (J0) for WT <=> proper interval", TheoremKind::iff},
    {TheoremId::wt_eq_t_clawfree, "wt_eq_t_clawfree", "WT = T <=> claw-free", TheoremKind::iff},
    {TheoremId::connected_alignment_blockgraph, "connected_alignment_blockgraph",
     "connected sets intersection-closed and CG <=> block graph; then they are the C-convex sets",
     TheoremKind::iff},
    {TheoremId::ch_implies_m, "ch_implies_m", "(Ch) => (m)", TheoremKind::implies},
    {TheoremId::ch_implies_p, "ch_implies_p", "(Ch) => (P)", TheoremKind::implies},
    {TheoremId::cg_axioms_sufficient, "cg_axioms_sufficient", "(Ch) and (b1) and (J0) => CG",
     TheoremKind::implies},
    {TheoremId::peano_cg_iff, "peano_cg_iff", "under (P): CG <=> (b1) and (J0)", TheoremKind::iff},
    {TheoremId::t11_equivalences, "t11_equivalences",
     "MKM, anti-exchange and one-point extension agree", TheoremKind::iff},
    {TheoremId::t12_eb1_eb2, "t12_eb1_eb2", "(eB1) <=> (eB2) on the strict betweenness of R",
     TheoremKind::iff},
    {TheoremId::setsys_bijection, "setsys_bijection",
     "identifies <=> (m); transit sets and canonical transit function are inverse", TheoremKind::iff},
    {TheoremId::thm45_cg, "thm45_cg", "under (m), (a'), (k): transit sets form a CG <=> (cg)",
     TheoremKind::iff},
    {TheoremId::lem46_cg_aprime, "lem46_cg_aprime", "(cg) => (a')", TheoremKind::implies},
    {TheoremId::prop51_hyper, "prop51_hyper", "at most one strong cut-vertex => CG(C) on hypergraphs",
     TheoremKind::implies},
    {TheoremId::b3_implies_b1, "b3_implies_b1", "(b3) => (b1)", TheoremKind::implies},
    {TheoremId::mono_cg_necessary, "mono_cg_necessary", "under (m): CG => (b1) and (J0)",
     TheoremKind::implies},
};

const TheoremInfo& info(TheoremId t) {
  for (const auto& i : kInfo) {
    if (i.id == t) return i;
  }
  throw Error(ErrorCode::kUnknownTheorem, "unregistered theorem id");
}

// Outcome of one instance. `counted` is false when the instance falls outside
// the theorem's hypotheses (disconnected hypergraph, failed premise).
struct Eval {
  bool counted = true;
  bool lhs = false;
  bool rhs = false;
  bool broken = false;  // an auxiliary check failed
};

bool holds(const TransitFunction& r, AxiomId a) { return check_axiom(r, a).holds; }

bool cg(const TransitFunction& r) { return is_convex_geometry(r).is_geometry; }

// ---- graph theorems ----

bool is_graph_theorem(TheoremId t) {
  switch (t) {
    case TheoremId::geo_cg_ptolemaic:
    case TheoremId::mono_cg_chordal:
    case TheoremId::m3_cg_weakbipolar:
    case TheoremId::allpaths_cg_tree:
    case TheoremId::toll_cg_interval:
    case TheoremId::weaktoll_cg_properinterval:
    case TheoremId::p3_cg_starforest:
    case TheoremId::j_b1_hhd:
    case TheoremId::m3_b1_hhd:
    case TheoremId::m3_j0_holeA:
    case TheoremId::p3_b1_triangle:
    case TheoremId::p3_j0_forbidden4:
    case TheoremId::p3_ch_familyA:
    case TheoremId::allpaths_j0_blocks:
    case TheoremId::toll_b1j0_interval:
    case TheoremId::weaktoll_b1j0_properinterval:
    case TheoremId::wt_eq_t_clawfree:
    case TheoremId::connected_alignment_blockgraph:
      return true;
    default:
      return false;
  }
}

Eval connected_alignment(const Graph& g) {
  std::vector<Subset> family{Subset{}};
  const Subset::word_type limit = Subset::word_type{1} << g.size();
  for (Subset::word_type bits = 1; bits < limit; ++bits) {
    if (induces_connected(g, Subset(bits))) family.push_back(Subset(bits));
  }
  Eval e;
  const bool closed = intersection_closed(family);
  e.lhs = closed && geometry_certificate(FamilyClosure(g.size(), family)).is_geometry;
  e.rhs = recognize(g, ClassId::block_graph).holds;
  if (e.rhs) e.broken = ConvexFamily(family) != convex_sets(cutvertex_C(g));
  return e;
}

Eval eval_graph(TheoremId t, const Graph& g) {
  Eval e;
  auto rhs = [&](ClassId c) { return recognize(g, c).holds; };
  switch (t) {
    case TheoremId::geo_cg_ptolemaic:
      e.lhs = cg(interval_I(g));
      e.rhs = rhs(ClassId::ptolemaic);
      break;
    case TheoremId::mono_cg_chordal:
      e.lhs = cg(induced_J(g));
      e.rhs = rhs(ClassId::chordal);
      break;
    case TheoremId::m3_cg_weakbipolar:
      e.lhs = cg(m3(g));
      e.rhs = rhs(ClassId::weak_bipolarizable);
      break;
    case TheoremId::allpaths_cg_tree:
      e.lhs = cg(all_paths_A(g));
      e.rhs = rhs(ClassId::tree);
      break;
    case TheoremId::toll_cg_interval:
      e.lhs = cg(toll_T(g));
      e.rhs = rhs(ClassId::interval);
      break;
    case TheoremId::weaktoll_cg_properinterval:
      e.lhs = cg(weak_toll_WT(g));
      e.rhs = rhs(ClassId::proper_interval);
      break;
    case TheoremId::p3_cg_starforest:
      e.lhs = cg(p3(g));
      e.rhs = rhs(ClassId::star_forest);
      break;
    case TheoremId::j_b1_hhd:
      e.lhs = holds(induced_J(g), AxiomId::b1);
      e.rhs = rhs(ClassId::hhd_free);
      break;
    case TheoremId::m3_b1_hhd:
      e.lhs = holds(m3(g), AxiomId::b1);
      e.rhs = rhs(ClassId::hhd_free);
      break;
    case TheoremId::m3_j0_holeA:
      e.lhs = holds(m3(g), AxiomId::j0);
      e.rhs = !has_hole(g) && !contains_induced(g, pattern("A"));
      break;
    case TheoremId::p3_b1_triangle:
      e.lhs = holds(p3(g), AxiomId::b1);
      e.rhs = rhs(ClassId::triangle_free);
      break;
    case TheoremId::p3_j0_forbidden4:
      e.lhs = holds(p3(g), AxiomId::j0);
      e.rhs = rhs(ClassId::p3_j0_class);
      break;
    case TheoremId::p3_ch_familyA:
      e.lhs = holds(p3(g), AxiomId::ch);
      e.rhs = rhs(ClassId::family_A_free);
      break;
    case TheoremId::allpaths_j0_blocks:
      e.lhs = holds(all_paths_A(g), AxiomId::j0);
      e.rhs = rhs(ClassId::two_connected_or_tree_components);
      break;
    case TheoremId::toll_b1j0_interval: {
      const TransitFunction t_fn = toll_T(g);
      e.lhs = holds(t_fn, AxiomId::b1) && holds(t_fn, AxiomId::j0);
      e.rhs = rhs(ClassId::interval);
      break;
    }
    case TheoremId::weaktoll_b1j0_properinterval: {
      const TransitFunction wt = weak_toll_WT(g);
      e.lhs = holds(wt, AxiomId::b1) && holds(wt, AxiomId::j0);
      e.rhs = rhs(ClassId::proper_interval);
      break;
    }
    case TheoremId::wt_eq_t_clawfree:
      e.lhs = toll_T(g).same_table(weak_toll_WT(g));
      e.rhs = rhs(ClassId::claw_free);
      break;
    case TheoremId::connected_alignment_blockgraph:
      return connected_alignment(g);
    default:
      throw Error(ErrorCode::kUnknownTheorem, "not a graph theorem");
  }
  return e;
}

// ---- transit-function theorems ----

constexpr double kDensities[] = {0.05, 0.1, 0.15, 0.25, 0.4, 0.6};

std::uint64_t sample_seed(std::uint64_t seed, std::size_t n, std::size_t i) {
  return mix_seed(mix_seed(seed, n), i);
}

double sample_density(std::uint64_t s) { return kDensities[(s >> 7) % std::size(kDensities)]; }

// Even samples are plain random R, odd samples their monotone segment
// transit function, so that premises like (m) are not vacuous.
TransitFunction sample_transit(std::size_t n, std::uint64_t s, bool monotone) {
  const double density = sample_density(s);
  return monotone ? random_monotone_transit_function(n, s, density) : random_transit_function(n, s, density);
}

bool only_monotone(TheoremId t) { return t == TheoremId::thm45_cg; }

Eval eval_transit(TheoremId t, const TransitFunction& r) {
  Eval e;
  switch (t) {
    case TheoremId::ch_implies_m:
      e.lhs = holds(r, AxiomId::ch);
      e.rhs = holds(r, AxiomId::m);
      break;
    case TheoremId::ch_implies_p:
      e.lhs = holds(r, AxiomId::ch);
      e.rhs = holds(r, AxiomId::p);
      break;
    case TheoremId::b3_implies_b1:
      e.lhs = holds(r, AxiomId::b3);
      e.rhs = holds(r, AxiomId::b1);
      break;
    case TheoremId::cg_axioms_sufficient:
      e.lhs = holds(r, AxiomId::ch) && holds(r, AxiomId::b1) && holds(r, AxiomId::j0);
      e.rhs = cg(r);
      break;
    case TheoremId::peano_cg_iff:
      e.counted = holds(r, AxiomId::p);
      if (!e.counted) break;
      e.lhs = cg(r);
      e.rhs = holds(r, AxiomId::b1) && holds(r, AxiomId::j0);
      break;
    case TheoremId::mono_cg_necessary:
      e.counted = holds(r, AxiomId::m);
      if (!e.counted) break;
      e.lhs = cg(r);
      e.rhs = holds(r, AxiomId::b1) && holds(r, AxiomId::j0);
      break;
    case TheoremId::t11_equivalences:
      try {
        e.lhs = e.rhs = cg(r);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::kInternalDisagreement) throw;
        e.broken = true;
      }
      break;
    case TheoremId::t12_eb1_eb2: {
      const Betweenness b = to_betweenness(r);
      e.lhs = check_eb1(b).holds;
      e.rhs = check_eb2(b).holds;
      break;
    }
    case TheoremId::setsys_bijection: {
      e.lhs = identifies(r).holds;
      e.rhs = holds(r, AxiomId::m);
      if (e.rhs) {
        const SetSystem c = transit_set_system(r);
        e.broken = !check_k_axioms(c).is_t_system() || !canonical_transit(c).same_table(r) ||
                   transit_set_system(canonical_transit(c)) != c;
      }
      break;
    }
    case TheoremId::thm45_cg:
      e.counted = holds(r, AxiomId::m) && holds(r, AxiomId::a_prime) && holds(r, AxiomId::k);
      if (!e.counted) break;
      e.lhs = transit_system_is_convex_geometry(r).is_geometry;
      e.rhs = holds(r, AxiomId::cg);
      break;
    case TheoremId::lem46_cg_aprime:
      e.lhs = holds(r, AxiomId::cg);
      e.rhs = holds(r, AxiomId::a_prime);
      break;
    default:
      throw Error(ErrorCode::kUnknownTheorem, "not a transit-function theorem");
  }
  return e;
}

// ---- hypergraphs ----

// Every hypergraph on n vertices with 1..max_edges distinct edges, edges in
// increasing bit order.
void tiny_hypergraphs(std::size_t n, std::size_t max_edges, std::vector<Hypergraph>& out) {
  const Subset::word_type limit = Subset::word_type{1} << n;
  std::vector<Subset> chosen;
  std::function<void(Subset::word_type)> grow = [&](Subset::word_type from) {
    for (Subset::word_type bits = from; bits < limit; ++bits) {
      chosen.push_back(Subset(bits));
      out.emplace_back(GroundSet(n), chosen);
      if (chosen.size() < max_edges) grow(bits + 1);
      chosen.pop_back();
    }
  };
  grow(1);
}

Hypergraph random_instance(std::size_t n, std::uint64_t s) {
  constexpr double kEdgeDensities[] = {0.3, 0.4, 0.5, 0.6};
  const std::size_t edges = 1 + (s >> 11) % (n + 1);
  return random_hypergraph(n, edges, s, kEdgeDensities[(s >> 7) % std::size(kEdgeDensities)]);
}

Eval eval_hyper(const Hypergraph& h) {
  Eval e;
  e.counted = hyper_connected(h);
  if (!e.counted) return e;
  e.lhs = strong_cut_vertices(h).size() <= 1;
  e.rhs = cg(cutvertex_C_hyper(h));
  return e;
}

// ---- reporting ----

bool mismatch(TheoremKind kind, const Eval& e) {
  if (!e.counted) return false;
  if (e.broken) return true;
  return kind == TheoremKind::iff ? e.lhs != e.rhs : e.lhs && !e.rhs;
}

TheoremReport run(TheoremReport report, std::size_t count, std::size_t threads,
                  const std::function<Eval(std::size_t)>& evaluate,
                  const std::function<std::string(std::size_t)>& describe) {
  std::vector<Eval> results(count);
  parallel_for(count, threads, [&](std::size_t i) { results[i] = evaluate(i); });
  for (std::size_t i = 0; i < count; ++i) {
    const Eval& e = results[i];
    if (!e.counted) continue;
    ++report.checked;
    report.lhs_true += e.lhs ? 1 : 0;
    report.rhs_true += e.rhs ? 1 : 0;
    if (mismatch(report.kind, e)) report.mismatches.push_back(describe(i));
  }
  return report;
}

}  // namespace

std::string_view theorem_name(TheoremId t) { return info(t).name; }

TheoremId parse_theorem(std::string_view name) {
  for (const auto& i : kInfo) {
    if (i.name == name) return i.id;
  }
  throw Error(ErrorCode::kUnknownTheorem, "unknown theorem \"" + std::string(name) + "\"");
}

std::string_view theorem_statement(TheoremId t) { return info(t).statement; }
TheoremKind theorem_kind(TheoremId t) { return info(t).kind; }

std::size_t default_n_max(TheoremId t) {
  switch (t) {
    case TheoremId::mono_cg_chordal:
    case TheoremId::m3_cg_weakbipolar:
    case TheoremId::j_b1_hhd:
    case TheoremId::m3_b1_hhd:
    case TheoremId::m3_j0_holeA:
    case TheoremId::toll_cg_interval:
    case TheoremId::toll_b1j0_interval:
    case TheoremId::weaktoll_cg_properinterval:
    case TheoremId::weaktoll_b1j0_properinterval:
    case TheoremId::wt_eq_t_clawfree:
      return 6;
    default:
      return is_graph_theorem(t) || t == TheoremId::prop51_hyper ? 7 : 6;
  }
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t worker_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TG_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(worker_count(threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex lock;
  auto work = [&] {
    while (!stop) {
      const std::size_t i = next++;
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> guard(lock);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

TheoremReport verify_theorem(TheoremId t, std::size_t n_max, const HarnessConfig& cfg) {
  if (n_max == 0) throw Error(ErrorCode::kMalformedInput, "n_max must be positive");
  TheoremReport report;
  report.theorem = t;
  report.kind = theorem_kind(t);
  report.n_max = n_max;

  if (is_graph_theorem(t)) {
    std::vector<const Graph*> graphs;
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (const Graph& g : enumerate_connected_graphs(n)) graphs.push_back(&g);
    }
    for (const Graph& g : cfg.corpus) {
      if (is_connected(g)) graphs.push_back(&g);
    }
    return run(
        report, graphs.size(), cfg.threads, [&](std::size_t i) { return eval_graph(t, *graphs[i]); },
        [&](std::size_t i) { return to_graph6(*graphs[i]); });
  }

  if (t == TheoremId::prop51_hyper) {
    std::vector<Hypergraph> tiny;
    for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 5); ++n) tiny_hypergraphs(n, 4, tiny);
    const std::size_t random_ns = n_max >= 2 ? n_max - 1 : 0;
    auto instance = [&](std::size_t i) {
      if (i < tiny.size()) return tiny[i];
      i -= tiny.size();
      const std::size_t n = 2 + i / cfg.samples;
      return random_instance(n, sample_seed(cfg.seed, n, i % cfg.samples));
    };
    return run(
        report, tiny.size() + random_ns * cfg.samples, cfg.threads,
        [&](std::size_t i) { return eval_hyper(instance(i)); },
        [&](std::size_t i) { return hypergraph_to_json(instance(i)).dump(); });
  }

  report.n_min = std::min<std::size_t>(4, n_max);
  const std::size_t span = n_max - report.n_min + 1;
  auto instance = [&](std::size_t i) {
    const std::size_t n = report.n_min + i / cfg.samples;
    const std::size_t k = i % cfg.samples;
    return sample_transit(n, sample_seed(cfg.seed, n, k), only_monotone(t) || k % 2 == 1);
  };
  return run(
      report, span * cfg.samples, cfg.threads, [&](std::size_t i) { return eval_transit(t, instance(i)); },
      [&](std::size_t i) { return transit_to_json(instance(i)).dump(); });
}

std::optional<Counterexample> find_counterexample(std::string_view predicate, std::size_t n_max,
                                                  std::uint64_t seed) {
  constexpr std::size_t kBudget = 1000000;
  Counterexample hit;
  hit.predicate = std::string(predicate);

  if (predicate == "hyper_cg_three_cuts") {
    auto violates = [](const Hypergraph& h) {
      return hyper_connected(h) && strong_cut_vertices(h).size() >= 3 && !cg(cutvertex_C_hyper(h));
    };
    for (std::size_t n = 3; n <= std::min<std::size_t>(n_max, 5); ++n) {
      std::vector<Hypergraph> tiny;
      tiny_hypergraphs(n, 4, tiny);
      for (const Hypergraph& h : tiny) {
        ++hit.tried;
        if (violates(h)) {
          hit.hypergraph = h;
          return hit;
        }
      }
    }
    for (std::size_t i = 0; n_max >= 3 && i < kBudget; ++i) {
      const std::size_t n = 3 + i % (n_max - 2);
      const Hypergraph h = random_instance(n, mix_seed(seed, i));
      ++hit.tried;
      if (violates(h)) {
        hit.hypergraph = h;
        return hit;
      }
    }
    return std::nullopt;
  }

  std::function<bool(const TransitFunction&)> violates;
  std::size_t n_min = 3;
  if (predicate == "mjb1_implies_cg") {
    n_min = 4;
    violates = [](const TransitFunction& r) {
      return holds(r, AxiomId::m) && holds(r, AxiomId::j0) && holds(r, AxiomId::b1) && !cg(r);
    };
  } else if (predicate == "ch_implies_b1") {
    violates = [](const TransitFunction& r) { return holds(r, AxiomId::ch) && !holds(r, AxiomId::b1); };
  } else {
    throw Error(ErrorCode::kUnknownPredicate, "unknown predicate \"" + std::string(predicate) + "\"");
  }
  if (n_max < n_min) return std::nullopt;
  for (std::size_t i = 0; i < kBudget; ++i) {
    const std::size_t n = n_min + i % (n_max - n_min + 1);
    const std::uint64_t s = mix_seed(seed, i);
    const TransitFunction r = sample_transit(n, s, i % 2 == 1);
    ++hit.tried;
    if (violates(r)) {
      hit.transit = r;
      return hit;
    }
  }
  return std::nullopt;
}

}  // namespace transit
