#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transit/graph.hpp"
#include "transit/hypergraph.hpp"
#include "transit/transit_function.hpp"

namespace transit {

enum class TheoremId {
  geo_cg_ptolemaic,
  mono_cg_chordal,
  m3_cg_weakbipolar,
  allpaths_cg_tree,
  toll_cg_interval,
  weaktoll_cg_properinterval,
  p3_cg_starforest,
  j_b1_hhd,
  m3_b1_hhd,
  m3_j0_holeA,
  p3_b1_triangle,
  p3_j0_forbidden4,
  p3_ch_familyA,
  allpaths_j0_blocks,
  toll_b1j0_interval,
  weaktoll_b1j0_properinterval,
  wt_eq_t_clawfree,
  connected_alignment_blockgraph,
  ch_implies_m,
  ch_implies_p,
  cg_axioms_sufficient,
  peano_cg_iff,
  t11_equivalences,
  t12_eb1_eb2,
  setsys_bijection,
  thm45_cg,
  lem46_cg_aprime,
  prop51_hyper,
  b3_implies_b1,
  mono_cg_necessary,
};

inline constexpr std::array<TheoremId, 30> kAllTheorems = {
    TheoremId::geo_cg_ptolemaic,      TheoremId::mono_cg_chordal,
    TheoremId::m3_cg_weakbipolar,     TheoremId::allpaths_cg_tree,
    TheoremId::toll_cg_interval,      TheoremId::weaktoll_cg_properinterval,
    TheoremId::p3_cg_starforest,      TheoremId::j_b1_hhd,
    TheoremId::m3_b1_hhd,             TheoremId::m3_j0_holeA,
    TheoremId::p3_b1_triangle,        TheoremId::p3_j0_forbidden4,
    TheoremId::p3_ch_familyA,         TheoremId::allpaths_j0_blocks,
    TheoremId::toll_b1j0_interval,    TheoremId::weaktoll_b1j0_properinterval,
    TheoremId::wt_eq_t_clawfree,      TheoremId::connected_alignment_blockgraph,
    TheoremId::ch_implies_m,          TheoremId::ch_implies_p,
    TheoremId::cg_axioms_sufficient,  TheoremId::peano_cg_iff,
    TheoremId::t11_equivalences,      TheoremId::t12_eb1_eb2,
    TheoremId::setsys_bijection,      TheoremId::thm45_cg,
    TheoremId::lem46_cg_aprime,       TheoremId::prop51_hyper,
    TheoremId::b3_implies_b1,         TheoremId::mono_cg_necessary};

std::string_view theorem_name(TheoremId t);
/// Throws kUnknownTheorem.
TheoremId parse_theorem(std::string_view name);

/// iff: lhs_true must equal rhs_true instance by instance.
/// implies: every instance with lhs true has rhs true.
enum class TheoremKind { iff, implies };

/// Human-readable statement, e.g. "CG(I) <=> ptolemaic".
std::string_view theorem_statement(TheoremId t);
TheoremKind theorem_kind(TheoremId t);
/// Default n budget: 6 for induced-path and toll theorems, 7 otherwise.
std::size_t default_n_max(TheoremId t);

struct HarnessConfig {
  std::uint64_t seed = 1;
  /// Random instances per n for transit-function and hypergraph theorems.
  std::size_t samples = 10000;
  /// 0: read TG_THREADS, else the hardware concurrency.
  std::size_t threads = 0;
  /// Extra graphs for graph theorems (disconnected ones are skipped).
  std::vector<Graph> corpus;
};

struct TheoremReport {
  TheoremId theorem{};
  TheoremKind kind = TheoremKind::iff;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::size_t checked = 0;
  std::size_t lhs_true = 0;
  std::size_t rhs_true = 0;
  /// graph6 strings for graphs; compact JSON for transit functions and
  /// hypergraphs.
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Graph theorems run over every connected graph with 1 <= n <= n_max plus
/// the corpus; transit-function theorems over cfg.samples seeded random
/// instances for each n in [min(4, n_max), n_max]; prop51_hyper over all
/// hypergraphs with n <= min(5, n_max) and at most 4 distinct edges plus
/// cfg.samples random ones for each n in [2, n_max]. Deterministic for a
/// fixed config regardless of thread count.
TheoremReport verify_theorem(TheoremId t, std::size_t n_max, const HarnessConfig& cfg = {});

/// Worker count from TG_THREADS, else hardware concurrency, at least 1.
std::size_t worker_count(std::size_t requested = 0);

/// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

/// splitmix64 finaliser used to derive per-sample seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Predicates the search understands:
///   hyper_cg_three_cuts  hypergraph with >= 3 strong cut-vertices whose
///                        C-convexity is not a convex geometry
///   mjb1_implies_cg      transit function with (m), (J0), (b1) that is not
///                        a convex geometry
///   ch_implies_b1        transit function with (Ch) but not (b1)
inline constexpr std::array<std::string_view, 3> kPredicates = {"hyper_cg_three_cuts",
                                                                "mjb1_implies_cg", "ch_implies_b1"};

struct Counterexample {
  std::string predicate;
  std::optional<TransitFunction> transit;
  std::optional<Hypergraph> hypergraph;
  /// Instances examined before the hit.
  std::size_t tried = 0;
};

/// First violating instance: exhaustive small instances first, then seeded
/// random ones (up to 10^6). Throws kUnknownPredicate.
std::optional<Counterexample> find_counterexample(std::string_view predicate, std::size_t n_max,
                                                  std::uint64_t seed = 1);

}  // namespace transit
