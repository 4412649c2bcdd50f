#include "transit/canonical.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>
#include <set>

#include "transit/error.hpp"

namespace transit {

namespace {

using Cells = std::vector<std::vector<std::size_t>>;

// Splits cells by neighbour counts into every cell until stable. Groups are
// ordered by their count vectors, so the result does not depend on labels.
void refine(const Graph& g, Cells& cells) {
  const std::size_t n = g.size();
  std::vector<std::size_t> cell_of(n);
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (std::size_t v : cells[c]) cell_of[v] = c;
    }
    Cells next;
    next.reserve(n);
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keyed;
      for (std::size_t v : cell) {
        std::vector<std::size_t> counts(cells.size(), 0);
        for (std::size_t w : g.neighbors(v)) ++counts[cell_of[w]];
        keyed.emplace_back(std::move(counts), v);
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
        next.back().push_back(keyed[i].second);
      }
    }
    const bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

std::uint64_t code_of(const Graph& g, const std::vector<std::size_t>& order) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < order.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
  }
  return code;
}

void search(const Graph& g, Cells cells, CanonicalForm& best, bool& have) {
  refine(g, cells);
  auto open = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (open == cells.end()) {
    std::vector<std::size_t> order;
    for (const auto& c : cells) order.push_back(c.front());
    const std::uint64_t code = code_of(g, order);
    if (!have || code > best.code) {
      best.code = code;
      best.order = std::move(order);
      have = true;
    }
    return;
  }
  const std::size_t at = static_cast<std::size_t>(open - cells.begin());
  const std::vector<std::size_t> cell = *open;
  for (std::size_t v : cell) {
    Cells branch;
    branch.reserve(cells.size() + 1);
    branch.insert(branch.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(at));
    branch.push_back({v});
    std::vector<std::size_t> rest;
    for (std::size_t w : cell) {
      if (w != v) rest.push_back(w);
    }
    branch.push_back(std::move(rest));
    branch.insert(branch.end(), cells.begin() + static_cast<std::ptrdiff_t>(at) + 1, cells.end());
    search(g, std::move(branch), best, have);
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kMaxCanonicalGround) {
    throw Error(ErrorCode::kGroundTooLarge,
                "canonical codes need n <= " + std::to_string(kMaxCanonicalGround));
  }
  Cells cells(1);
  for (std::size_t v = 0; v < n; ++v) cells[0].push_back(v);
  CanonicalForm best;
  bool have = false;
  search(g, std::move(cells), best, have);
  return best;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  Graph g(GroundSet{n});
  std::size_t bit = n * (n - 1) / 2;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

Graph canonical_graph(const Graph& g) { return graph_from_code(g.size(), canonical_form(g).code); }

const std::vector<Graph>& enumerate_connected_graphs(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kGroundTooLarge,
                "enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  }
  static std::mutex lock;
  static std::array<std::vector<Graph>, kMaxEnumerationOrder + 1> cache;
  std::lock_guard<std::mutex> guard(lock);
  if (cache[1].empty()) cache[1].push_back(Graph(GroundSet{1}));
  for (std::size_t k = 2; k <= n; ++k) {
    if (!cache[k].empty()) continue;
    std::set<std::uint64_t> seen;
    for (const Graph& base : cache[k - 1]) {
      const Subset::word_type limit = Subset::word_type{1} << (k - 1);
      for (Subset::word_type bits = 1; bits < limit; ++bits) {
        Graph grown(GroundSet{k});
        for (const auto& [u, v] : base.edges()) grown.add_edge(u, v);
        for (std::size_t v : Subset(bits)) grown.add_edge(v, k - 1);
        seen.insert(canonical_form(grown).code);
      }
    }
    for (std::uint64_t code : seen) cache[k].push_back(graph_from_code(k, code));
  }
  return cache[n];
}

}  // namespace transit
