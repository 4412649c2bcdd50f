#include "transit/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "transit/error.hpp"

namespace transit {

Graph::Graph(GroundSet ground) : ground_(std::move(ground)), adj_(ground_.size()) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges,
                        std::vector<std::string> labels) {
  Graph g(GroundSet(n, std::move(labels)));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  ground_.check_index(u);
  ground_.check_index(v);
  if (u == v) throw Error(ErrorCode::kMalformedInput, "loop at vertex " + ground_.name(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Subset s : adj_) twice += s.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v : adj_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(Subset s) const {
  std::vector<std::size_t> index(size(), 0);
  std::vector<std::string> labels;
  std::size_t k = 0;
  for (std::size_t v : s) {
    index[v] = k++;
    if (ground_.has_labels()) labels.push_back(ground_.labels()[v]);
  }
  Graph h(GroundSet(k, std::move(labels)));
  for (std::size_t u : s) {
    for (std::size_t v : adj_[u] & s) {
      if (v > u) h.add_edge(index[u], index[v]);
    }
  }
  return h;
}

Graph Graph::relabel(const std::vector<std::size_t>& perm) const {
  Graph h{GroundSet(size())};
  for (const auto& [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph parse_graph6(std::string_view text) {
  auto bad = [](std::size_t offset, const std::string& what) {
    return Error(ErrorCode::kMalformedGraph6, what + " at byte " + std::to_string(offset));
  };
  std::size_t start = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) start = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.size() <= start) throw bad(start, "missing vertex count");
  const unsigned char first = static_cast<unsigned char>(text[start]);
  if (first == 126) throw bad(start, "long form (n > 62) is not supported");
  if (first < 63 || first > 126) throw bad(start, "invalid character");
  const std::size_t n = first - 63;
  if (n == 0) throw bad(start, "empty graph");
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  const std::size_t expected = start + 1 + bytes;
  if (text.size() < expected) throw bad(text.size(), "truncated adjacency data");
  if (text.size() > expected) throw bad(expected, "trailing data");

  Graph g(GroundSet{n});
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const std::size_t offset = start + 1 + k / 6;
      const unsigned char c = static_cast<unsigned char>(text[offset]);
      if (c < 63 || c > 126) throw bad(offset, "invalid character");
      if (((c - 63) >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const std::size_t offset = expected - 1;
    const unsigned char c = static_cast<unsigned char>(text[offset]);
    if (c < 63 || c > 126) throw bad(offset, "invalid character");
    if (((c - 63) & ((1U << (6 - bits % 6)) - 1)) != 0) throw bad(offset, "nonzero padding");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 62) throw Error(ErrorCode::kGroundTooLarge, "graph6 short form needs n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  unsigned value = 0;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      value = (value << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (k % 6 == 5) {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
      }
    }
  }
  if (k % 6 != 0) out.push_back(static_cast<char>((value << (6 - k % 6)) + 63));
  return out;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.size()), d_(n_ * n_, kUnreachable) {
  for (std::size_t s = 0; s < n_; ++s) {
    int* row = &d_[s * n_];
    row[s] = 0;
    Subset seen = Subset::singleton(s);
    Subset frontier = seen;
    for (int dist = 1; !frontier.empty(); ++dist) {
      Subset next;
      for (std::size_t v : frontier) next |= g.neighbors(v);
      next -= seen;
      for (std::size_t v : next) row[v] = dist;
      seen |= next;
      frontier = next;
    }
  }
}

Subset reach_within(const Graph& g, std::size_t start, Subset allowed) {
  Subset seen = Subset::singleton(start);
  Subset frontier = seen;
  while (!frontier.empty()) {
    Subset next;
    for (std::size_t v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool induces_connected(const Graph& g, Subset s) {
  return !s.empty() && reach_within(g, s.min(), s) == s;
}

bool is_connected(const Graph& g) { return induces_connected(g, g.vertices()); }

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
}

std::size_t BlockDecomposition::node_of(std::size_t v) const { return vertex_node.at(v); }

std::vector<std::size_t> BlockDecomposition::tree_path(std::size_t u, std::size_t v) const {
  const std::size_t from = node_of(u), to = node_of(v);
  std::vector<std::size_t> parent(tree.size(), tree.size());
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    if (a == to) break;
    for (std::size_t b : tree[a]) {
      if (parent[b] == tree.size()) {
        parent[b] = a;
        queue.push_back(b);
      }
    }
  }
  if (parent[to] == tree.size()) {
    throw Error(ErrorCode::kDisconnected, "vertices lie in different components");
  }
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

BlockDecomposition blocks(const Graph& g) {
  const std::size_t n = g.size();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  int clock = 0;

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent) {
    disc[v] = low[v] = clock++;
    for (std::size_t w : g.neighbors(v)) {
      if (disc[w] < 0) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          Subset block;
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e == Edge{v, w}) break;
          }
          out.blocks.push_back(block);
        }
      } else if (w != parent && disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] >= 0) continue;
    if (g.degree(v) == 0) {
      disc[v] = clock++;
      out.blocks.push_back(Subset::singleton(v));
      continue;
    }
    dfs(v, n);
  }
  std::sort(out.blocks.begin(), out.blocks.end(), [](Subset a, Subset b) {
    return a.min() != b.min() ? a.min() < b.min() : a.bits() < b.bits();
  });

  std::vector<std::size_t> count(n, 0);
  for (Subset b : out.blocks) {
    for (std::size_t v : b) ++count[v];
  }
  const std::size_t nb = out.blocks.size();
  out.vertex_node.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (count[v] >= 2) {
      out.cut_vertices.insert(v);
      out.vertex_node[v] = nb + out.cut_vertex_of_node.size();
      out.cut_vertex_of_node.push_back(v);
    }
  }
  out.tree.assign(nb + out.cut_vertex_of_node.size(), {});
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t v : out.blocks[b]) {
      if (out.cut_vertices.contains(v)) {
        out.tree[b].push_back(out.vertex_node[v]);
        out.tree[out.vertex_node[v]].push_back(b);
      } else {
        out.vertex_node[v] = b;
      }
    }
  }
  return out;
}

}  // namespace transit
