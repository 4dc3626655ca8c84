#include "csf/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "csf/errors.hpp"

namespace csf {

EdgeRef::EdgeRef(int a, int b) {
  if (a == b) throw DomainError("edge endpoints must be distinct (got loop at " + std::to_string(a) + ")");
  if (a < 0 || b < 0) throw DomainError("negative vertex index");
  u = std::min(a, b);
  v = std::max(a, b);
}

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw TooLargeError("vertex count must be in [0, " + std::to_string(kMaxVertices) + "], got " +
                        std::to_string(vertex_count));
  }
  adj_.assign(static_cast<std::size_t>(n_), 0);
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges) : Graph(vertex_count) {
  for (auto [a, b] : edges) add_edge(a, b);
}

Graph::Graph(int vertex_count, std::span<const EdgeRef> edges) : Graph(vertex_count) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (VertexMask row : adj_) twice += std::popcount(row);
  return twice / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(n_) +
                      " vertices");
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

std::vector<EdgeRef> Graph::edges() const {
  std::vector<EdgeRef> out;
  for (int u = 0; u < n_; ++u) {
    VertexMask higher = adj_[static_cast<std::size_t>(u)] & ~((bit(u) << 1) - 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loops are not allowed (vertex " + std::to_string(u) + ")");
  if (has_edge(u, v)) return false;
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
  return true;
}

bool Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return false;
  adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  adj_[static_cast<std::size_t>(v)] &= ~bit(u);
  return true;
}

namespace {

void require_edge(const Graph& g, const EdgeRef& e, const char* op) {
  if (!g.has_edge(e)) {
    throw MissingEdgeError(std::string(op) + ": edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           "} is not in the graph");
  }
}

// Merge e.v into e.u, dropping duplicate edges; e.v is left isolated.
Graph merge_endpoints(const Graph& g, const EdgeRef& e) {
  Graph out = g;
  VertexMask nv = g.neighbors(e.v) & ~bit(e.u);
  while (nv) {
    int w = std::countr_zero(nv);
    nv &= nv - 1;
    out.remove_edge(e.v, w);
    out.add_edge(e.u, w);
  }
  out.remove_edge(e.u, e.v);
  return out;
}

}  // namespace

Graph delete_edge(const Graph& g, const EdgeRef& e) {
  require_edge(g, e, "delete_edge");
  Graph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

LeafContraction leaf_contract(const Graph& g, const EdgeRef& e) {
  require_edge(g, e, "leaf_contract");
  Graph out = merge_endpoints(g, e);
  out.add_edge(e.u, e.v);
  return {std::move(out), e};
}

Graph dot_contract(const Graph& g, const EdgeRef& e) {
  require_edge(g, e, "dot_contract");
  return merge_endpoints(g, e);
}

bool is_internal_edge(const Graph& g, const EdgeRef& e) {
  return g.has_edge(e) && g.degree(e.u) >= 2 && g.degree(e.v) >= 2;
}

std::vector<EdgeRef> internal_edges(const Graph& g) {
  std::vector<EdgeRef> out;
  for (const auto& e : g.edges()) {
    if (g.degree(e.u) >= 2 && g.degree(e.v) >= 2) out.push_back(e);
  }
  return out;
}

Graph strip_internal_edges(const Graph& g) {
  Graph out = g;
  for (const auto& e : internal_edges(g)) out.remove_edge(e.u, e.v);
  return out;
}

Partition leaf_component_partition(const Graph& g) { return component_partition(strip_internal_edges(g)); }

VertexClassification classify_vertices(const Graph& g) {
  VertexClassification out;
  VertexMask leaf_mask = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) {
      out.leaves.push_back(v);
      leaf_mask |= bit(v);
    } else if (g.degree(v) >= 2) {
      out.internal.push_back(v);
    }
  }
  for (int v : out.internal) {
    if ((g.neighbors(v) & leaf_mask) == 0) out.deep.push_back(v);
  }
  if (auto cycle = unique_cycle(g)) {
    VertexMask on_cycle = 0;
    for (int v : *cycle) on_cycle |= bit(v);
    for (int v : out.deep) {
      if ((on_cycle & bit(v)) && g.degree(v) >= 3) out.sprouts.push_back(v);
    }
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  VertexMask unseen = g.all_vertices();
  while (unseen) {
    int start = std::countr_zero(unseen);
    VertexMask comp = bit(start);
    VertexMask frontier = comp;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      VertexMask fresh = g.neighbors(v) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    unseen &= ~comp;
    std::vector<int> members;
    while (comp) {
      members.push_back(std::countr_zero(comp));
      comp &= comp - 1;
    }
    out.push_back(std::move(members));
  }
  return out;
}

Partition component_partition(const Graph& g) {
  std::vector<int> sizes;
  for (const auto& comp : connected_components(g)) sizes.push_back(static_cast<int>(comp.size()));
  return Partition::from_sequence(sizes);
}

int isolated_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v) count += g.degree(v) == 0 ? 1 : 0;
  return count;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_connected_unicyclic(const Graph& g) {
  return g.vertex_count() >= 3 && g.edge_count() == g.vertex_count() && is_connected(g);
}

std::optional<std::vector<int>> unique_cycle(const Graph& g) {
  if (!is_connected_unicyclic(g)) return std::nullopt;
  VertexMask alive = g.all_vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    VertexMask scan = alive;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      if (std::popcount(g.neighbors(v) & alive) <= 1) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  std::vector<int> cycle;
  int start = std::countr_zero(alive);
  int prev = -1;
  int cur = start;
  do {
    cycle.push_back(cur);
    VertexMask next = g.neighbors(cur) & alive;
    if (prev >= 0) next &= ~bit(prev);
    int nxt = std::countr_zero(next);
    prev = cur;
    cur = nxt;
  } while (cur != start);
  return cycle;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) throw DomainError("relabel: permutation size mismatch");
  Graph out(g.vertex_count());
  for (const auto& e : g.edges()) out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.vertex_count() + b.vertex_count());
  for (const auto& e : a.edges()) out.add_edge(e.u, e.v);
  for (const auto& e : b.edges()) out.add_edge(e.u + a.vertex_count(), e.v + a.vertex_count());
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace csf
