#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "csf/partition.hpp"

namespace csf {

/// Adjacency rows are 64-bit masks, which bounds the vertex count.
inline constexpr int kMaxVertices = 64;

using VertexMask = std::uint64_t;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

/// An unordered pair of distinct vertices, stored with u < v.
struct EdgeRef {
  int u = 0;
  int v = 0;

  EdgeRef() = default;
  EdgeRef(int a, int b);

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Simple undirected graph on vertices 0..vertex_count-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges);
  Graph(int vertex_count, std::span<const EdgeRef> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept;
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
  VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexMask all_vertices() const noexcept { return n_ == 64 ? ~VertexMask{0} : bit(n_) - 1; }

  bool has_edge(int u, int v) const;
  bool has_edge(const EdgeRef& e) const { return has_edge(e.u, e.v); }

  /// All edges sorted by (u, v).
  std::vector<EdgeRef> edges() const;

  /// Returns false when the edge was already present. Loops are rejected.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexMask> adj_;
};

/// Result of a leaf-contraction: the new graph and its new leaf-edge.
struct LeafContraction {
  Graph graph;
  EdgeRef leaf_edge;
};

// Deletion-near-contraction edge operations. In both contractions the merged
// vertex keeps the smaller endpoint index and the freed index becomes the new
// leaf (leaf_contract) or the new isolated vertex (dot_contract), so the vertex
// count never changes. Each throws MissingEdgeError when e is absent.
Graph delete_edge(const Graph& g, const EdgeRef& e);
LeafContraction leaf_contract(const Graph& g, const EdgeRef& e);
Graph dot_contract(const Graph& g, const EdgeRef& e);

bool is_internal_edge(const Graph& g, const EdgeRef& e);
std::vector<EdgeRef> internal_edges(const Graph& g);
/// G minus all of its internal edges; always a star forest.
Graph strip_internal_edges(const Graph& g);
Partition leaf_component_partition(const Graph& g);

struct VertexClassification {
  std::vector<int> leaves;
  std::vector<int> internal;
  std::vector<int> deep;
  /// Deep cycle vertices of degree >= 3; filled only for connected unicyclic graphs.
  std::vector<int> sprouts;
};

VertexClassification classify_vertices(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);
Partition component_partition(const Graph& g);
int isolated_count(const Graph& g);
bool is_connected(const Graph& g);

/// |E| == |V| and connected.
bool is_connected_unicyclic(const Graph& g);
/// The unique cycle of a connected unicyclic graph as an ordered vertex walk,
/// found by stripping leaves; std::nullopt for any other graph.
std::optional<std::vector<int>> unique_cycle(const Graph& g);

/// perm[v] is the new index of vertex v.
Graph relabel(const Graph& g, std::span<const int> perm);
/// Vertices are renumbered 0..k-1 in the order given.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Degrees sorted non-increasing.
std::vector<int> degree_sequence(const Graph& g);

}  // namespace csf
