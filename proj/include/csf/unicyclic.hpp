#pragma once

#include <string>
#include <vector>

#include "csf/graph.hpp"
#include "csf/partition.hpp"

namespace csf {

/// A connected unicyclic graph seen as c rooted trees hung on a cycle.
struct UnicyclicDecomposition {
  int n = 0;
  /// v_1..v_c in cycle order.
  std::vector<int> cycle;
  /// trees[i] holds the vertices of T_i, root cycle[i] first.
  std::vector<std::vector<int>> trees;
  /// lambda_i = 1 + number of leaves adjacent to v_i.
  std::vector<int> lambda;
  /// mu^(i): sizes of the leaf components inside T_i that avoid v_i, decreasing.
  std::vector<Partition> mu_blocks;
  /// mu^(1) . ... . mu^(c) as a sequence.
  std::vector<int> mu;
  /// Number of trees with more than one vertex.
  int r = 0;

  int c() const { return static_cast<int>(cycle.size()); }
};

/// Orientation and starting vertex minimise the sequence of (lambda_i, tree
/// shape) over the dihedral group. NotUnicyclicError unless g is connected
/// with |E| == |V|.
UnicyclicDecomposition unicyclic_decompose(const Graph& g);

/// Canonical string of a rooted tree given by its adjacency in g, not
/// crossing the vertices in `blocked`.
std::string rooted_tree_code(const Graph& g, int root, VertexMask blocked);

struct DeepVertexProfile {
  std::vector<int> sprout_degrees;          // b_1..b_s
  std::vector<int> nonsprout_deep_degrees;  // d_1..d_p
  int s() const { return static_cast<int>(sprout_degrees.size()); }
  int p() const { return static_cast<int>(nonsprout_deep_degrees.size()); }
};

/// Sprouts and the remaining deep vertices of a connected unicyclic graph.
DeepVertexProfile deep_vertex_profile(const Graph& g);

/// Deep-vertex degrees of a forest (every deep vertex).
std::vector<int> deep_degrees(const Graph& g);

/// Data for the r = 1 leading coefficient: degrees of the deep vertices of
/// T' = G minus one cycle edge at the root of the non-trivial tree, with the
/// root's T' degree first when the root is a sprout of G.
struct RootedCutProfile {
  int c = 0;
  std::vector<int> deep_degrees;
  bool root_is_sprout = false;
};

RootedCutProfile rooted_cut_profile(const Graph& g);

struct HookParams {
  int n = 0;
  int c = 0;
  int k = 0;
  int r = 0;
  int m1 = 0;
};

/// n, c, k = |internal edges|, r read off a connected unicyclic graph.
HookParams hook_params(const Graph& g, int m1 = 0);

/// The cycle with t leaves on one vertex, t >= 1.
bool is_cuttlefish(const Graph& g);

}  // namespace csf
