#include "csf/unicyclic.hpp"

#include <algorithm>

#include "csf/errors.hpp"

namespace csf {

std::string rooted_tree_code(const Graph& g, int root, VertexMask blocked) {
  std::vector<std::string> kids;
  VertexMask nb = g.neighbors(root) & ~blocked;
  VertexMask now_blocked = blocked | bit(root);
  for (; nb; nb &= nb - 1) kids.push_back(rooted_tree_code(g, std::countr_zero(nb), now_blocked));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ')';
  return out;
}

namespace {

void require_unicyclic(const Graph& g, const char* op) {
  if (!is_connected_unicyclic(g)) {
    throw NotUnicyclicError(std::string(op) + ": graph is not connected unicyclic");
  }
}

VertexMask collect_tree(const Graph& g, int root, VertexMask cycle_mask, std::vector<int>& out) {
  VertexMask seen = bit(root);
  std::vector<int> queue{root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexMask nb = g.neighbors(queue[i]) & ~seen & ~cycle_mask;
    for (; nb; nb &= nb - 1) {
      int w = std::countr_zero(nb);
      seen |= bit(w);
      queue.push_back(w);
    }
  }
  out = queue;
  return seen;
}

}  // namespace

UnicyclicDecomposition unicyclic_decompose(const Graph& g) {
  require_unicyclic(g, "unicyclic_decompose");
  std::vector<int> raw = *unique_cycle(g);
  int c = static_cast<int>(raw.size());
  VertexMask cycle_mask = 0;
  for (int v : raw) cycle_mask |= bit(v);

  std::vector<std::pair<int, std::string>> shape(static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) {
    int v = raw[static_cast<std::size_t>(i)];
    int leaves = 0;
    for (VertexMask nb = g.neighbors(v); nb; nb &= nb - 1) leaves += g.degree(std::countr_zero(nb)) == 1;
    shape[static_cast<std::size_t>(i)] = {1 + leaves, rooted_tree_code(g, v, cycle_mask & ~bit(v))};
  }
  std::vector<int> best_order;
  std::vector<std::pair<int, std::string>> best_seq;
  for (int dir : {1, -1}) {
    for (int start = 0; start < c; ++start) {
      std::vector<int> order;
      std::vector<std::pair<int, std::string>> seq;
      for (int j = 0; j < c; ++j) {
        int idx = ((start + dir * j) % c + c) % c;
        order.push_back(idx);
        seq.push_back(shape[static_cast<std::size_t>(idx)]);
      }
      if (best_order.empty() || seq < best_seq) {
        best_seq = std::move(seq);
        best_order = std::move(order);
      }
    }
  }

  Graph stripped = strip_internal_edges(g);
  auto leaf_components = connected_components(stripped);

  UnicyclicDecomposition d;
  d.n = g.vertex_count();
  for (int idx : best_order) {
    int v = raw[static_cast<std::size_t>(idx)];
    d.cycle.push_back(v);
    std::vector<int> members;
    VertexMask tree_mask = collect_tree(g, v, cycle_mask, members);
    d.trees.push_back(members);
    d.lambda.push_back(shape[static_cast<std::size_t>(idx)].first);
    std::vector<int> sizes;
    for (const auto& comp : leaf_components) {
      VertexMask m = 0;
      for (int w : comp) m |= bit(w);
      if ((m & tree_mask) == m && !(m & bit(v))) sizes.push_back(static_cast<int>(comp.size()));
    }
    Partition block = Partition::from_sequence(sizes);
    d.mu.insert(d.mu.end(), block.parts().begin(), block.parts().end());
    d.mu_blocks.push_back(std::move(block));
    if (members.size() > 1) ++d.r;
  }
  return d;
}

DeepVertexProfile deep_vertex_profile(const Graph& g) {
  require_unicyclic(g, "deep_vertex_profile");
  auto cls = classify_vertices(g);
  DeepVertexProfile out;
  for (int v : cls.deep) {
    bool sprout = std::find(cls.sprouts.begin(), cls.sprouts.end(), v) != cls.sprouts.end();
    (sprout ? out.sprout_degrees : out.nonsprout_deep_degrees).push_back(g.degree(v));
  }
  return out;
}

std::vector<int> deep_degrees(const Graph& g) {
  std::vector<int> out;
  for (int v : classify_vertices(g).deep) out.push_back(g.degree(v));
  return out;
}

RootedCutProfile rooted_cut_profile(const Graph& g) {
  auto d = unicyclic_decompose(g);
  if (d.r != 1) throw DomainError("rooted_cut_profile needs exactly one non-trivial tree");
  int idx = 0;
  while (d.trees[static_cast<std::size_t>(idx)].size() == 1) ++idx;
  int root = d.cycle[static_cast<std::size_t>(idx)];
  int next = d.cycle[static_cast<std::size_t>((idx + 1) % d.c())];
  Graph cut = delete_edge(g, EdgeRef(root, next));
  auto cls = classify_vertices(g);
  RootedCutProfile out;
  out.c = d.c();
  out.root_is_sprout = std::find(cls.sprouts.begin(), cls.sprouts.end(), root) != cls.sprouts.end();
  if (out.root_is_sprout) out.deep_degrees.push_back(cut.degree(root));
  for (int v : classify_vertices(cut).deep) {
    if (out.root_is_sprout && v == root) continue;
    out.deep_degrees.push_back(cut.degree(v));
  }
  return out;
}

HookParams hook_params(const Graph& g, int m1) {
  auto d = unicyclic_decompose(g);
  return {g.vertex_count(), d.c(), static_cast<int>(internal_edges(g).size()), d.r, m1};
}

bool is_cuttlefish(const Graph& g) {
  if (!is_connected_unicyclic(g)) return false;
  auto d = unicyclic_decompose(g);
  if (d.r != 1) return false;
  int t = g.vertex_count() - d.c();
  for (std::size_t i = 0; i < d.trees.size(); ++i) {
    if (d.trees[i].size() > 1) return d.lambda[i] == t + 1;
  }
  return false;
}

}  // namespace csf
