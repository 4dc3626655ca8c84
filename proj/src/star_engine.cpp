#include "csf/star_engine.hpp"

#include <array>

namespace csf {

std::optional<EdgeRef> choose_internal_edge(const Graph& g, EdgePolicy policy) {
  auto internal = internal_edges(g);
  if (internal.empty()) return std::nullopt;
  switch (policy) {
    case EdgePolicy::LowestIndex:
      return internal.front();
    case EdgePolicy::HighestIndex:
      return internal.back();
    case EdgePolicy::Canonical: {
      auto lab = canonical_labeling(g);
      auto key = [&](const EdgeRef& e) {
        return EdgeRef(lab.label[static_cast<std::size_t>(e.u)], lab.label[static_cast<std::size_t>(e.v)]);
      };
      return *std::min_element(internal.begin(), internal.end(),
                               [&](const EdgeRef& a, const EdgeRef& b) { return key(a) < key(b); });
    }
  }
  return std::nullopt;
}

ExpansionCache& global_expansion_cache() {
  static ExpansionCache cache;
  return cache;
}

namespace {

struct StarOps {
  using Value = StarExpansion;
  static Value unit() { return StarExpansion::basis_element(Partition()); }
  static Value star(int k) { return StarExpansion::basis_element(Partition::single(k)); }
  static Value product(const Value& a, const Value& b) { return csf::product(a, b); }
  static Value combine(const Value& del, const Value& dot, const Value& leaf) { return del - dot + leaf; }
};

struct TallyOps {
  using Value = SignedTally;
  static Value unit() {
    SignedTally out;
    out.counts[Partition()] = {1, 0};
    return out;
  }
  static Value star(int k) {
    SignedTally out;
    out.n = k;
    out.counts[Partition::single(k)] = {1, 0};
    return out;
  }
  static Value product(const Value& a, const Value& b) {
    SignedTally out;
    out.n = a.n + b.n;
    for (const auto& [pa, ca] : a.counts) {
      for (const auto& [pb, cb] : b.counts) {
        auto& slot = out.counts[sort_concat(pa, pb)];
        slot.first += ca.first * cb.first + ca.second * cb.second;
        slot.second += ca.first * cb.second + ca.second * cb.first;
      }
    }
    return out;
  }
  static Value combine(const Value& del, const Value& dot, const Value& leaf) {
    SignedTally out = del;
    for (const auto& [p, c] : dot.counts) {
      auto& slot = out.counts[p];
      slot.first += c.second;
      slot.second += c.first;
    }
    for (const auto& [p, c] : leaf.counts) {
      auto& slot = out.counts[p];
      slot.first += c.first;
      slot.second += c.second;
    }
    return out;
  }
};

// A connected piece of a DNC child: either a star (no internal edges) or a
// canonical graph whose value lives in the memo table.
struct Piece {
  int star_size = 0;
  CanonicalCode key;
  Graph graph;
};

std::vector<Piece> split_pieces(const Graph& g) {
  std::vector<Piece> out;
  for (const auto& comp : connected_components(g)) {
    Graph h = induced_subgraph(g, comp);
    if (internal_edges(h).empty()) {
      out.push_back({h.vertex_count(), {}, {}});
      continue;
    }
    auto lab = canonical_labeling(h);
    out.push_back({0, std::move(lab.code), relabel(h, lab.label)});
  }
  return out;
}

template <class Ops>
class MemoEngine {
 public:
  using Value = typename Ops::Value;

  MemoEngine(EdgePolicy policy, MemoTable<Value>& table) : policy_(policy), table_(table) {}

  Value expand(const Graph& g) {
    Value out = Ops::unit();
    for (auto& piece : split_pieces(g)) out = Ops::product(out, value_of(piece));
    return out;
  }

 private:
  struct Frame {
    CanonicalCode key;
    Graph graph;
    bool prepared = false;
    std::array<std::vector<Piece>, 3> children;
  };

  Value value_of(const Piece& piece) {
    if (piece.key.empty()) return Ops::star(piece.star_size);
    if (auto hit = table_.find(piece.key)) return *hit;
    evaluate(piece);
    return *table_.find(piece.key);
  }

  void evaluate(const Piece& root) {
    std::vector<Frame> stack;
    stack.push_back({root.key, root.graph, false, {}});
    while (!stack.empty()) {
      std::size_t top = stack.size() - 1;
      if (!stack[top].prepared) {
        const Graph& h = stack[top].graph;
        // Frames hold canonical graphs, so the lowest edge is the canonical choice.
        EdgeRef e = *choose_internal_edge(h, policy_ == EdgePolicy::Canonical ? EdgePolicy::LowestIndex : policy_);
        stack[top].children[0] = split_pieces(delete_edge(h, e));
        stack[top].children[1] = split_pieces(dot_contract(h, e));
        stack[top].children[2] = split_pieces(leaf_contract(h, e).graph);
        stack[top].prepared = true;
      }
      const Piece* pending = nullptr;
      for (const auto& child : stack[top].children) {
        for (const auto& piece : child) {
          if (!piece.key.empty() && !table_.contains(piece.key)) {
            pending = &piece;
            break;
          }
        }
        if (pending) break;
      }
      if (pending) {
        Frame next{pending->key, pending->graph, false, {}};
        stack.push_back(std::move(next));
        continue;
      }
      std::array<Value, 3> parts;
      for (std::size_t i = 0; i < 3; ++i) {
        Value acc = Ops::unit();
        for (const auto& piece : stack[top].children[i]) acc = Ops::product(acc, value_of(piece));
        parts[i] = std::move(acc);
      }
      table_.insert(stack[top].key, Ops::combine(parts[0], parts[1], parts[2]));
      stack.pop_back();
    }
  }

  EdgePolicy policy_;
  MemoTable<Value>& table_;
};

int parity_sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

StarExpansion star_expand(const Graph& g, const StarOptions& options) {
  if (!options.memoize) {
    StarExpansion out(g.vertex_count());
    for (const auto& leaf : dnc_leaves(g, options.policy)) out.add(leaf.partition, leaf.sign);
    return out;
  }
  ExpansionCache local;
  ExpansionCache* table = options.cache;
  if (!table) table = options.policy == EdgePolicy::Canonical ? &global_expansion_cache() : &local;
  return MemoEngine<StarOps>(options.policy, *table).expand(g);
}

std::vector<DncNodeResult> dnc_leaves(const Graph& g, EdgePolicy policy) {
  std::vector<DncNodeResult> out;
  int base = isolated_count(g);
  std::vector<Graph> stack{g};
  while (!stack.empty()) {
    Graph h = std::move(stack.back());
    stack.pop_back();
    auto e = choose_internal_edge(h, policy);
    if (!e) {
      out.push_back({component_partition(h), parity_sign(isolated_count(h) - base)});
      continue;
    }
    stack.push_back(leaf_contract(h, *e).graph);
    stack.push_back(dot_contract(h, *e));
    stack.push_back(delete_edge(h, *e));
  }
  return out;
}

StarExpansion SignedTally::net() const {
  StarExpansion out(n);
  for (const auto& [p, c] : counts) out.add(p, c.first - c.second);
  return out;
}

bool SignedTally::cancellation_free() const { return mixed().empty(); }

std::vector<Partition> SignedTally::mixed() const {
  std::vector<Partition> out;
  for (const auto& [p, c] : counts) {
    if (c.first != 0 && c.second != 0) out.push_back(p);
  }
  return out;
}

SignedTally star_tally(const Graph& g, EdgePolicy policy) {
  MemoTable<SignedTally> table;
  SignedTally out = MemoEngine<TallyOps>(policy, table).expand(g);
  out.n = g.vertex_count();
  return out;
}

}  // namespace csf
