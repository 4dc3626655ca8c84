#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "csf/canonical.hpp"
#include "csf/expansion.hpp"
#include "csf/graph.hpp"

namespace csf {

/// Which internal edge the recursion acts on.
///   Canonical: smallest edge in the canonical labelling.
///   LowestIndex / HighestIndex: smallest / largest (u, v) in the graph's own
///   labelling (in memoized runs, the labelling of the canonical representative).
enum class EdgePolicy { Canonical, LowestIndex, HighestIndex };

std::optional<EdgeRef> choose_internal_edge(const Graph& g, EdgePolicy policy);

/// Thread-safe memo table keyed by canonical code of a connected graph.
template <class Value>
class MemoTable {
 public:
  std::optional<Value> find(const CanonicalCode& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const CanonicalCode& key) const {
    std::shared_lock lock(mutex_);
    return map_.contains(key);
  }
  void insert(const CanonicalCode& key, Value value) {
    std::unique_lock lock(mutex_);
    map_.insert_or_assign(key, std::move(value));
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<CanonicalCode, Value> map_;
};

using ExpansionCache = MemoTable<StarExpansion>;

/// Process-wide cache used by default for the Canonical policy.
ExpansionCache& global_expansion_cache();

struct StarOptions {
  bool memoize = true;
  EdgePolicy policy = EdgePolicy::Canonical;
  /// Null selects the global cache for the Canonical policy and a private
  /// per-call cache for the other policies.
  ExpansionCache* cache = nullptr;
};

/// Exact star-basis expansion of X_G by deletion-near-contraction.
StarExpansion star_expand(const Graph& g, const StarOptions& options = {});

/// One leaf of the DNC tree: the star forest's partition and its sign.
struct DncNodeResult {
  Partition partition;
  int sign = 1;
};

/// Walks the DNC tree of g without memoization and lists every leaf.
std::vector<DncNodeResult> dnc_leaves(const Graph& g, EdgePolicy policy = EdgePolicy::LowestIndex);

/// DNC-tree leaves counted per partition and sign.
struct SignedTally {
  int n = 0;
  std::map<Partition, std::pair<Integer, Integer>> counts;  // (positive, negative)

  StarExpansion net() const;
  /// True when no partition receives contributions of both signs.
  bool cancellation_free() const;
  /// Partitions that receive both signs.
  std::vector<Partition> mixed() const;
};

/// Memoized over connected components, using the componentwise DNC tree.
SignedTally star_tally(const Graph& g, EdgePolicy policy = EdgePolicy::Canonical);

}  // namespace csf
