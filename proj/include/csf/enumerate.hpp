#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csf/canonical.hpp"
#include "csf/closed_forms.hpp"
#include "csf/expansion.hpp"
#include "csf/graph.hpp"
#include "csf/json_io.hpp"
#include "csf/star_engine.hpp"

namespace csf {

inline constexpr int kMaxUnicyclicOrder = 14;
inline constexpr int kMaxConnectedOrder = 9;

/// One representative per isomorphism class of connected unicyclic graphs on
/// n vertices with cycle length c (every c when omitted). 3 <= c <= n <= 14.
std::vector<Graph> enumerate_unicyclic(int n, std::optional<int> c = std::nullopt);
void for_each_unicyclic(int n, std::optional<int> c, const std::function<void(const Graph&)>& visit);

/// All connected graphs on n <= 9 vertices up to isomorphism, by vertex addition.
std::vector<Graph> enumerate_connected(int n);
/// All trees on n vertices up to isomorphism, by leaf addition.
std::vector<Graph> enumerate_trees(int n);

/// SHA-256 hex digest of the compact JSON emission of x.
std::string expansion_fingerprint(const StarExpansion& x);

struct CollisionClass {
  std::string fingerprint;
  StarExpansion expansion;
  std::vector<Graph> graphs;
  std::vector<CanonicalCode> codes;
};

struct CollisionReport {
  int n = 0;
  int c = 0;
  long graph_count = 0;
  /// Unordered pairs of non-isomorphic graphs with equal CSF.
  long pair_count = 0;
  /// Only classes with at least two graphs, ordered by first appearance.
  std::vector<CollisionClass> classes;
};

struct SearchOptions {
  int jobs = 1;
  /// Fingerprint cache directory; falls back to $CSF_CACHE_DIR, none if unset.
  std::optional<std::filesystem::path> cache_dir;
  /// Null uses the global expansion cache.
  ExpansionCache* cache = nullptr;
};

CollisionReport collision_search(int n, int c, const SearchOptions& options = {});
Json collision_report_to_json(const CollisionReport& report);

struct TheoremCheck {
  std::string name;
  long passed = 0;
  long failed = 0;
  /// graph6 of the first failure; graphs are visited by increasing n.
  std::optional<std::string> counterexample;
  std::string detail;
};

struct VerifyReport {
  int n_max = 0;
  long graphs_checked = 0;
  std::vector<TheoremCheck> checks;
  bool all_passed() const;
  const TheoremCheck& check(std::string_view name) const;
};

struct VerifyOptions {
  /// Replaces the hook formula under test; the default is unicyclic_hook_coeff.
  std::function<Integer(const HookParams&)> hook_formula;
  int jobs = 1;
  ExpansionCache* cache = nullptr;
};

/// Runs every structural theorem over all connected unicyclic graphs with
/// 3 <= n <= n_max (n_max <= 12).
VerifyReport verify_theorems(int n_max, const VerifyOptions& options = {});
Json verify_report_to_json(const VerifyReport& report);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace csf
