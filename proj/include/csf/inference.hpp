#pragma once

#include <compare>
#include <vector>

#include "csf/expansion.hpp"

namespace csf {

struct KrCandidate {
  int k = 0;
  int r = 0;
  friend auto operator<=>(const KrCandidate&, const KrCandidate&) = default;
};

/// What a star expansion reveals about an unknown connected unicyclic graph.
struct StructuralReport {
  int n = 0;
  int cycle_size = 0;
  bool is_pure_cycle = false;
  /// Number of 1-parts in the longest hook with a nonzero coefficient.
  int longest_hook_m = 0;
  /// Sorted; two entries only in the r in {1, c} ambiguity.
  std::vector<KrCandidate> kr_candidates;
  std::vector<int> leaf_count_candidates;
  bool is_cuttlefish = false;
  Partition leading;
};

/// InconsistentReportError when no connected unicyclic graph could have
/// produced x.
StructuralReport infer(const StarExpansion& x);

/// r = -[(c_(n-1,1) - 1) + (c - 1)(m - 1)], valid when 1 < r < c.
Integer recover_r(int c, const Integer& c_n1_1, int m);

}  // namespace csf
