#pragma once

#include <vector>

#include "csf/expansion.hpp"
#include "csf/integer.hpp"
#include "csf/partition.hpp"
#include "csf/unicyclic.hpp"

namespace csf {

/// (-1)^m1 C(k, m1): hook coefficient of a tree with k internal edges.
Integer tree_hook_coeff(int k, int m1);

/// (-1)^m1 [(r-1) C(k-2, m1-1) + (c-1) C(k-2, m1)].
Integer unicyclic_hook_coeff(const HookParams& p);

/// Largest m1 with a nonzero hook coefficient and that coefficient.
struct LongestHook {
  int m1 = 0;
  Integer coefficient;
};
/// k - 2 when r <= 1, else k - 1.
LongestHook longest_hook(const HookParams& p);

Integer path_coefficient(int n, const Partition& lambda);
Integer cycle_coefficient(int n, const Partition& lambda);
Integer pan_coefficient(int n, const Partition& lambda);

/// Full expansions over every partition of n.
StarExpansion path_csf(int n);   // n >= 4
StarExpansion cycle_csf(int n);  // n >= 3
StarExpansion pan_csf(int n);    // n >= 4

/// r = 0: (2, 1^(n-2)); r = 1: the two neighbours of the cut edge merge into
/// a part 2; r >= 2: sort(lambda . mu).
Partition leading_partition_unicyclic(const UnicyclicDecomposition& d);

enum class LeafCase { SingleTree, MultipleTrees };

/// |lead| - l(lead) - 1 for a single non-trivial tree, |lead| - l(lead) otherwise.
int num_leaves_from_leading(const Partition& lead, LeafCase which);

/// (-1)^p prod (d_i - 1).
Integer lead_coeff_tree(const std::vector<int>& deep_degrees);

/// Degrees are those of the deep vertices of T'; the root comes first when it is a sprout.
Integer lead_coeff_unicyclic_r1(int c, const std::vector<int>& deep_degrees_of_cut, bool root_is_sprout);

/// DomainError when r < 2 or r < s.
Integer lead_coeff_unicyclic_rge2(const DeepVertexProfile& profile, int r);

/// (-1)^(n-2).
Integer lead_coeff_cycle(int n);

/// (t + 1, 2, 1^(c-3)).
Partition cuttlefish_leading(int c, int t);

enum class BicyclicShape { TypeOne, TypeTwo };

/// (s-1)(t-1), less 2 C(ell, 2) for two cycles sharing ell edges.
Integer bicyclic_cn(BicyclicShape shape, int s, int t, int ell);

/// e_j of the given values by direct expansion.
Integer elementary_symmetric(const std::vector<int>& values, int j);

}  // namespace csf
