#pragma once

#include "csf/expansion.hpp"
#include "csf/graph.hpp"

namespace csf {

/// Subset enumeration is refused above this many edges.
inline constexpr int kPowerSumEdgeGuard = 24;

/// X_G = sum over S subset of E of (-1)^|S| p_lambda(S), by brute force over
/// all 2^|E| subsets. TooLargeError above kPowerSumEdgeGuard edges.
PowerSumExpansion csf_power_sum(const Graph& g);

/// The same expansion via set partitions of V into connected blocks,
/// exponential in |V| instead of |E|. Requires |V| <= 16.
PowerSumExpansion csf_power_sum_blocks(const Graph& g);

/// st_k in the power-sum basis.
PowerSumExpansion star_in_power_sum(int k);

/// Solves sum c_lambda st_lambda = x exactly; NonIntegralError if some c_lambda
/// is not an integer.
StarExpansion to_star_basis(const PowerSumExpansion& x);

}  // namespace csf
