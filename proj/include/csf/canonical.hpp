#pragma once

#include <string>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

/// Opaque byte string; equal iff the graphs are isomorphic.
using CanonicalCode = std::string;

struct CanonicalLabeling {
  CanonicalCode code;
  /// label[v] is the position of v in the canonical order.
  std::vector<int> label;
};

/// Individualization-refinement with automorphism pruning. The code is the
/// vertex count followed by the adjacency rows in canonical order.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalCode canonical_form(const Graph& g);
/// g relabelled into canonical order; isomorphic graphs give equal results.
Graph canonical_graph(const Graph& g);

std::string code_to_hex(const CanonicalCode& code);
CanonicalCode code_from_hex(std::string_view hex);

}  // namespace csf
