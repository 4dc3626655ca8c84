#pragma once

#include "csf/graph.hpp"

namespace csf::families {

/// P_n: 0-1-...-(n-1).
Graph path(int n);
/// C_n, n >= 3: edges (i, i+1 mod n).
Graph cycle(int n);
/// C_{n-1} on 0..n-2 plus the leaf n-1 on vertex 0; n >= 4.
Graph pan(int n);
/// The 4-vertex pan.
Graph paw();
/// St_n: center 0 joined to 1..n-1.
Graph star(int n);
/// C_c on 0..c-1 with t leaves on vertex 0.
Graph cuttlefish(int c, int t);
Graph complete(int n);

/// Two cycles C_s and C_t joined by a path on ell vertices whose ends lie on
/// the cycles; ell == 1 glues the cycles at a vertex. n = s + t + ell - 2.
Graph bicyclic_type_one(int s, int t, int ell);
/// Cycles C_s and C_t sharing a path of ell edges (a theta graph with path
/// lengths s-ell, ell, t-ell). n = s + t - ell - 1.
Graph bicyclic_type_two(int s, int t, int ell);

}  // namespace csf::families
