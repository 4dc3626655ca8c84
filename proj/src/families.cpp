#include "csf/families.hpp"

#include <string>

#include "csf/errors.hpp"

namespace csf::families {

Graph path(int n) {
  if (n < 1) throw DomainError("path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph pan(int n) {
  if (n < 4) throw DomainError("pan needs n >= 4");
  Graph g(n);
  for (int i = 0; i < n - 1; ++i) g.add_edge(i, (i + 1) % (n - 1));
  g.add_edge(0, n - 1);
  return g;
}

Graph paw() { return pan(4); }

Graph star(int n) {
  if (n < 1) throw DomainError("star needs n >= 1");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph cuttlefish(int c, int t) {
  if (c < 3 || t < 0) throw DomainError("cuttlefish needs c >= 3 and t >= 0");
  Graph g(c + t);
  for (int i = 0; i < c; ++i) g.add_edge(i, (i + 1) % c);
  for (int j = 0; j < t; ++j) g.add_edge(0, c + j);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph bicyclic_type_one(int s, int t, int ell) {
  if (s < 3 || t < 3 || ell < 1) throw DomainError("type-I bicyclic needs s, t >= 3 and ell >= 1");
  int n = s + t + ell - 2;
  Graph g(n);
  // First cycle on 0..s-1; the joining path runs from vertex 0 to vertex
  // s + ell - 2, which is the first vertex of the second cycle.
  for (int i = 0; i < s; ++i) g.add_edge(i, (i + 1) % s);
  int prev = 0;
  for (int j = 0; j < ell - 1; ++j) {
    int v = s + j;
    g.add_edge(prev, v);
    prev = v;
  }
  std::vector<int> second;
  second.push_back(prev);
  for (int j = 0; j < t - 1; ++j) second.push_back(s + ell - 1 + j);
  for (int i = 0; i < t; ++i) g.add_edge(second[static_cast<std::size_t>(i)], second[static_cast<std::size_t>((i + 1) % t)]);
  return g;
}

Graph bicyclic_type_two(int s, int t, int ell) {
  int k = s - ell;
  int m = t - ell;
  if (s < 3 || t < 3 || ell < 1 || k < 1 || m < 1) {
    throw DomainError("type-II bicyclic needs s, t >= 3 and 1 <= ell < min(s, t)");
  }
  if ((k == 1) + (ell == 1) + (m == 1) > 1) {
    throw DomainError("type-II bicyclic with s=" + std::to_string(s) + ", t=" + std::to_string(t) +
                      ", ell=" + std::to_string(ell) + " is not simple");
  }
  int n = k + ell + m - 1;
  Graph g(n);
  // Vertices 0 and 1 are the branch points; three internally disjoint paths
  // of lengths ell, k, m join them.
  int next = 2;
  for (int len : {ell, k, m}) {
    int prev = 0;
    for (int j = 0; j < len - 1; ++j) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

}  // namespace csf::families
