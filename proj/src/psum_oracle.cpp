#include "csf/psum_oracle.hpp"

#include <mutex>
#include <unordered_map>
#include <vector>

namespace csf {

namespace {

// Partition of n encoded as sum over parts of (n+1)^(part-1); exact for n <= 24.
class PartitionKey {
 public:
  explicit PartitionKey(int n) : weights_(static_cast<std::size_t>(n) + 1) {
    unsigned __int128 w = 1;
    for (int s = 1; s <= n; ++s) {
      weights_[static_cast<std::size_t>(s)] = w;
      w *= static_cast<unsigned __int128>(n + 1);
    }
  }
  unsigned __int128 weight(int size) const { return weights_[static_cast<std::size_t>(size)]; }

  Partition decode(unsigned __int128 key, int n) const {
    std::vector<int> parts;
    for (int s = n; s >= 1; --s) {
      unsigned __int128 w = weights_[static_cast<std::size_t>(s)];
      while (key >= w && w != 0) {
        // Multiplicities are at most n < n+1, so greedy digit extraction is exact.
        unsigned __int128 m = key / w;
        for (unsigned __int128 i = 0; i < m; ++i) parts.push_back(s);
        key -= m * w;
      }
    }
    return Partition(std::move(parts));
  }

 private:
  std::vector<unsigned __int128> weights_;
};

struct Key128Hash {
  std::size_t operator()(unsigned __int128 k) const noexcept {
    return std::hash<std::uint64_t>()(static_cast<std::uint64_t>(k) ^ static_cast<std::uint64_t>(k >> 64) * 0x9e3779b97f4a7c15ULL);
  }
};

class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }
  // Returns the absorbed root or -1 when already joined.
  std::pair<int, int> unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return {-1, -1};
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    return {a, b};
  }
  void undo(int a, int b) {
    parent_[static_cast<std::size_t>(b)] = b;
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
  }
  int size(int root) const { return size_[static_cast<std::size_t>(root)]; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace

PowerSumExpansion csf_power_sum(const Graph& g) {
  int n = g.vertex_count();
  auto edges = g.edges();
  if (static_cast<int>(edges.size()) > kPowerSumEdgeGuard) {
    throw TooLargeError("csf_power_sum: " + std::to_string(edges.size()) + " edges exceeds the guard of " +
                        std::to_string(kPowerSumEdgeGuard));
  }
  if (n > 24) throw TooLargeError("csf_power_sum: more than 24 vertices");
  PartitionKey keys(n);
  std::unordered_map<unsigned __int128, long long, Key128Hash> tally;
  RollbackUnionFind uf(n);
  unsigned __int128 start = static_cast<unsigned __int128>(n) * keys.weight(1);
  if (n == 0) start = 0;

  // Depth-first over include/exclude decisions per edge.
  auto rec = [&](auto&& self, std::size_t i, unsigned __int128 key, int sign) -> void {
    if (i == edges.size()) {
      tally[key] += sign;
      return;
    }
    self(self, i + 1, key, sign);
    auto [a, b] = uf.unite(edges[i].u, edges[i].v);
    if (a < 0) {
      self(self, i + 1, key, -sign);
      return;
    }
    int sa = uf.size(a) - uf.size(b);
    int sb = uf.size(b);
    unsigned __int128 next = key - keys.weight(sa) - keys.weight(sb) + keys.weight(sa + sb);
    self(self, i + 1, next, -sign);
    uf.undo(a, b);
  };
  rec(rec, 0, start, 1);

  PowerSumExpansion out(n);
  for (const auto& [key, c] : tally) out.add(keys.decode(key, n), Integer(static_cast<long>(c)));
  return out;
}

PowerSumExpansion csf_power_sum_blocks(const Graph& g) {
  int n = g.vertex_count();
  if (n > 16) throw TooLargeError("csf_power_sum_blocks: more than 16 vertices");
  std::size_t full = (std::size_t{1} << n);
  // a(X) = [X independent]; c(X) = signed count of connected spanning edge sets of G[X].
  std::vector<char> independent(full, 0);
  for (std::size_t x = 0; x < full; ++x) {
    bool ok = true;
    for (std::size_t rest = x; rest && ok; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (g.neighbors(v) & x) ok = false;
    }
    independent[x] = ok;
  }
  std::vector<Integer> conn(full);
  for (std::size_t x = 1; x < full; ++x) {
    std::size_t low = x & (~x + 1);
    Integer value = independent[x] ? 1 : 0;
    std::size_t others = x & ~low;
    // Proper subsets B of x containing the lowest vertex.
    for (std::size_t sub = (others - 1) & others;; sub = (sub - 1) & others) {
      std::size_t block = sub | low;
      if (block != x && independent[x & ~block]) value -= conn[block];
      if (sub == 0) break;
    }
    if (others == 0) value = 1;
    conn[x] = value;
  }
  // f(X) = sum over set partitions of X of prod c(B) p_type.
  std::vector<PowerSumExpansion> f(full);
  f[0] = PowerSumExpansion::basis_element(Partition());
  for (std::size_t x = 1; x < full; ++x) {
    std::size_t low = x & (~x + 1);
    std::size_t others = x & ~low;
    PowerSumExpansion acc(std::popcount(x));
    for (std::size_t sub = others;; sub = (sub - 1) & others) {
      std::size_t block = sub | low;
      if (conn[block] != 0) {
        const auto& rest = f[x & ~block];
        Partition part = Partition::single(std::popcount(block));
        for (const auto& [p, c] : rest.coeffs()) acc.add(sort_concat(p, part), c * conn[block]);
      }
      if (sub == 0) break;
    }
    f[x] = std::move(acc);
  }
  return f[full - 1];
}

PowerSumExpansion star_in_power_sum(int k) {
  if (k < 1) throw DomainError("star_in_power_sum needs k >= 1");
  PowerSumExpansion out(k);
  for (int j = 0; j < k; ++j) out.add(Partition::hook(k, k - 1 - j), sign_power(j) * binomial(k - 1, j));
  return out;
}

namespace {

struct Inverse {
  std::vector<Partition> index;
  std::map<Partition, std::size_t> position;
  std::vector<std::vector<Rational>> matrix;  // star coefficient of basis i from power-sum j
};

Inverse build_inverse(int n) {
  Inverse inv;
  inv.index = partitions_of(n);
  std::size_t size = inv.index.size();
  for (std::size_t i = 0; i < size; ++i) inv.position[inv.index[i]] = i;
  // Column j holds st_{index[j]} written in power sums.
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(2 * size));
  for (std::size_t j = 0; j < size; ++j) {
    PowerSumExpansion col = PowerSumExpansion::basis_element(Partition());
    for (int part : inv.index[j].parts()) col = product(col, star_in_power_sum(part));
    for (const auto& [p, c] : col.coeffs()) a[inv.position.at(p)][j] = c;
    a[j][size + j] = 1;
  }
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) throw NonIntegralError("star basis transition matrix is singular at n = " + std::to_string(n));
    std::swap(a[pivot], a[col]);
    Rational lead = a[col][col];
    for (auto& entry : a[col]) entry /= lead;
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t k = col; k < 2 * size; ++k) a[r][k] -= factor * a[col][k];
    }
  }
  inv.matrix.assign(size, std::vector<Rational>(size));
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t k = 0; k < size; ++k) inv.matrix[r][k] = a[r][size + k];
  return inv;
}

const Inverse& inverse_for(int n) {
  static std::mutex mutex;
  static std::map<int, Inverse> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_inverse(n)).first;
  return it->second;
}

}  // namespace

StarExpansion to_star_basis(const PowerSumExpansion& x) {
  int n = x.degree();
  const Inverse& inv = inverse_for(n);
  StarExpansion out(n);
  for (std::size_t r = 0; r < inv.index.size(); ++r) {
    Rational sum = 0;
    for (const auto& [p, c] : x.coeffs()) {
      const Rational& m = inv.matrix[r][inv.position.at(p)];
      if (m != 0) sum += m * c;
    }
    sum.canonicalize();
    if (sum.get_den() != 1) {
      throw NonIntegralError("coefficient of st_" + to_string(inv.index[r]) + " is " + sum.get_str() +
                             ", not an integer");
    }
    out.add(inv.index[r], sum.get_num());
  }
  return out;
}

}  // namespace csf
