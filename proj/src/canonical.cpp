#include "csf/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "csf/errors.hpp"

namespace csf {

namespace {

using Cells = std::vector<VertexMask>;
using Perm = std::vector<int>;

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.vertex_count()) { seed_twin_generators(); }

  void run() {
    Cells cells;
    if (n_ > 0) cells.push_back(g_.all_vertices());
    std::vector<int> path;
    descend(std::move(cells), path);
  }

  const std::vector<VertexMask>& best_rows() const { return best_rows_; }
  const std::vector<int>& best_label() const { return best_label_; }

 private:
  // Split every cell by neighbour counts into the current cells until stable.
  void refine(Cells& cells) const {
    std::vector<std::pair<std::vector<int>, int>> sig;
    while (true) {
      Cells next;
      next.reserve(static_cast<std::size_t>(n_));
      for (VertexMask cell : cells) {
        if (std::popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        sig.clear();
        for (VertexMask rest = cell; rest; rest &= rest - 1) {
          int v = std::countr_zero(rest);
          std::vector<int> counts(cells.size());
          for (std::size_t k = 0; k < cells.size(); ++k) counts[k] = std::popcount(g_.neighbors(v) & cells[k]);
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        VertexMask piece = 0;
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i > 0 && sig[i].first != sig[i - 1].first) {
            next.push_back(piece);
            piece = 0;
          }
          piece |= bit(sig[i].second);
        }
        next.push_back(piece);
      }
      bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  void descend(Cells cells, std::vector<int>& path) {
    refine(cells);
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    while (std::popcount(cells[target]) == 1) ++target;
    VertexMask cell = cells[target];
    VertexMask tried = 0;
    for (VertexMask rest = cell; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (tried && (orbit_of(v, path) & tried)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(bit(v));
      child.push_back(cell & ~bit(v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      path.push_back(v);
      descend(std::move(child), path);
      path.pop_back();
      tried |= bit(v);
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> label(static_cast<std::size_t>(n_));
    std::vector<int> order(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      int v = std::countr_zero(cells[i]);
      label[static_cast<std::size_t>(v)] = static_cast<int>(i);
      order[i] = v;
    }
    std::vector<VertexMask> rows(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      VertexMask nb = g_.neighbors(order[static_cast<std::size_t>(i)]);
      VertexMask row = 0;
      for (; nb; nb &= nb - 1) row |= bit(label[static_cast<std::size_t>(std::countr_zero(nb))]);
      rows[static_cast<std::size_t>(i)] = row;
    }
    if (best_label_.empty() || rows > best_rows_) {
      best_rows_ = std::move(rows);
      best_label_ = std::move(label);
      best_order_ = std::move(order);
      return;
    }
    if (rows == best_rows_) {
      Perm gamma(static_cast<std::size_t>(n_));
      bool identity = true;
      for (int v = 0; v < n_; ++v) {
        gamma[static_cast<std::size_t>(v)] = best_order_[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
        identity = identity && gamma[static_cast<std::size_t>(v)] == v;
      }
      if (!identity) generators_.push_back(std::move(gamma));
    }
  }

  // Orbit of v under the stored generators that fix every path vertex.
  VertexMask orbit_of(int v, const std::vector<int>& path) const {
    std::vector<const Perm*> usable;
    for (const auto& gen : generators_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int p) { return gen[static_cast<std::size_t>(p)] == p; });
      if (fixes) usable.push_back(&gen);
    }
    VertexMask orbit = bit(v);
    VertexMask frontier = orbit;
    while (frontier) {
      int w = std::countr_zero(frontier);
      frontier &= frontier - 1;
      for (const Perm* gen : usable) {
        int img = (*gen)[static_cast<std::size_t>(w)];
        if (!(orbit & bit(img))) {
          orbit |= bit(img);
          frontier |= bit(img);
        }
      }
    }
    return orbit;
  }

  // Swapping two twins is an automorphism; one transposition per new union.
  void seed_twin_generators() {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if ((g_.neighbors(u) & ~bit(v)) != (g_.neighbors(v) & ~bit(u))) continue;
        int a = find(u);
        int b = find(v);
        if (a == b) continue;
        parent[static_cast<std::size_t>(b)] = a;
        Perm swap(static_cast<std::size_t>(n_));
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[static_cast<std::size_t>(u)], swap[static_cast<std::size_t>(v)]);
        generators_.push_back(std::move(swap));
      }
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Perm> generators_;
  std::vector<VertexMask> best_rows_;
  std::vector<int> best_label_;
  std::vector<int> best_order_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  Search search(g);
  search.run();
  int n = g.vertex_count();
  std::size_t row_bytes = (static_cast<std::size_t>(n) + 7) / 8;
  CanonicalLabeling out;
  out.code.reserve(1 + row_bytes * static_cast<std::size_t>(n));
  out.code.push_back(static_cast<char>(n));
  for (VertexMask row : search.best_rows()) {
    for (std::size_t b = 0; b < row_bytes; ++b) out.code.push_back(static_cast<char>((row >> (8 * b)) & 0xff));
  }
  out.label = search.best_label();
  return out;
}

CanonicalCode canonical_form(const Graph& g) { return canonical_labeling(g).code; }

Graph canonical_graph(const Graph& g) {
  auto lab = canonical_labeling(g);
  return relabel(g, lab.label);
}

std::string code_to_hex(const CanonicalCode& code) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (unsigned char ch : code) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 15]);
  }
  return out;
}

CanonicalCode code_from_hex(std::string_view hex) {
  if (hex.size() % 2) throw ParseError("canonical code hex has odd length");
  auto nibble = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw ParseError("bad hex digit in canonical code");
  };
  CanonicalCode out;
  for (std::size_t i = 0; i < hex.size(); i += 2) out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return out;
}

}  // namespace csf
