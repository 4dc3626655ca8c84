#include "csf/enumerate.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "csf/errors.hpp"
#include "csf/graph_io.hpp"
#include "csf/inference.hpp"
#include "csf/unicyclic.hpp"

namespace csf {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

// Rooted trees up to isomorphism, each a multiset of child trees (ids
// non-increasing). Ids grow with size.
class RootedTreeCatalog {
 public:
  static const RootedTreeCatalog& instance() {
    static const RootedTreeCatalog catalog(kMaxUnicyclicOrder - 2);
    return catalog;
  }

  int size_of(int id) const { return sizes_[static_cast<std::size_t>(id)]; }
  const std::vector<int>& with_size(int s) const { return by_size_[static_cast<std::size_t>(s)]; }

  // Hangs tree `id` below `root`, numbering new vertices from `next`.
  void attach(Graph& g, int root, int id, int& next) const {
    for (int child : children_[static_cast<std::size_t>(id)]) {
      int w = next++;
      g.add_edge(root, w);
      attach(g, w, child, next);
    }
  }

 private:
  explicit RootedTreeCatalog(int max_size) : by_size_(static_cast<std::size_t>(max_size) + 1) {
    for (int s = 1; s <= max_size; ++s) {
      std::vector<int> kids;
      grow(s, s - 1, static_cast<int>(sizes_.size()) - 1, kids);
    }
  }

  void grow(int s, int remaining, int max_id, std::vector<int>& kids) {
    if (remaining == 0) {
      by_size_[static_cast<std::size_t>(s)].push_back(static_cast<int>(sizes_.size()));
      sizes_.push_back(s);
      children_.push_back(kids);
      return;
    }
    for (int id = max_id; id >= 0; --id) {
      int sz = sizes_[static_cast<std::size_t>(id)];
      if (sz > remaining) continue;
      kids.push_back(id);
      grow(s, remaining - sz, id, kids);
      kids.pop_back();
    }
  }

  std::vector<int> sizes_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> by_size_;
};

bool dihedral_minimal(const std::vector<int>& seq) {
  int c = static_cast<int>(seq.size());
  for (int dir : {1, -1}) {
    for (int start = 0; start < c; ++start) {
      for (int j = 0; j < c; ++j) {
        int a = seq[static_cast<std::size_t>(j)];
        int b = seq[static_cast<std::size_t>(((start + dir * j) % c + c) % c)];
        if (b < a) return false;
        if (b > a) break;
      }
    }
  }
  return true;
}

Graph build_unicyclic(const std::vector<int>& seq, int n) {
  const auto& cat = RootedTreeCatalog::instance();
  int c = static_cast<int>(seq.size());
  Graph g(n);
  for (int i = 0; i < c; ++i) g.add_edge(i, (i + 1) % c);
  int next = c;
  for (int i = 0; i < c; ++i) cat.attach(g, i, seq[static_cast<std::size_t>(i)], next);
  return g;
}

void sequences(int c, int remaining, std::vector<int>& seq, const std::function<void(const std::vector<int>&)>& emit) {
  const auto& cat = RootedTreeCatalog::instance();
  int placed = static_cast<int>(seq.size());
  int left = c - placed;
  if (left == 0) {
    if (remaining == 0 && dihedral_minimal(seq)) emit(seq);
    return;
  }
  int max_size = remaining - (left - 1);
  for (int s = 1; s <= max_size; ++s) {
    if (left == 1 && s != remaining) continue;
    for (int id : cat.with_size(s)) {
      if (placed > 0 && id < seq.front()) continue;
      seq.push_back(id);
      sequences(c, remaining - s, seq, emit);
      seq.pop_back();
    }
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

class FingerprintStore {
 public:
  explicit FingerprintStore(std::optional<std::filesystem::path> dir) {
    if (!dir) {
      if (const char* env = std::getenv("CSF_CACHE_DIR"); env && *env) dir = env;
    }
    if (!dir) return;
    std::filesystem::create_directories(*dir);
    path_ = *dir / "fingerprints.tsv";
    std::ifstream in(*path_);
    std::string line;
    while (std::getline(in, line)) {
      auto tab = line.find('\t');
      if (tab == std::string::npos || tab + 1 >= line.size()) continue;
      known_[line.substr(0, tab)] = line.substr(tab + 1);
    }
  }

  std::optional<std::string> find(const std::string& code_hex) const {
    auto it = known_.find(code_hex);
    if (it == known_.end()) return std::nullopt;
    return it->second;
  }

  void append(const std::vector<std::pair<std::string, std::string>>& fresh) {
    if (!path_ || fresh.empty()) return;
    std::ofstream out(*path_, std::ios::app);
    for (const auto& [code, fp] : fresh) out << code << '\t' << fp << '\n';
  }

 private:
  std::optional<std::filesystem::path> path_;
  std::unordered_map<std::string, std::string> known_;
};

StarExpansion expand_with(const Graph& g, ExpansionCache* cache) {
  StarOptions opts;
  opts.cache = cache;
  return star_expand(g, opts);
}

}  // namespace

void for_each_unicyclic(int n, std::optional<int> c, const std::function<void(const Graph&)>& visit) {
  if (n < 3 || n > kMaxUnicyclicOrder) {
    throw DomainError("enumerate_unicyclic needs 3 <= n <= " + std::to_string(kMaxUnicyclicOrder));
  }
  if (c && (*c < 3 || *c > n)) throw DomainError("enumerate_unicyclic needs 3 <= c <= n");
  int lo = c ? *c : 3;
  int hi = c ? *c : n;
  for (int cycle = lo; cycle <= hi; ++cycle) {
    std::vector<int> seq;
    sequences(cycle, n, seq, [&](const std::vector<int>& s) { visit(build_unicyclic(s, n)); });
  }
}

std::vector<Graph> enumerate_unicyclic(int n, std::optional<int> c) {
  std::vector<Graph> out;
  for_each_unicyclic(n, c, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxConnectedOrder) {
    throw DomainError("enumerate_connected needs 1 <= n <= " + std::to_string(kMaxConnectedOrder));
  }
  std::map<CanonicalCode, Graph> level{{canonical_form(Graph(1)), Graph(1)}};
  for (int k = 1; k < n; ++k) {
    std::map<CanonicalCode, Graph> next;
    for (const auto& [code, g] : level) {
      for (VertexMask s = 1; s < bit(k); ++s) {
        Graph h(k + 1);
        for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
        for (VertexMask rest = s; rest; rest &= rest - 1) h.add_edge(std::countr_zero(rest), k);
        auto lab = canonical_labeling(h);
        if (!next.contains(lab.code)) next.emplace(lab.code, relabel(h, lab.label));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, g] : level) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > kMaxVertices) throw DomainError("enumerate_trees needs 1 <= n <= 64");
  std::map<CanonicalCode, Graph> level{{canonical_form(Graph(1)), Graph(1)}};
  for (int k = 1; k < n; ++k) {
    std::map<CanonicalCode, Graph> next;
    for (const auto& [code, g] : level) {
      for (int v = 0; v < k; ++v) {
        Graph h(k + 1);
        for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
        h.add_edge(v, k);
        auto lab = canonical_labeling(h);
        if (!next.contains(lab.code)) next.emplace(lab.code, relabel(h, lab.label));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, g] : level) out.push_back(std::move(g));
  return out;
}

std::string expansion_fingerprint(const StarExpansion& x) { return sha256_hex(expansion_to_json(x).dump()); }

CollisionReport collision_search(int n, int c, const SearchOptions& options) {
  auto graphs = enumerate_unicyclic(n, c);
  std::vector<CanonicalCode> codes(graphs.size());
  std::vector<std::string> prints(graphs.size());
  FingerprintStore store(options.cache_dir);

  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    codes[i] = canonical_form(graphs[i]);
    if (auto hit = store.find(code_to_hex(codes[i]))) {
      prints[i] = *hit;
    } else {
      missing.push_back(i);
    }
  }
  parallel_for(missing.size(), options.jobs, [&](std::size_t j) {
    std::size_t i = missing[j];
    prints[i] = expansion_fingerprint(expand_with(graphs[i], options.cache));
  });
  std::vector<std::pair<std::string, std::string>> fresh;
  for (std::size_t i : missing) fresh.emplace_back(code_to_hex(codes[i]), prints[i]);
  store.append(fresh);

  std::map<std::string, std::vector<std::size_t>> groups;
  std::vector<std::string> first_seen;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto& bucket = groups[prints[i]];
    if (bucket.empty()) first_seen.push_back(prints[i]);
    bucket.push_back(i);
  }

  CollisionReport report;
  report.n = n;
  report.c = c;
  report.graph_count = static_cast<long>(graphs.size());
  for (const auto& fp : first_seen) {
    const auto& members = groups[fp];
    if (members.size() < 2) continue;
    // Confirm full equality; split on the (never yet observed) digest clash.
    std::vector<CollisionClass> split;
    for (std::size_t i : members) {
      StarExpansion x = expand_with(graphs[i], options.cache);
      auto it = std::find_if(split.begin(), split.end(), [&](const CollisionClass& k) { return k.expansion == x; });
      if (it == split.end()) {
        split.push_back({fp, std::move(x), {}, {}});
        it = split.end() - 1;
      }
      it->graphs.push_back(graphs[i]);
      it->codes.push_back(codes[i]);
    }
    for (auto& k : split) {
      if (k.graphs.size() < 2) continue;
      long m = static_cast<long>(k.graphs.size());
      report.pair_count += m * (m - 1) / 2;
      report.classes.push_back(std::move(k));
    }
  }
  return report;
}

Json collision_report_to_json(const CollisionReport& report) {
  Json classes = Json::array();
  for (const auto& k : report.classes) {
    Json graphs = Json::array();
    Json codes = Json::array();
    for (const auto& g : k.graphs) graphs.push_back(to_graph6(g));
    for (const auto& code : k.codes) codes.push_back(code_to_hex(code));
    classes.push_back({{"expansion_ref", k.fingerprint},
                       {"graphs", std::move(graphs)},
                       {"canonical_codes", std::move(codes)},
                       {"expansion", expansion_to_json(k.expansion)}});
  }
  return Json{{"n", report.n},
              {"c", report.c},
              {"graph_count", report.graph_count},
              {"pair_count", report.pair_count},
              {"classes", std::move(classes)}};
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.failed == 0; });
}

const TheoremCheck& VerifyReport::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw DomainError("no theorem check named '" + std::string(name) + "'");
}

namespace {

struct GraphFacts {
  Graph graph;
  StarExpansion expansion;
  int c = 0;
  int k = 0;
  int r = 0;
  std::vector<int> degrees;
};

class Ledger {
 public:
  explicit Ledger(std::vector<std::string> names) {
    for (auto& n : names) checks_.push_back({std::move(n), 0, 0, std::nullopt, {}});
  }

  void record(std::string_view name, bool ok, const Graph& g, const std::string& detail = {}) {
    auto& c = find(name);
    if (ok) {
      ++c.passed;
      return;
    }
    ++c.failed;
    if (!c.counterexample) {
      c.counterexample = to_graph6(g);
      c.detail = detail;
    }
  }

  std::vector<TheoremCheck> take() { return std::move(checks_); }

 private:
  TheoremCheck& find(std::string_view name) {
    for (auto& c : checks_) {
      if (c.name == name) return c;
    }
    throw DomainError("unknown theorem check");
  }
  std::vector<TheoremCheck> checks_;
};

std::string describe(const Integer& expected, const Integer& got) {
  return "expected " + expected.get_str() + ", engine gives " + got.get_str();
}

void check_graph(const GraphFacts& f, const std::function<Integer(const HookParams&)>& hook_formula, Ledger& ledger) {
  const Graph& g = f.graph;
  const StarExpansion& x = f.expansion;
  int n = g.vertex_count();
  auto d = unicyclic_decompose(g);
  auto hooks = hook_vector(x);

  bool hooks_ok = true;
  std::string hook_detail;
  for (int m1 = 0; m1 <= n - 2; ++m1) {
    Integer want = hook_formula({n, f.c, f.k, f.r, m1});
    if (want != hooks[static_cast<std::size_t>(m1)]) {
      hooks_ok = false;
      hook_detail = "m1 = " + std::to_string(m1) + ": " + describe(want, hooks[static_cast<std::size_t>(m1)]);
      break;
    }
  }
  ledger.record("hook_coefficients", hooks_ok, g, hook_detail);
  ledger.record("cycle_size_from_top", x.coefficient(Partition::single(n)) == f.c - 1, g);

  int m = -1;
  for (int m1 = 0; m1 <= n - 2; ++m1) {
    if (hooks[static_cast<std::size_t>(m1)] != 0) m = m1;
  }
  auto longest = longest_hook({n, f.c, f.k, f.r, 0});
  ledger.record("longest_hook", m == longest.m1 && m >= 0 && hooks[static_cast<std::size_t>(m)] == longest.coefficient,
                g, "longest m1 = " + std::to_string(m) + ", predicted " + std::to_string(longest.m1));

  if (f.r > 1 && f.r < f.c) {
    Integer got = recover_r(f.c, x.coefficient(Partition::hook(n, 1)), m);
    ledger.record("r_recovery", got == f.r, g, describe(f.r, got));
  }

  auto lead = leading_term(x);
  Partition predicted = leading_partition_unicyclic(d);
  Partition via_lc;
  if (f.r == 0) {
    via_lc = predicted;
  } else if (f.r == 1) {
    std::size_t root = 0;
    while (d.trees[root].size() == 1) ++root;
    EdgeRef cut(d.cycle[root], d.cycle[(root + 1) % d.cycle.size()]);
    via_lc = leaf_component_partition(delete_edge(g, cut));
  } else {
    via_lc = leaf_component_partition(g);
  }
  ledger.record("leading_partition", lead.partition == predicted && predicted == via_lc, g,
                "engine " + to_string(lead.partition) + ", predicted " + to_string(predicted));

  Integer want;
  const char* which = "lead_coefficient_cycle";
  if (f.r == 0) {
    want = lead_coeff_cycle(n);
  } else if (f.r == 1) {
    auto prof = rooted_cut_profile(g);
    want = lead_coeff_unicyclic_r1(prof.c, prof.deep_degrees, prof.root_is_sprout);
    which = "lead_coefficient_r1";
  } else {
    auto prof = deep_vertex_profile(g);
    want = lead_coeff_unicyclic_rge2(prof, f.r);
    which = prof.s() == 0 ? "lead_coefficient_no_sprout" : "lead_coefficient_rge2";
  }
  ledger.record(which, want == lead.coefficient, g, describe(want, lead.coefficient));

  int leaves = static_cast<int>(classify_vertices(g).leaves.size());
  if (f.r >= 1) {
    int from_lead = num_leaves_from_leading(lead.partition, f.r == 1 ? LeafCase::SingleTree : LeafCase::MultipleTrees);
    ledger.record("leaf_count", from_lead == leaves, g,
                  "graph has " + std::to_string(leaves) + " leaves, formula gives " + std::to_string(from_lead));
  }

  bool sound = false;
  bool cuttlefish_ok = false;
  std::string why;
  try {
    auto rep = infer(x);
    bool contains = std::find(rep.kr_candidates.begin(), rep.kr_candidates.end(), KrCandidate{f.k, f.r}) !=
                    rep.kr_candidates.end();
    bool singleton_ok = !(f.r > 1 && f.r < f.c) || rep.kr_candidates.size() == 1;
    bool shape_ok = true;
    if (rep.kr_candidates.size() == 2) {
      auto single = rep.kr_candidates[0];
      auto full = rep.kr_candidates[1];
      if (single.r != 1) std::swap(single, full);
      shape_ok = single.r == 1 && full.r == f.c && single.k == full.k + 1;
    } else if (rep.kr_candidates.size() > 2) {
      shape_ok = false;
    }
    bool leaves_ok = std::find(rep.leaf_count_candidates.begin(), rep.leaf_count_candidates.end(), leaves) !=
                     rep.leaf_count_candidates.end();
    sound = rep.cycle_size == f.c && rep.is_pure_cycle == (f.c == n) && contains && singleton_ok && shape_ok &&
            leaves_ok;
    if (!sound) why = report_to_json(rep).dump();
    cuttlefish_ok = rep.is_cuttlefish == is_cuttlefish(g);
  } catch (const Error& e) {
    why = e.what();
  }
  ledger.record("inference_soundness", sound, g, why);
  ledger.record("cuttlefish_flag", cuttlefish_ok, g, why);
}

}  // namespace

VerifyReport verify_theorems(int n_max, const VerifyOptions& options) {
  if (n_max > 12) throw DomainError("verify_theorems supports n_max <= 12");
  std::function<Integer(const HookParams&)> hook_formula = options.hook_formula;
  if (!hook_formula) hook_formula = [](const HookParams& p) { return unicyclic_hook_coeff(p); };
  Ledger ledger({"hook_coefficients", "cycle_size_from_top", "longest_hook", "r_recovery", "leading_partition",
                 "lead_coefficient_cycle", "lead_coefficient_r1", "lead_coefficient_rge2",
                 "lead_coefficient_no_sprout", "leaf_count", "inference_soundness", "cuttlefish_flag",
                 "equal_csf_same_cycle", "equal_csf_same_k_same_r", "conjecture_degree_r_k"});
  VerifyReport report;
  report.n_max = n_max;
  for (int n = 3; n <= n_max; ++n) {
    auto graphs = enumerate_unicyclic(n);
    std::vector<GraphFacts> facts(graphs.size());
    parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
      const Graph& g = graphs[i];
      auto d = unicyclic_decompose(g);
      facts[i] = {g, expand_with(g, options.cache), d.c(), static_cast<int>(internal_edges(g).size()), d.r,
                  degree_sequence(g)};
    });
    std::map<std::string, std::vector<std::size_t>> by_print;
    for (std::size_t i = 0; i < facts.size(); ++i) {
      check_graph(facts[i], hook_formula, ledger);
      by_print[expansion_fingerprint(facts[i].expansion)].push_back(i);
    }
    report.graphs_checked += static_cast<long>(facts.size());
    for (const auto& [fp, members] : by_print) {
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          const auto& ga = facts[members[a]];
          const auto& gb = facts[members[b]];
          if (ga.expansion != gb.expansion) continue;
          std::string pair = to_graph6(ga.graph) + " / " + to_graph6(gb.graph);
          ledger.record("equal_csf_same_cycle", ga.c == gb.c, ga.graph, pair);
          if (ga.k == gb.k) ledger.record("equal_csf_same_k_same_r", ga.r == gb.r, ga.graph, pair);
          if (ga.c >= 4 || (ga.c == 3 && n % 2 == 1)) {
            ledger.record("conjecture_degree_r_k", ga.degrees == gb.degrees && ga.r == gb.r && ga.k == gb.k, ga.graph,
                          pair);
          }
        }
      }
    }
  }
  report.checks = ledger.take();
  return report;
}

Json verify_report_to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}};
    if (c.counterexample) {
      entry["counterexample"] = *c.counterexample;
      entry["detail"] = c.detail;
    }
    checks.push_back(std::move(entry));
  }
  return Json{{"n_max", report.n_max},
              {"graphs_checked", report.graphs_checked},
              {"all_passed", report.all_passed()},
              {"checks", std::move(checks)}};
}

}  // namespace csf
