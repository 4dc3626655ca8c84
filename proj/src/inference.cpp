#include "csf/inference.hpp"

#include <algorithm>
#include <set>

#include "csf/closed_forms.hpp"
#include "csf/errors.hpp"

namespace csf {

Integer recover_r(int c, const Integer& c_n1_1, int m) { return -((c_n1_1 - 1) + Integer(c - 1) * (m - 1)); }

StructuralReport infer(const StarExpansion& x) {
  int n = x.degree();
  if (n < 3 || x.empty()) throw InconsistentReportError("expansion is too small to come from a unicyclic graph");
  StructuralReport rep;
  rep.n = n;
  Integer top = x.coefficient(Partition::single(n));
  if (top < 2 || top > n - 1) {
    throw InconsistentReportError("c_(n) = " + top.get_str() + " does not give a cycle size in [3, n]");
  }
  int c = static_cast<int>(top.get_si()) + 1;
  rep.cycle_size = c;
  rep.is_pure_cycle = c == n;

  auto hooks = hook_vector(x);
  int m = -1;
  for (int m1 = 0; m1 < static_cast<int>(hooks.size()); ++m1) {
    if (hooks[static_cast<std::size_t>(m1)] != 0) m = m1;
  }
  rep.longest_hook_m = m;

  auto consistent = [&](int k, int r) {
    if (k < c || k > n || r < 0 || r > c) return false;
    for (int m1 = 0; m1 < static_cast<int>(hooks.size()); ++m1) {
      if (unicyclic_hook_coeff({n, c, k, r, m1}) != hooks[static_cast<std::size_t>(m1)]) return false;
    }
    return true;
  };
  if (rep.is_pure_cycle) {
    if (consistent(n, 0)) rep.kr_candidates.push_back({n, 0});
  } else {
    for (int r = 1; r <= c; ++r) {
      int k = r == 1 ? m + 2 : m + 1;
      if (consistent(k, r)) rep.kr_candidates.push_back({k, r});
    }
  }
  if (rep.kr_candidates.empty()) {
    throw InconsistentReportError("no (k, r) with cycle size " + std::to_string(c) +
                                  " reproduces the hook coefficients");
  }
  std::sort(rep.kr_candidates.begin(), rep.kr_candidates.end());

  rep.leading = leading_term(x).partition;
  std::set<int> leaves;
  for (const auto& cand : rep.kr_candidates) {
    if (cand.r == 0) {
      leaves.insert(0);
    } else {
      leaves.insert(num_leaves_from_leading(rep.leading, cand.r == 1 ? LeafCase::SingleTree : LeafCase::MultipleTrees));
    }
  }
  rep.leaf_count_candidates.assign(leaves.begin(), leaves.end());

  int t = n - c;
  rep.is_cuttlefish = t >= 1 && rep.leading == cuttlefish_leading(c, t);
  return rep;
}

}  // namespace csf
