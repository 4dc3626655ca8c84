#include "csf/closed_forms.hpp"

#include <algorithm>

#include "csf/errors.hpp"

namespace csf {

Integer tree_hook_coeff(int k, int m1) {
  if (k < 0 || m1 < 0) throw DomainError("tree_hook_coeff needs k, m1 >= 0");
  return sign_power(m1) * binomial(k, m1);
}

Integer unicyclic_hook_coeff(const HookParams& p) {
  if (p.c < 3 || p.r < 0 || p.r > p.c || p.k < p.c || p.m1 < 0) {
    throw DomainError("unicyclic_hook_coeff: parameters out of range");
  }
  return sign_power(p.m1) * (Integer(p.r - 1) * binomial(p.k - 2, p.m1 - 1) + Integer(p.c - 1) * binomial(p.k - 2, p.m1));
}

LongestHook longest_hook(const HookParams& p) {
  HookParams q = p;
  q.m1 = p.r <= 1 ? p.k - 2 : p.k - 1;
  return {q.m1, unicyclic_hook_coeff(q)};
}

namespace {

struct Shape {
  int n = 0;
  int length = 0;
  int m1 = 0;
  Integer body_multinomial;
};

Shape shape_of(int n, const Partition& lambda) {
  if (lambda.size() != n) {
    throw SizeMismatchError("partition " + to_string(lambda) + " is not a partition of " + std::to_string(n));
  }
  Shape s;
  s.n = n;
  s.length = lambda.length();
  s.m1 = lambda.multiplicity(1);
  std::vector<long> counts;
  for (const auto& [part, mult] : multiplicities(lambda).m) {
    if (part > 1) counts.push_back(mult);
  }
  s.body_multinomial = multinomial(counts);
  return s;
}

Integer exact_div(const Integer& num, long den) {
  if (den == 0) throw DomainError("division by zero");
  Integer d = den;
  if (!mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t())) {
    throw NonIntegralError(num.get_str() + " is not divisible by " + d.get_str());
  }
  Integer out = num / d;
  return out;
}

bool proper_hook(int n, const Partition& lambda) {
  return is_hook(lambda) && lambda.multiplicity(1) != n && lambda[0] > 1;
}

template <class Coefficient>
StarExpansion whole(int n, Coefficient coefficient) {
  StarExpansion out(n);
  for (const auto& lambda : partitions_of(n)) out.add(lambda, coefficient(n, lambda));
  return out;
}

}  // namespace

Integer path_coefficient(int n, const Partition& lambda) {
  if (n < 4) throw DomainError("path formula needs n >= 4");
  Shape s = shape_of(n, lambda);
  return sign_power(s.m1) * s.body_multinomial * binomial(n - 2 - s.length + s.m1, s.m1);
}

Integer cycle_coefficient(int n, const Partition& lambda) {
  if (n < 3) throw DomainError("cycle formula needs n >= 3");
  Shape s = shape_of(n, lambda);
  if (proper_hook(n, lambda)) {
    return sign_power(s.m1) * (-binomial(n - 2, s.m1 - 1) + Integer(n - 1) * binomial(n - 2, s.m1));
  }
  int body = s.length - s.m1;
  if (body == 0) return 0;
  return sign_power(s.m1) * exact_div(Integer(n) * s.body_multinomial * binomial(n - s.length + s.m1 - 1, s.m1), body);
}

Integer pan_coefficient(int n, const Partition& lambda) {
  if (n < 4) throw DomainError("pan formula needs n >= 4");
  Shape s = shape_of(n, lambda);
  if (proper_hook(n, lambda)) return sign_power(s.m1) * Integer(n - 2) * binomial(n - 3, s.m1);
  int body = s.length - s.m1;
  if (body == 0) return 0;
  return sign_power(s.m1) *
         exact_div(Integer(n - s.length) * s.body_multinomial * binomial(n - s.length + s.m1 - 1, s.m1), body);
}

StarExpansion path_csf(int n) { return whole(n, path_coefficient); }
StarExpansion cycle_csf(int n) { return whole(n, cycle_coefficient); }
StarExpansion pan_csf(int n) { return whole(n, pan_coefficient); }

Partition leading_partition_unicyclic(const UnicyclicDecomposition& d) {
  int c = d.c();
  if (c < 3 || static_cast<int>(d.lambda.size()) != c) throw DomainError("invalid unicyclic decomposition");
  if (d.r == 0) return sort_concat(Partition{2}, Partition::ones(d.n - 2));
  if (d.r == 1) {
    std::size_t root = 0;
    while (d.trees[root].size() == 1) ++root;
    std::vector<int> parts{d.lambda[root], 2};
    parts.insert(parts.end(), static_cast<std::size_t>(c - 3), 1);
    return sort_concat(parts, d.mu);
  }
  return sort_concat(d.lambda, d.mu);
}

int num_leaves_from_leading(const Partition& lead, LeafCase which) {
  if (lead.empty()) throw DomainError("num_leaves_from_leading needs a nonempty partition");
  int base = lead.size() - lead.length();
  return which == LeafCase::SingleTree ? base - 1 : base;
}

Integer lead_coeff_tree(const std::vector<int>& deep_degrees) {
  Integer prod = 1;
  for (int d : deep_degrees) {
    if (d < 2) throw DomainError("deep vertex degrees are at least 2");
    prod *= d - 1;
  }
  return sign_power(static_cast<long>(deep_degrees.size())) * prod;
}

Integer lead_coeff_unicyclic_r1(int c, const std::vector<int>& deep_degrees_of_cut, bool root_is_sprout) {
  if (c < 3) throw DomainError("cycle size must be at least 3");
  if (root_is_sprout && deep_degrees_of_cut.empty()) {
    throw DomainError("a sprout root must be listed among the deep degrees");
  }
  long p = static_cast<long>(deep_degrees_of_cut.size());
  Integer all = 1;
  Integer rest = 1;
  for (std::size_t i = 0; i < deep_degrees_of_cut.size(); ++i) {
    all *= deep_degrees_of_cut[i] - 1;
    if (i > 0) rest *= deep_degrees_of_cut[i] - 1;
  }
  Integer inner = Integer(c - 2) * all;
  if (root_is_sprout) inner += rest;
  return sign_power(p) * inner;
}

Integer lead_coeff_unicyclic_rge2(const DeepVertexProfile& profile, int r) {
  int s = profile.s();
  if (r < 2) throw DomainError("lead_coeff_unicyclic_rge2 needs r >= 2");
  if (r < s) throw DomainError("r cannot be smaller than the number of sprouts");
  Integer deep = 1;
  for (int d : profile.nonsprout_deep_degrees) deep *= d - 1;
  if (s == 0) return sign_power(profile.p()) * deep;
  Integer sprouts = 1;
  long sum_b = 0;
  for (int b : profile.sprout_degrees) {
    sprouts *= b - 1;
    sum_b += b;
  }
  Integer bracket;
  if (r == s) {
    bracket = sprouts - sum_b + 2 * s - 1;
  } else if (r == s + 1) {
    bracket = sprouts - 1;
  } else {
    bracket = sprouts;
  }
  return sign_power(profile.p() + s) * deep * bracket;
}

Integer lead_coeff_cycle(int n) { return sign_power(n - 2); }

Partition cuttlefish_leading(int c, int t) {
  if (c < 3 || t < 1) throw DomainError("cuttlefish_leading needs c >= 3 and t >= 1");
  std::vector<int> parts{t + 1, 2};
  parts.insert(parts.end(), static_cast<std::size_t>(c - 3), 1);
  return Partition::from_sequence(parts);
}

Integer bicyclic_cn(BicyclicShape shape, int s, int t, int ell) {
  if (s < 3 || t < 3) throw DomainError("bicyclic cycles need at least 3 vertices");
  Integer base = Integer(s - 1) * (t - 1);
  if (shape == BicyclicShape::TypeOne) return base;
  if (ell < 1) throw DomainError("type-II cycles share at least one edge");
  return base - 2 * binomial(ell, 2);
}

Integer elementary_symmetric(const std::vector<int>& values, int j) {
  if (j < 0 || j > static_cast<int>(values.size())) return 0;
  Integer total = 0;
  std::vector<int> pick(values.size(), 0);
  std::fill(pick.begin(), pick.begin() + j, 1);
  // Walk all j-subsets via prev_permutation on a 1...10...0 mask.
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (pick[i]) term *= values[i];
    }
    total += term;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

}  // namespace csf
