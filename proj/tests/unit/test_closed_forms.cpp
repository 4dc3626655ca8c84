#include <random>

#include "csf/closed_forms.hpp"
#include "csf/errors.hpp"
#include "csf/families.hpp"
#include "csf/star_engine.hpp"
#include "csf/unicyclic.hpp"
#include "doctest.h"
#include "paper_graphs.hpp"

using csf::Integer;
using csf::Partition;
namespace fam = csf::families;

namespace {

// Cycle of length 4 where every cycle vertex carries a two-edge path.
csf::Graph four_sprouts() {
  csf::Graph g(12);
  for (int i = 0; i < 4; ++i) {
    g.add_edge(i, (i + 1) % 4);
    g.add_edge(i, 4 + i);
    g.add_edge(4 + i, 8 + i);
  }
  return g;
}

// Centre 0 with four legs of two edges each.
csf::Graph spider() {
  csf::Graph g(9);
  for (int i = 0; i < 4; ++i) {
    g.add_edge(0, 1 + i);
    g.add_edge(1 + i, 5 + i);
  }
  return g;
}

Integer lead(const csf::Graph& g) { return csf::leading_term(csf::star_expand(g)).coefficient; }

}  // namespace

TEST_SUITE("closed_forms") {
  TEST_CASE("tree hooks") {
    CHECK(csf::tree_hook_coeff(2, 1) == -2);
    CHECK(csf::tree_hook_coeff(5, 0) == 1);
    CHECK(csf::star_expand(fam::path(5)).coefficient({4, 1}) == -2);
  }

  TEST_CASE("unicyclic hooks") {
    const Integer expected[] = {3, -9, 9, -3};
    for (int m1 = 0; m1 < 4; ++m1) {
      CHECK(csf::unicyclic_hook_coeff({8, 4, 4, 4, m1}) == expected[m1]);
      CHECK(csf::unicyclic_hook_coeff({8, 4, 5, 1, m1}) == expected[m1]);
    }
    for (int m1 = 4; m1 <= 6; ++m1) CHECK(csf::unicyclic_hook_coeff({8, 4, 5, 1, m1}) == 0);
    for (int k = 4; k <= 9; ++k) {
      for (int r = 1; r <= 4; ++r) CHECK(csf::unicyclic_hook_coeff({12, 4, k, r, 0}) == 3);
    }
    CHECK(csf::unicyclic_hook_coeff({3, 3, 3, 0, 1}) == -1);
  }

  TEST_CASE("longest hook") {
    auto cyc = csf::longest_hook({7, 7, 7, 0, 0});
    CHECK(cyc.m1 == 5);
    CHECK(cyc.coefficient == csf::star_expand(fam::cycle(7)).coefficient(Partition::hook(7, 5)));
    auto left = csf::longest_hook(csf::hook_params(paper::hooks_left().graph));
    CHECK(left.m1 == 3);
    CHECK(left.coefficient == -3);
    auto right = csf::longest_hook(csf::hook_params(paper::hooks_right().graph));
    CHECK(right.m1 == 3);
    CHECK(right.coefficient == -3);
  }

  TEST_CASE("path family") {
    auto p4 = csf::path_csf(4);
    CHECK(p4.coefficient({2, 2}) == 1);
    CHECK(p4.coefficient({3, 1}) == -1);
    CHECK(p4.coefficient({4}) == 1);
    CHECK(p4.support_size() == 3);
    CHECK(csf::path_coefficient(5, {2, 2, 1}) == -1);
    for (int n = 4; n <= 9; ++n) {
      for (int m1 = 0; m1 <= n - 2; ++m1) CHECK(csf::path_coefficient(n, Partition::hook(n, m1)) == csf::tree_hook_coeff(n - 3, m1));
    }
  }

  TEST_CASE("cycle family") {
    CHECK(csf::cycle_csf(3) == csf::star_expand(fam::cycle(3)));
    for (int n = 5; n <= 10; ++n) {
      for (int a = n - 2; 2 * a >= n; --a) {
        int b = n - a;
        if (b < 2) continue;
        Integer want = a > b ? n : n / 2;
        CHECK(csf::cycle_coefficient(n, {a, b}) == want);
      }
    }
    // Magnitudes 0, 3, 14, 40, 90, 175 for n = 5..10; the sign is (-1)^m1.
    const long sequence[] = {0, 3, 14, 40, 90, 175};
    for (int n = 6; n <= 10; ++n) {
      std::vector<int> parts{3, 3};
      parts.resize(static_cast<std::size_t>(n - 4), 1);
      CHECK(csf::cycle_coefficient(n, Partition(parts)) == (n % 2 ? -1 : 1) * sequence[n - 5]);
    }
    CHECK(csf::cycle_coefficient(5, Partition::ones(5)) == 0);
  }

  TEST_CASE("pan family") {
    CHECK(csf::pan_csf(4) == csf::star_expand(fam::paw()));
    for (int n = 4; n <= 10; ++n) CHECK(csf::pan_coefficient(n, {n}) == n - 2);
    CHECK(csf::pan_csf(6) == csf::star_expand(fam::pan(6)));
  }

  TEST_CASE("families equal the engine up to 8 vertices") {
    for (int n = 4; n <= 8; ++n) {
      CHECK(csf::path_csf(n) == csf::star_expand(fam::path(n)));
      CHECK(csf::cycle_csf(n) == csf::star_expand(fam::cycle(n)));
      CHECK(csf::pan_csf(n) == csf::star_expand(fam::pan(n)));
    }
  }

  TEST_CASE("leading partitions") {
    auto six = csf::unicyclic_decompose(paper::triangle_with_tree().graph);
    CHECK(csf::leading_partition_unicyclic(six) == Partition{3, 2, 1});
    auto big = csf::unicyclic_decompose(paper::leading_example().graph);
    CHECK(csf::leading_partition_unicyclic(big) == Partition{3, 3, 3, 2, 2, 2, 2, 1, 1});
    CHECK(csf::leading_partition_unicyclic(csf::unicyclic_decompose(fam::cycle(6))) == Partition{2, 1, 1, 1, 1});
  }

  TEST_CASE("leaf counts") {
    CHECK(csf::num_leaves_from_leading({3, 2, 1}, csf::LeafCase::SingleTree) == 2);
    CHECK(csf::num_leaves_from_leading({3, 3, 2, 1, 1}, csf::LeafCase::MultipleTrees) == 5);
  }

  TEST_CASE("tree lead coefficients") {
    CHECK(csf::lead_coeff_tree({2}) == -1);
    CHECK(lead(fam::path(5)) == -1);
    CHECK(csf::lead_coeff_tree({}) == 1);
    CHECK(csf::lead_coeff_tree({4}) == -3);
    CHECK(lead(spider()) == -3);
    CHECK(csf::lead_coeff_tree(csf::deep_degrees(spider())) == -3);
  }

  TEST_CASE("single-tree lead coefficients") {
    CHECK(csf::lead_coeff_unicyclic_r1(3, {2}, true) == -2);
    CHECK(lead(paper::triangle_with_tree().graph) == -2);
    CHECK(csf::lead_coeff_unicyclic_r1(3, {}, false) == 1);
    CHECK(lead(fam::paw()) == 1);
    auto cut = csf::rooted_cut_profile(fam::pan(6));
    CHECK(csf::lead_coeff_unicyclic_r1(cut.c, cut.deep_degrees, cut.root_is_sprout) == lead(fam::pan(6)));
  }

  TEST_CASE("several-tree lead coefficients") {
    auto fig = paper::fourteen_vertex().graph;
    CHECK(csf::lead_coeff_unicyclic_rge2(csf::deep_vertex_profile(fig), 3) == -2);
    CHECK(lead(fig) == -2);
    CHECK(csf::lead_coeff_unicyclic_rge2({}, 2) == 1);
    auto sprouts = four_sprouts();
    auto profile = csf::deep_vertex_profile(sprouts);
    CHECK(profile.sprout_degrees == std::vector<int>{3, 3, 3, 3});
    CHECK(csf::lead_coeff_unicyclic_rge2(profile, 4) == 11);
    CHECK(lead(sprouts) == 11);
    CHECK_THROWS_AS((void)csf::lead_coeff_unicyclic_rge2({}, 1), csf::DomainError);
  }

  TEST_CASE("cycle lead coefficient") {
    for (int n = 3; n <= 9; ++n) CHECK(csf::lead_coeff_cycle(n) == lead(fam::cycle(n)));
  }

  TEST_CASE("cuttlefish leading partitions") {
    CHECK(csf::cuttlefish_leading(3, 1) == Partition{2, 2});
    CHECK(csf::leading_term(csf::star_expand(fam::paw())).partition == Partition{2, 2});
    CHECK(csf::cuttlefish_leading(4, 2) == Partition{3, 2, 1});
    CHECK(csf::cuttlefish_leading(5, 3) == Partition{4, 2, 1, 1});
    for (int c = 3; c <= 6; ++c) {
      for (int t = 1; t <= 4; ++t) {
        CHECK(csf::cuttlefish_leading(c, t) == csf::leading_term(csf::star_expand(fam::cuttlefish(c, t))).partition);
      }
    }
  }

  TEST_CASE("bicyclic top coefficient") {
    CHECK(csf::bicyclic_cn(csf::BicyclicShape::TypeOne, 3, 3, 1) == 4);
    CHECK(csf::star_expand(fam::bicyclic_type_one(3, 3, 2)).coefficient({6}) == 4);
    CHECK(csf::bicyclic_cn(csf::BicyclicShape::TypeTwo, 3, 3, 1) == 4);
    CHECK(csf::bicyclic_cn(csf::BicyclicShape::TypeTwo, 4, 4, 2) == 7);
    CHECK(csf::star_expand(fam::bicyclic_type_two(4, 4, 2)).coefficient({5}) == 7);
  }

  TEST_CASE("alternating elementary symmetric identity") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> len(0, 7), deg(2, 9);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> d(static_cast<std::size_t>(len(rng)));
      for (int& x : d) x = deg(rng);
      Integer product = 1;
      for (int x : d) product *= x - 1;
      Integer sum = 0;
      const int p = static_cast<int>(d.size());
      for (int j = 0; j <= p; ++j) sum += (j % 2 ? -1 : 1) * csf::elementary_symmetric(d, p - j);
      CHECK(product == sum);
    }
    CHECK(csf::elementary_symmetric({2, 3, 4}, 2) == 26);
    CHECK(csf::elementary_symmetric({2, 3, 4}, 0) == 1);
    CHECK(csf::elementary_symmetric({2, 3, 4}, 4) == 0);
  }
}
