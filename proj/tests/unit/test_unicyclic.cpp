#include <algorithm>

#include "csf/enumerate.hpp"
#include "csf/errors.hpp"
#include "csf/families.hpp"
#include "csf/unicyclic.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "paper_graphs.hpp"

using csf::Partition;
namespace fam = csf::families;

namespace {

using Slot = std::pair<int, Partition>;

// All rotations and reflections of a cyclic sequence.
std::vector<std::vector<Slot>> dihedral(const std::vector<Slot>& seq) {
  std::vector<std::vector<Slot>> out;
  const std::size_t c = seq.size();
  for (int flip = 0; flip < 2; ++flip) {
    for (std::size_t s = 0; s < c; ++s) {
      std::vector<Slot> v;
      for (std::size_t i = 0; i < c; ++i) v.push_back(seq[flip ? (s + c - i) % c : (s + i) % c]);
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("unicyclic") {
  TEST_CASE("decomposition of the 19-vertex example") {
    auto d = csf::unicyclic_decompose(paper::leading_example().graph);
    CHECK(d.c() == 4);
    CHECK(d.r == 4);
    std::vector<Slot> got;
    for (int i = 0; i < d.c(); ++i) got.emplace_back(d.lambda[i], d.mu_blocks[i]);
    std::vector<Slot> drawn{{3, {3}}, {2, {2}}, {1, {3, 1}}, {2, {2}}};
    auto images = dihedral(drawn);
    CHECK(std::find(images.begin(), images.end(), got) != images.end());
    CHECK(csf::sort_concat(d.lambda, d.mu) == Partition{3, 3, 3, 2, 2, 2, 2, 1, 1});
  }

  TEST_CASE("cycles and the paw") {
    auto c5 = csf::unicyclic_decompose(fam::cycle(5));
    CHECK(c5.c() == 5);
    CHECK(c5.r == 0);
    CHECK(c5.lambda == std::vector<int>(5, 1));
    CHECK(c5.mu.empty());

    auto paw = csf::unicyclic_decompose(fam::paw());
    CHECK(paw.c() == 3);
    CHECK(paw.r == 1);
    auto lam = paw.lambda;
    std::sort(lam.begin(), lam.end());
    CHECK(lam == std::vector<int>{1, 1, 2});
    CHECK(paw.mu.empty());
  }

  TEST_CASE("trees partition the vertex set") {
    auto d = csf::unicyclic_decompose(paper::fourteen_vertex().graph);
    std::vector<int> all;
    for (const auto& t : d.trees) all.insert(all.end(), t.begin(), t.end());
    std::sort(all.begin(), all.end());
    CHECK(all.size() == 14);
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (int i = 0; i < d.c(); ++i) CHECK(d.trees[i].front() == d.cycle[i]);
  }

  TEST_CASE("lambda and mu reassemble the leaf components, n up to 10") {
    for (int n = 3; n <= 10; ++n) {
      for (const auto& g : csf::enumerate_unicyclic(n)) {
        auto d = csf::unicyclic_decompose(g);
        CHECK(csf::sort_concat(d.lambda, d.mu) == csf::leaf_component_partition(g));
        auto facts = oracle::unicyclic_facts(g);
        CHECK(d.c() == facts.c);
        CHECK(d.r == facts.r);
      }
    }
  }

  TEST_CASE("orientation is a labelling invariant") {
    std::mt19937_64 rng(3);
    for (const auto& g : csf::enumerate_unicyclic(9)) {
      auto d = csf::unicyclic_decompose(g);
      auto e = csf::unicyclic_decompose(csf::relabel(g, oracle::random_permutation(9, rng)));
      CHECK(d.lambda == e.lambda);
      CHECK(d.mu_blocks == e.mu_blocks);
    }
  }

  TEST_CASE("rejects other graphs") {
    CHECK_THROWS_AS(csf::unicyclic_decompose(fam::path(5)), csf::NotUnicyclicError);
    CHECK_THROWS_AS(csf::unicyclic_decompose(fam::complete(4)), csf::NotUnicyclicError);
    CHECK_THROWS_AS(csf::hook_params(csf::disjoint_union(fam::cycle(3), fam::cycle(3))), csf::NotUnicyclicError);
  }

  TEST_CASE("profiles") {
    auto p = csf::deep_vertex_profile(paper::fourteen_vertex().graph);
    CHECK(p.sprout_degrees == std::vector<int>{3});
    auto d = p.nonsprout_deep_degrees;
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<int>{2, 2});

    auto cut = csf::rooted_cut_profile(paper::triangle_with_tree().graph);
    CHECK(cut.c == 3);
    CHECK(cut.root_is_sprout);
    CHECK(cut.deep_degrees == std::vector<int>{2});

    auto paw = csf::rooted_cut_profile(fam::paw());
    CHECK_FALSE(paw.root_is_sprout);
    CHECK(paw.deep_degrees.empty());

    CHECK(csf::deep_degrees(fam::path(5)) == std::vector<int>{2});
  }

  TEST_CASE("hook parameters") {
    auto left = csf::hook_params(paper::hooks_left().graph);
    CHECK(left.n == 8);
    CHECK(left.c == 4);
    CHECK(left.k == 4);
    CHECK(left.r == 4);
    auto right = csf::hook_params(paper::hooks_right().graph);
    CHECK(right.k == 5);
    CHECK(right.r == 1);
  }

  TEST_CASE("cuttlefish recognition") {
    CHECK(csf::is_cuttlefish(fam::paw()));
    CHECK(csf::is_cuttlefish(fam::cuttlefish(5, 3)));
    CHECK_FALSE(csf::is_cuttlefish(fam::cycle(5)));
    CHECK_FALSE(csf::is_cuttlefish(paper::triangle_with_tree().graph));
    for (int n = 3; n <= 10; ++n) {
      for (const auto& g : csf::enumerate_unicyclic(n)) CHECK(csf::is_cuttlefish(g) == oracle::unicyclic_facts(g).cuttlefish);
    }
  }
}
